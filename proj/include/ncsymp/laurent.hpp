#ifndef NCSYMP_LAURENT_HPP
#define NCSYMP_LAURENT_HPP

#include <map>
#include <utility>

namespace ncsymp {

/// Laurent element in q^(1/2) over coefficients C.  Exponents count half
/// powers of q: exponent 1 is q^(1/2), exponent 2 is q.  Zero coefficients
/// are never stored, so equality is map comparison.  Coefficient arithmetic
/// is supplied by the ring layer.
template <class C>
class Laurent {
 public:
  using Terms = std::map<long, C>;

  Laurent() = default;
  explicit Laurent(Terms terms) : terms_(std::move(terms)) {}

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Inserts a term; the caller guarantees the coefficient is nonzero.
  void set(long halfexp, C coeff) { terms_.emplace(halfexp, std::move(coeff)); }

  friend bool operator==(const Laurent& x, const Laurent& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }

 private:
  Terms terms_;
};

}  // namespace ncsymp

#endif  // NCSYMP_LAURENT_HPP
