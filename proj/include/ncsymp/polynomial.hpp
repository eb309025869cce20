#ifndef NCSYMP_POLYNOMIAL_HPP
#define NCSYMP_POLYNOMIAL_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "ncsymp/rational.hpp"

namespace ncsymp {

/// Dense univariate polynomial over the rationals.  Trailing zero
/// coefficients are always stripped, so the zero polynomial has an empty
/// coefficient vector and equality is plain vector comparison.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
  }
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
  Rat constant_term() const { return coeff(0); }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rat(Int(k));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return Poly(std::move(out));
  }

  friend Poly operator-(const Poly& a) {
    std::vector<Rat> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
  }

  friend Poly operator*(const Poly& a, const Rat& s) { return a * Poly(s); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = num;
    std::vector<Rat> quot(num.coeffs_.size(), Rat(0));
    const long dd = den.degree();
    const Rat lead = den.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
      const long shift = rem.degree() - dd;
      const Rat factor = rem.leading() / lead;
      quot[static_cast<std::size_t>(shift)] += factor;
      std::vector<Rat> sub(static_cast<std::size_t>(shift) + den.coeffs_.size(), Rat(0));
      for (std::size_t i = 0; i < den.coeffs_.size(); ++i)
        sub[static_cast<std::size_t>(shift) + i] = den.coeffs_[i] * factor;
      rem = rem - Poly(std::move(sub));
    }
    return {Poly(std::move(quot)), rem};
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rat& c = coeffs_[k];
      if (c == 0) continue;
      if (!out.empty()) out += c > 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      Rat a = c > 0 ? c : Rat(-c);
      const bool unit = (a == 1) && k > 0;
      if (!unit) {
        out += rat_num(a).str();
        if (rat_den(a) != 1) out += "/" + rat_den(a).str();
      }
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    // monic normalization
    Rat inv = Rat(1) / a.leading();
    a = a * inv;
  }
  return a;
}

/// Number of distinct real roots, by Sturm's theorem over (-inf, +inf).
inline int real_root_count(const Poly& p) {
  if (p.is_constant()) return 0;
  // Sturm chain on the square-free part.
  Poly sf = Poly::divmod(p, poly_gcd(p, p.derivative())).first;
  std::vector<Poly> chain{sf, sf.derivative()};
  while (!chain.back().is_zero()) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    chain.push_back(-Poly::divmod(a, b).second);
  }
  chain.pop_back();
  auto variations = [&chain](int at_plus_inf) {
    int count = 0, prev = 0;
    for (const Poly& q : chain) {
      if (q.is_zero()) continue;
      int s = sign_of(q.leading());
      if (at_plus_inf == 0 && q.degree() % 2 == 1) s = -s;  // sign at -inf
      if (prev != 0 && s != 0 && s != prev) ++count;
      if (s != 0) prev = s;
    }
    return count;
  };
  return variations(0) - variations(1);
}

/// Exact test for p(t) > 0 at every real t.
inline bool poly_positive_everywhere(const Poly& p) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return p.constant_term() > 0;
  return p.eval(Rat(0)) > 0 && real_root_count(p) == 0;
}

}  // namespace ncsymp

#endif  // NCSYMP_POLYNOMIAL_HPP
