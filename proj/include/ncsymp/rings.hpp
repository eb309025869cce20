#ifndef NCSYMP_RINGS_HPP
#define NCSYMP_RINGS_HPP

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ncsymp/cyclotomic.hpp"
#include "ncsymp/dual.hpp"
#include "ncsymp/errors.hpp"
#include "ncsymp/laurent.hpp"
#include "ncsymp/matrix.hpp"
#include "ncsymp/polynomial.hpp"
#include "ncsymp/rational.hpp"
#include "ncsymp/rng.hpp"

namespace ncsymp {

using json = nlohmann::json;

/// A unital ring with an anti-involution sigma.  Every instance also knows
/// how to encode its elements as JSON and how to draw bounded-height random
/// elements from a SplitMix64 stream.
template <class R>
concept InvolutiveRing = requires(const R r, const typename R::Elem& a, const typename R::Elem& b,
                                  SplitMix64& g, const json& j) {
  { r.zero() } -> std::same_as<typename R::Elem>;
  { r.one() } -> std::same_as<typename R::Elem>;
  { r.from_int(long{}) } -> std::same_as<typename R::Elem>;
  { r.add(a, b) } -> std::same_as<typename R::Elem>;
  { r.neg(a) } -> std::same_as<typename R::Elem>;
  { r.mul(a, b) } -> std::same_as<typename R::Elem>;
  { r.sigma(a) } -> std::same_as<typename R::Elem>;
  { r.eq(a, b) } -> std::convertible_to<bool>;
  { r.try_invert(a) } -> std::same_as<std::optional<typename R::Elem>>;
  { r.commutative() } -> std::convertible_to<bool>;
  { r.trivial_sigma() } -> std::convertible_to<bool>;
  { r.descriptor() } -> std::convertible_to<std::string>;
  { r.to_json(a) } -> std::convertible_to<json>;
  { r.from_json(j) } -> std::same_as<typename R::Elem>;
  { r.sample(g) } -> std::same_as<typename R::Elem>;
  { r.sample_unit(g) } -> std::same_as<typename R::Elem>;
};

template <InvolutiveRing R>
typename R::Elem sub(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
  return r.add(a, r.neg(b));
}

template <InvolutiveRing R>
bool is_zero(const R& r, const typename R::Elem& a) {
  return r.eq(a, r.zero());
}

template <InvolutiveRing R>
bool is_sigma_fixed(const R& r, const typename R::Elem& a) {
  return r.eq(r.sigma(a), a);
}

template <InvolutiveRing R>
typename R::Elem invert(const R& r, const typename R::Elem& a) {
  auto inv = r.try_invert(a);
  if (!inv) throw not_a_unit("not a unit in " + r.descriptor());
  return *inv;
}

/// sigma(b) * x * b
template <InvolutiveRing R>
typename R::Elem congruence(const R& r, const typename R::Elem& x, const typename R::Elem& b) {
  return r.mul(r.mul(r.sigma(b), x), b);
}

template <InvolutiveRing R>
typename R::Elem ring_pow(const R& r, typename R::Elem base, unsigned long e) {
  typename R::Elem acc = r.one();
  while (e > 0) {
    if (e & 1) acc = r.mul(acc, base);
    base = r.mul(base, base);
    e >>= 1;
  }
  return acc;
}

namespace jsondec {

inline Int decode_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw bad_element("expected an integer literal");
}

inline Rat decode_rat(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_number_unsigned()) return Rat(Int(j.get<unsigned long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw bad_element("expected a rational literal");
}

}  // namespace jsondec

// ---------------------------------------------------------------------------
// scalar rings

struct IntegerRing {
  using Elem = Int;

  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  Elem from_int(long v) const { return Int(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sigma(const Elem& a) const { return a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<Elem> try_invert(const Elem& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  bool commutative() const { return true; }
  bool trivial_sigma() const { return true; }
  std::string descriptor() const { return "int"; }
  json to_json(const Elem& a) const { return a.str(); }
  Elem from_json(const json& j) const { return jsondec::decode_int(j); }
  Elem sample(SplitMix64& g) const { return Int(g.range(-10, 10)); }
  Elem sample_unit(SplitMix64& g) const { return Int(g.flip() ? 1 : -1); }
  std::string str(const Elem& a) const { return a.str(); }
};

struct RationalRing {
  using Elem = Rat;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long v) const { return Rat(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sigma(const Elem& a) const { return a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<Elem> try_invert(const Elem& a) const {
    if (a == 0) return std::nullopt;
    return Rat(1) / a;
  }
  bool commutative() const { return true; }
  bool trivial_sigma() const { return true; }
  std::string descriptor() const { return "rat"; }
  json to_json(const Elem& a) const { return rat_to_string(a); }
  Elem from_json(const json& j) const { return jsondec::decode_rat(j); }
  Elem sample(SplitMix64& g) const { return make_rat(Int(g.range(-10, 10)), Int(g.range(1, 10))); }
  Elem sample_unit(SplitMix64& g) const {
    for (;;) {
      Elem x = sample(g);
      if (x != 0) return x;
    }
  }
  std::string str(const Elem& a) const { return rat_to_string(a); }
};

/// Univariate polynomials over the rationals with the identity involution.
struct PolyRing {
  using Elem = Poly;

  Elem zero() const { return Poly(); }
  Elem one() const { return Poly(Rat(1)); }
  Elem from_int(long v) const { return Poly(Rat(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sigma(const Elem& a) const { return a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<Elem> try_invert(const Elem& a) const {
    if (!a.is_constant() || a.is_zero()) return std::nullopt;
    return Poly(Rat(1) / a.constant_term());
  }
  bool commutative() const { return true; }
  bool trivial_sigma() const { return true; }
  std::string descriptor() const { return "poly"; }
  json to_json(const Elem& a) const {
    json coeffs = json::array();
    for (const Rat& c : a.coeffs()) coeffs.push_back(rat_to_string(c));
    return json{{"coeffs", coeffs}};
  }
  Elem from_json(const json& j) const {
    if (j.is_object() && j.contains("coeffs")) {
      std::vector<Rat> coeffs;
      for (const auto& c : j.at("coeffs")) coeffs.push_back(jsondec::decode_rat(c));
      return Poly(std::move(coeffs));
    }
    return Poly(jsondec::decode_rat(j));
  }
  Elem sample(SplitMix64& g) const {
    std::vector<Rat> coeffs(static_cast<std::size_t>(g.range(1, 3)));
    for (auto& c : coeffs) c = make_rat(Int(g.range(-5, 5)), Int(g.range(1, 3)));
    return Poly(std::move(coeffs));
  }
  Elem sample_unit(SplitMix64& g) const {
    for (;;) {
      Rat c = make_rat(Int(g.range(-5, 5)), Int(g.range(1, 3)));
      if (c != 0) return Poly(c);
    }
  }
  std::string str(const Elem& a) const { return a.str(); }
};

/// The cyclotomic field Q(zeta_n); sigma is zeta -> zeta^(-1) unless the
/// trivial involution was requested.
struct CycRing {
  long order_;
  bool conjugation_;

  explicit CycRing(long order, bool conjugation = true) : order_(order), conjugation_(conjugation) {
    if (order < 1) throw bad_descriptor("cyclotomic order must be >= 1");
    cyclotomic_polynomial(order);  // validate and warm the cache
  }

  using Elem = Cyc;

  long order() const { return order_; }
  Elem zero() const { return Cyc(order_, Rat(0)); }
  Elem one() const { return Cyc(order_, Rat(1)); }
  Elem from_int(long v) const { return Cyc(order_, Rat(v)); }
  Elem zeta(long power = 1) const { return Cyc::zeta(order_, power); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sigma(const Elem& a) const { return conjugation_ ? a.conj() : a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<Elem> try_invert(const Elem& a) const {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
  bool commutative() const { return true; }
  bool trivial_sigma() const { return !conjugation_; }
  std::string descriptor() const {
    std::string d = "cyc:" + std::to_string(order_);
    if (!conjugation_) d += ":triv";
    return d;
  }
  json to_json(const Elem& a) const {
    json coeffs = json::array();
    for (const Rat& c : a.coefficients()) coeffs.push_back(rat_to_string(c));
    return json{{"n", order_}, {"coeffs", coeffs}};
  }
  Elem from_json(const json& j) const {
    if (j.is_object() && j.contains("coeffs")) {
      if (j.contains("n") && j.at("n").get<long>() != order_)
        throw bad_element("cyclotomic order does not match the ring");
      std::vector<Rat> coeffs;
      for (const auto& c : j.at("coeffs")) coeffs.push_back(jsondec::decode_rat(c));
      return Cyc(order_, Poly(std::move(coeffs)));
    }
    return Cyc(order_, jsondec::decode_rat(j));
  }
  Elem sample(SplitMix64& g) const {
    std::vector<Rat> coeffs(static_cast<std::size_t>(euler_phi(order_)));
    for (auto& c : coeffs) c = Rat(g.range(-4, 4));
    return Cyc(order_, Poly(std::move(coeffs)));
  }
  Elem sample_unit(SplitMix64& g) const {
    for (;;) {
      Elem x = sample(g);
      if (!x.is_zero()) return x;
    }
  }
  std::string str(const Elem& a) const { return a.rep().str("z"); }
};

/// Dual numbers over the rationals; sigma is either trivial or the
/// conjugation a + alpha eps -> a - alpha eps.
struct DualRing {
  bool conjugation_;

  explicit DualRing(bool conjugation) : conjugation_(conjugation) {}

  using Elem = Dual;

  Elem zero() const { return Dual(Rat(0)); }
  Elem one() const { return Dual(Rat(1)); }
  Elem from_int(long v) const { return Dual(Rat(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem sigma(const Elem& a) const { return conjugation_ ? a.conj() : a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<Elem> try_invert(const Elem& a) const {
    if (a.a == 0) return std::nullopt;
    return a.inverse();
  }
  bool commutative() const { return true; }
  bool trivial_sigma() const { return !conjugation_; }
  std::string descriptor() const { return conjugation_ ? "dual:conj" : "dual:triv"; }
  json to_json(const Elem& x) const { return json{{"a", rat_to_string(x.a)}, {"eps", rat_to_string(x.eps)}}; }
  Elem from_json(const json& j) const {
    if (j.is_object() && j.contains("a")) {
      Rat eps = j.contains("eps") ? jsondec::decode_rat(j.at("eps")) : Rat(0);
      return Dual(jsondec::decode_rat(j.at("a")), eps);
    }
    return Dual(jsondec::decode_rat(j));
  }
  Elem sample(SplitMix64& g) const {
    return Dual(make_rat(Int(g.range(-10, 10)), Int(g.range(1, 10))), Rat(g.range(-5, 5)));
  }
  Elem sample_unit(SplitMix64& g) const {
    for (;;) {
      Elem x = sample(g);
      if (x.a != 0) return x;
    }
  }
  std::string str(const Elem& x) const { return rat_to_string(x.a) + " + (" + rat_to_string(x.eps) + ")e"; }
};

// ---------------------------------------------------------------------------
// matrices over a scalar ring

/// n x n matrices over a commutative base; sigma is entrywise base-sigma
/// composed with the transpose.
template <InvolutiveRing B>
struct MatRing {
  int n_;
  B base_;

  MatRing(int n, B base) : n_(n), base_(std::move(base)) {
    if (n < 1) throw bad_descriptor("matrix dimension must be >= 1");
  }

  using Elem = SqMat<typename B::Elem>;
  using Scalar = typename B::Elem;

  int dim() const { return n_; }
  const B& base() const { return base_; }

  Elem zero() const { return Elem(n_, base_.zero()); }
  Elem one() const { return scalar(base_.one()); }
  Elem from_int(long v) const { return scalar(base_.from_int(v)); }
  Elem scalar(const Scalar& c) const {
    Elem m(n_, base_.zero());
    for (int i = 0; i < n_; ++i) m.at(i, i) = c;
    return m;
  }

  Elem add(const Elem& a, const Elem& b) const {
    check(a), check(b);
    Elem out(n_, base_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = base_.add(a.at(i, j), b.at(i, j));
    return out;
  }
  Elem neg(const Elem& a) const {
    check(a);
    Elem out(n_, base_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = base_.neg(a.at(i, j));
    return out;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    check(a), check(b);
    Elem out(n_, base_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        Scalar acc = base_.zero();
        for (int k = 0; k < n_; ++k) acc = base_.add(acc, base_.mul(a.at(i, k), b.at(k, j)));
        out.at(i, j) = acc;
      }
    return out;
  }
  Elem sigma(const Elem& a) const {
    check(a);
    Elem out(n_, base_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = base_.sigma(a.at(j, i));
    return out;
  }
  Elem transpose(const Elem& a) const {
    check(a);
    Elem out(n_, base_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = a.at(j, i);
    return out;
  }
  bool eq(const Elem& a, const Elem& b) const {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!base_.eq(a.at(i, j), b.at(i, j))) return false;
    return true;
  }

  /// Exact determinant: cofactor expansion up to 4x4, fraction-free Gaussian
  /// elimination (Bareiss) above.
  Scalar det(const Elem& a) const {
    check(a);
    if (n_ <= 4) return det_cofactor(a, [&](int) { return true; });
    return det_bareiss(a);
  }

  /// Transposed cofactor matrix; adj(a) * a = det(a) * id over any
  /// commutative base.
  Elem adjugate(const Elem& a) const {
    check(a);
    Elem out(n_, base_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        Scalar c = minor_det(a, j, i);
        out.at(i, j) = ((i + j) % 2 == 0) ? c : base_.neg(c);
      }
    return out;
  }

  std::optional<Elem> try_invert(const Elem& a) const {
    if (a.dim() != n_) return std::nullopt;
    auto dinv = base_.try_invert(det(a));
    if (!dinv) return std::nullopt;
    Elem adj = adjugate(a);
    Elem out(n_, base_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = base_.mul(*dinv, adj.at(i, j));
    return out;
  }

  bool commutative() const { return n_ == 1 && base_.commutative(); }
  bool trivial_sigma() const { return n_ == 1 && base_.trivial_sigma(); }
  std::string descriptor() const { return "mat:" + std::to_string(n_) + ":" + base_.descriptor(); }

  json to_json(const Elem& a) const {
    check(a);
    json rows = json::array();
    for (int i = 0; i < n_; ++i) {
      json row = json::array();
      for (int j = 0; j < n_; ++j) row.push_back(base_.to_json(a.at(i, j)));
      rows.push_back(row);
    }
    return rows;
  }
  Elem from_json(const json& j) const {
    if (!j.is_array()) return scalar(base_.from_json(j));  // scalar shorthand c -> c * id
    if (static_cast<int>(j.size()) != n_) throw bad_element("matrix row count");
    std::vector<Scalar> data;
    data.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : j) {
      if (!row.is_array() || static_cast<int>(row.size()) != n_) throw bad_element("matrix column count");
      for (const auto& cell : row) data.push_back(base_.from_json(cell));
    }
    return Elem(n_, std::move(data));
  }

  Elem sample(SplitMix64& g) const {
    Elem out(n_, base_.zero());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = base_.sample(g);
    return out;
  }

  /// Random unit: a short product of elementary row operations, each of which
  /// is invertible by construction.
  Elem sample_unit(SplitMix64& g) const {
    Elem acc = one();
    const int ops = static_cast<int>(g.range(1, 4));
    for (int s = 0; s < ops; ++s) {
      Elem e = one();
      if (n_ == 1 || g.below(4) == 0) {
        int i = static_cast<int>(g.below(static_cast<std::uint64_t>(n_)));
        e.at(i, i) = base_.sample_unit(g);
      } else {
        int i = static_cast<int>(g.below(static_cast<std::uint64_t>(n_)));
        int j = static_cast<int>(g.below(static_cast<std::uint64_t>(n_ - 1)));
        if (j >= i) ++j;
        e.at(i, j) = base_.sample(g);
      }
      acc = mul(acc, e);
    }
    return acc;
  }

  std::string str(const Elem& a) const { return to_json(a).dump(); }

 private:
  void check(const Elem& a) const {
    if (a.dim() != n_) throw dimension_mismatch("matrix dimension vs ring");
  }

  template <class Keep>
  Scalar det_cofactor(const Elem& a, Keep) const {
    std::vector<int> idx(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) idx[static_cast<std::size_t>(i)] = i;
    return det_rec(a, 0, idx);
  }

  Scalar det_rec(const Elem& a, int row, std::vector<int>& cols) const {
    if (cols.size() == 1) return a.at(row, cols[0]);
    Scalar acc = base_.zero();
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
      int col = cols[pick];
      std::vector<int> rest;
      rest.reserve(cols.size() - 1);
      for (std::size_t t = 0; t < cols.size(); ++t)
        if (t != pick) rest.push_back(cols[t]);
      Scalar term = base_.mul(a.at(row, col), det_rec(a, row + 1, rest));
      acc = (pick % 2 == 0) ? base_.add(acc, term) : sub(base_, acc, term);
    }
    return acc;
  }

  Scalar minor_det(const Elem& a, int drop_row, int drop_col) const {
    if (n_ == 1) return base_.one();
    std::vector<Scalar> data;
    data.reserve(static_cast<std::size_t>(n_ - 1) * (n_ - 1));
    for (int i = 0; i < n_; ++i) {
      if (i == drop_row) continue;
      for (int j = 0; j < n_; ++j) {
        if (j == drop_col) continue;
        data.push_back(a.at(i, j));
      }
    }
    MatRing<B> sub_ring(n_ - 1, base_);
    return sub_ring.det(Elem(n_ - 1, std::move(data)));
  }

  Scalar det_bareiss(const Elem& a) const {
    Elem m = a;
    Scalar prev = base_.one();
    bool negate = false;
    for (int k = 0; k < n_ - 1; ++k) {
      if (base_.eq(m.at(k, k), base_.zero())) {
        int swap = -1;
        for (int i = k + 1; i < n_; ++i)
          if (!base_.eq(m.at(i, k), base_.zero())) {
            swap = i;
            break;
          }
        if (swap < 0) return base_.zero();
        for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(swap, j));
        negate = !negate;
      }
      for (int i = k + 1; i < n_; ++i)
        for (int j = k + 1; j < n_; ++j) {
          Scalar num = sub(base_, base_.mul(m.at(i, j), m.at(k, k)), base_.mul(m.at(i, k), m.at(k, j)));
          auto q = exact_div(base_, num, prev);
          if (!q) throw error("fraction-free elimination: inexact division");
          m.at(i, j) = *q;
        }
      prev = m.at(k, k);
    }
    Scalar d = m.at(n_ - 1, n_ - 1);
    return negate ? base_.neg(d) : d;
  }
};

// exact division helpers used by fraction-free elimination
inline std::optional<Int> exact_div(const IntegerRing&, const Int& a, const Int& b) {
  if (b == 0) return std::nullopt;
  Int q = a / b;
  if (q * b != a) return std::nullopt;
  return q;
}
inline std::optional<Rat> exact_div(const RationalRing&, const Rat& a, const Rat& b) {
  if (b == 0) return std::nullopt;
  return a / b;
}
inline std::optional<Poly> exact_div(const PolyRing&, const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  auto [q, r] = Poly::divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}
inline std::optional<Cyc> exact_div(const CycRing&, const Cyc& a, const Cyc& b) {
  if (b.is_zero()) return std::nullopt;
  return a * b.inverse();
}
inline std::optional<Dual> exact_div(const DualRing&, const Dual& a, const Dual& b) {
  if (b.a == 0) return std::nullopt;
  return a * b.inverse();
}

// ---------------------------------------------------------------------------
// Laurent extension A[q^(+-1/2)] with sigma(q) = q^(-1)

template <InvolutiveRing B>
struct LaurentRing {
  B base_;

  explicit LaurentRing(B base) : base_(std::move(base)) {}

  using Elem = Laurent<typename B::Elem>;
  using Scalar = typename B::Elem;

  const B& base() const { return base_; }

  Elem zero() const { return Elem(); }
  Elem one() const { return monomial(0, base_.one()); }
  Elem from_int(long v) const { return constant(base_.from_int(v)); }
  Elem constant(const Scalar& c) const { return monomial(0, c); }
  Elem monomial(long halfexp, const Scalar& c) const {
    Elem out;
    if (!base_.eq(c, base_.zero())) out.set(halfexp, c);
    return out;
  }
  /// q^(halfexp/2) as an element; q itself is q_power(2).
  Elem q_power(long halfexp) const { return monomial(halfexp, base_.one()); }

  Elem add(const Elem& x, const Elem& y) const {
    typename Elem::Terms out = x.terms();
    for (const auto& [e, c] : y.terms()) {
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, c);
      } else {
        it->second = base_.add(it->second, c);
        if (base_.eq(it->second, base_.zero())) out.erase(it);
      }
    }
    return Elem(std::move(out));
  }
  Elem neg(const Elem& x) const {
    typename Elem::Terms out;
    for (const auto& [e, c] : x.terms()) out.emplace(e, base_.neg(c));
    return Elem(std::move(out));
  }
  Elem mul(const Elem& x, const Elem& y) const {
    typename Elem::Terms out;
    for (const auto& [ex, cx] : x.terms())
      for (const auto& [ey, cy] : y.terms()) {
        Scalar prod = base_.mul(cx, cy);
        auto it = out.find(ex + ey);
        if (it == out.end()) {
          if (!base_.eq(prod, base_.zero())) out.emplace(ex + ey, std::move(prod));
        } else {
          it->second = base_.add(it->second, prod);
          if (base_.eq(it->second, base_.zero())) out.erase(it);
        }
      }
    return Elem(std::move(out));
  }
  /// Negates every q^(1/2)-exponent and applies the base involution to the
  /// coefficients.
  Elem sigma(const Elem& x) const {
    typename Elem::Terms out;
    for (const auto& [e, c] : x.terms()) out.emplace(-e, base_.sigma(c));
    return Elem(std::move(out));
  }
  bool eq(const Elem& x, const Elem& y) const {
    if (x.terms().size() != y.terms().size()) return false;
    auto it = y.terms().begin();
    for (const auto& [e, c] : x.terms()) {
      if (it->first != e || !base_.eq(c, it->second)) return false;
      ++it;
    }
    return true;
  }
  std::optional<Elem> try_invert(const Elem& x) const {
    if (x.terms().size() != 1) return std::nullopt;
    const auto& [e, c] = *x.terms().begin();
    auto ci = base_.try_invert(c);
    if (!ci) return std::nullopt;
    return monomial(-e, *ci);
  }
  bool commutative() const { return base_.commutative(); }
  bool trivial_sigma() const { return false; }
  std::string descriptor() const { return "laurentq:" + base_.descriptor(); }

  json to_json(const Elem& x) const {
    json terms = json::object();
    for (const auto& [e, c] : x.terms()) terms[std::to_string(e)] = base_.to_json(c);
    return json{{"terms", terms}};
  }
  Elem from_json(const json& j) const {
    if (j.is_object() && j.contains("terms")) {
      typename Elem::Terms out;
      for (const auto& [key, val] : j.at("terms").items()) {
        long e = std::stol(key);
        Scalar c = base_.from_json(val);
        if (!base_.eq(c, base_.zero())) out.emplace(e, std::move(c));
      }
      return Elem(std::move(out));
    }
    return constant(base_.from_json(j));  // scalar shorthand
  }

  Elem sample(SplitMix64& g) const {
    Elem out;
    const int terms = static_cast<int>(g.range(0, 3));
    for (int t = 0; t < terms; ++t) out = add(out, monomial(g.range(-4, 4), base_.sample(g)));
    return out;
  }
  Elem sample_unit(SplitMix64& g) const { return monomial(g.range(-2, 2), base_.sample_unit(g)); }

  /// Substitutes q^(1/2) := 1, collapsing into the base ring.
  Scalar specialize_q1(const Elem& x) const {
    Scalar acc = base_.zero();
    for (const auto& [e, c] : x.terms()) acc = base_.add(acc, c);
    return acc;
  }

  std::string str(const Elem& x) const { return to_json(x).dump(); }
};

// ---------------------------------------------------------------------------
// descriptor parsing and runtime dispatch

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline long parse_positive_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size() || v < 1) throw bad_descriptor("bad " + what + ": " + s);
    return v;
  } catch (const std::exception&) {
    throw bad_descriptor("bad " + what + ": " + s);
  }
}

template <class F>
decltype(auto) with_scalar_ring(const std::vector<std::string>& parts, const std::string& full, F&& f) {
  const std::string& kind = parts.at(0);
  if (kind == "int" && parts.size() == 1) return f(IntegerRing{});
  if (kind == "rat" && parts.size() == 1) return f(RationalRing{});
  if (kind == "poly" && parts.size() == 1) return f(PolyRing{});
  if (kind == "cyc" && (parts.size() == 2 || parts.size() == 3)) {
    long n = parse_positive_long(parts.at(1), "cyclotomic order");
    bool conj = true;
    if (parts.size() == 3) {
      if (parts.at(2) == "triv") conj = false;
      else if (parts.at(2) != "conj") throw bad_descriptor("bad involution flag in " + full);
    }
    return f(CycRing(n, conj));
  }
  if (kind == "dual" && parts.size() == 2) {
    if (parts.at(1) == "triv") return f(DualRing(false));
    if (parts.at(1) == "conj") return f(DualRing(true));
    throw bad_descriptor("bad involution flag in " + full);
  }
  throw bad_descriptor("unknown ring descriptor: " + full);
}

}  // namespace detail

/// Parses a ring descriptor ("int", "rat", "poly", "cyc:<n>[:triv]",
/// "dual:triv|conj", "mat:<n>:<base>", "laurentq:<base>") and invokes f with
/// the matching ring instance.
template <class F>
decltype(auto) with_ring(const std::string& descriptor, F&& f) {
  auto parts = detail::split(descriptor, ':');
  if (parts.empty()) throw bad_descriptor("empty ring descriptor");
  if (parts.at(0) == "mat") {
    if (parts.size() < 3) throw bad_descriptor("mat descriptor needs a dimension and base: " + descriptor);
    long n = detail::parse_positive_long(parts.at(1), "matrix dimension");
    std::vector<std::string> rest(parts.begin() + 2, parts.end());
    return detail::with_scalar_ring(rest, descriptor, [&](auto base) -> decltype(auto) {
      return f(MatRing<decltype(base)>(static_cast<int>(n), std::move(base)));
    });
  }
  if (parts.at(0) == "laurentq") {
    if (parts.size() < 2) throw bad_descriptor("laurentq descriptor needs a base: " + descriptor);
    std::vector<std::string> rest(parts.begin() + 1, parts.end());
    if (rest.at(0) == "mat") {
      if (rest.size() < 3) throw bad_descriptor("mat descriptor needs a dimension and base: " + descriptor);
      long n = detail::parse_positive_long(rest.at(1), "matrix dimension");
      std::vector<std::string> scalar(rest.begin() + 2, rest.end());
      return detail::with_scalar_ring(scalar, descriptor, [&](auto base) -> decltype(auto) {
        return f(LaurentRing<MatRing<decltype(base)>>(MatRing<decltype(base)>(static_cast<int>(n), std::move(base))));
      });
    }
    return detail::with_scalar_ring(rest, descriptor, [&](auto base) -> decltype(auto) {
      return f(LaurentRing<decltype(base)>(std::move(base)));
    });
  }
  return detail::with_scalar_ring(parts, descriptor, std::forward<F>(f));
}

}  // namespace ncsymp

#endif  // NCSYMP_RINGS_HPP
