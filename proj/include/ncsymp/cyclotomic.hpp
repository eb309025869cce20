#ifndef NCSYMP_CYCLOTOMIC_HPP
#define NCSYMP_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "ncsymp/errors.hpp"
#include "ncsymp/interval.hpp"
#include "ncsymp/polynomial.hpp"
#include "ncsymp/rational.hpp"

namespace ncsymp {

/// The n-th cyclotomic polynomial, computed as (x^n - 1) / prod_{d|n, d<n} Phi_d
/// and cached.  Coefficients are integers, stored as rationals.
inline const Poly& cyclotomic_polynomial(long n) {
  static std::map<long, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // compute with plain recursion on divisors, memoized through the cache
  std::vector<long> pending{n};
  while (!pending.empty()) {
    long m = pending.back();
    bool ready = true;
    for (long d = 1; d < m; ++d) {
      if (m % d == 0 && cache.find(d) == cache.end()) {
        pending.push_back(d);
        ready = false;
      }
    }
    if (!ready) continue;
    pending.pop_back();
    if (cache.count(m)) continue;
    std::vector<Rat> xm(static_cast<std::size_t>(m) + 1, Rat(0));
    xm[0] = Rat(-1);
    xm.back() = Rat(1);
    Poly num{std::vector<Rat>(xm)};
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto [quot, rem] = Poly::divmod(num, cache.at(d));
      if (!rem.is_zero()) throw error("cyclotomic polynomial division left a remainder");
      num = quot;
    }
    cache.emplace(m, num);
  }
  return cache.at(n);
}

inline long euler_phi(long n) { return cyclotomic_polynomial(n).degree(); }

/// Element of the cyclotomic field Q(zeta_n), reduced modulo Phi_n so that
/// equal values have equal coefficient vectors.
class Cyc {
 public:
  Cyc() : order_(1) {}
  Cyc(long order, Poly rep) : order_(order), rep_(reduce(order, std::move(rep))) {}
  Cyc(long order, const Rat& c) : order_(order), rep_(Poly(c)) {}

  static Cyc zeta(long order, long power = 1) {
    long k = ((power % order) + order) % order;
    std::vector<Rat> coeffs(static_cast<std::size_t>(k) + 1, Rat(0));
    coeffs.back() = Rat(1);
    return Cyc(order, Poly(std::move(coeffs)));
  }

  long order() const { return order_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_constant(); }
  Rat rational_value() const { return rep_.constant_term(); }

  /// Coefficients over the power basis 1, zeta, ..., zeta^(phi(n)-1).
  std::vector<Rat> coefficients() const {
    std::vector<Rat> out(static_cast<std::size_t>(euler_phi(order_)), Rat(0));
    for (std::size_t k = 0; k < rep_.coeffs().size(); ++k) out[k] = rep_.coeffs()[k];
    return out;
  }

  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    check_same(a, b);
    return Cyc(a.order_, a.rep_ + b.rep_);
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) {
    check_same(a, b);
    return Cyc(a.order_, a.rep_ - b.rep_);
  }
  friend Cyc operator-(const Cyc& a) { return Cyc(a.order_, -a.rep_); }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    check_same(a, b);
    return Cyc(a.order_, a.rep_ * b.rep_);
  }
  friend bool operator==(const Cyc& a, const Cyc& b) { return a.order_ == b.order_ && a.rep_ == b.rep_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  /// The field conjugation zeta -> zeta^(-1).
  Cyc conj() const {
    std::vector<Rat> out(static_cast<std::size_t>(order_), Rat(0));
    for (std::size_t k = 0; k < rep_.coeffs().size(); ++k) {
      long target = k == 0 ? 0 : order_ - static_cast<long>(k);
      out[static_cast<std::size_t>(target)] += rep_.coeffs()[k];
    }
    return Cyc(order_, Poly(std::move(out)));
  }

  Cyc inverse() const {
    if (is_zero()) throw not_a_unit("inverse of zero cyclotomic");
    // extended Euclid against Phi_n; Phi_n is irreducible over Q so the gcd
    // with any nonzero reduced element is a nonzero constant
    Poly r0 = cyclotomic_polynomial(order_), r1 = rep_;
    Poly u0, u1(Rat(1));
    while (!r1.is_constant()) {
      auto [q, r2] = Poly::divmod(r0, r1);
      Poly u2 = u0 - q * u1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      u0 = std::move(u1);
      u1 = std::move(u2);
    }
    if (r1.is_zero()) throw error("cyclotomic inverse: unexpected zero gcd");
    Rat scale = Rat(1) / r1.constant_term();
    return Cyc(order_, u1 * scale);
  }

  /// z * conj(z); rational and nonnegative under the standard embedding.
  Cyc norm_squared() const { return *this * conj(); }

  bool is_real() const { return conj() == *this; }

 private:
  static void check_same(const Cyc& a, const Cyc& b) {
    if (a.order_ != b.order_) throw dimension_mismatch("cyclotomic orders differ");
  }

  static Poly reduce(long order, Poly p) {
    const Poly& phi = cyclotomic_polynomial(order);
    if (p.degree() < phi.degree()) return p;
    return Poly::divmod(p, phi).second;
  }

  long order_;
  Poly rep_;
};

/// Interval enclosure of the real part of z under zeta_n -> exp(2 pi i / n).
inline RatInterval cyc_real_part_interval(const Cyc& z, int prec) {
  RatInterval pi = pi_interval(prec);
  RatInterval acc(Rat(0));
  const auto& coeffs = z.rep().coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    RatInterval angle = make_rat(Int(2 * static_cast<long>(k)), Int(z.order())) * pi;
    acc = acc + Rat(coeffs[k]) * cos_interval(angle, prec);
  }
  return acc;
}

inline RatInterval cyc_imag_part_interval(const Cyc& z, int prec) {
  RatInterval pi = pi_interval(prec);
  RatInterval acc(Rat(0));
  const auto& coeffs = z.rep().coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    RatInterval angle = make_rat(Int(2 * static_cast<long>(k)), Int(z.order())) * pi;
    acc = acc + Rat(coeffs[k]) * sin_interval(angle, prec);
  }
  return acc;
}

/// Sign of a real cyclotomic number (conj(z) == z required), decided exactly:
/// zero is detected symbolically, otherwise the enclosure is refined until it
/// excludes zero.
inline int cyc_real_sign(const Cyc& z) {
  if (!z.is_real()) throw error("sign of a non-real cyclotomic");
  if (z.is_zero()) return 0;
  if (z.is_rational()) return sign_of(z.rational_value());
  for (int prec = 8; prec <= 2048; prec *= 2) {
    RatInterval enc = cyc_real_part_interval(z, prec);
    if (!enc.contains_zero()) return enc.lo > 0 ? 1 : -1;
  }
  throw error("cyclotomic sign refinement did not converge");
}

/// Argument of a nonzero cyclotomic as a fraction of a full turn in [0, 1).
/// Exact when the element is rational * zeta^k or lies on the real or
/// imaginary axis; otherwise a refined rational bracket.
struct TurnArgument {
  bool exact = false;
  Rat value;            // meaningful when exact
  RatInterval bracket;  // meaningful when !exact
};

inline TurnArgument cyc_argument(const Cyc& z) {
  if (z.is_zero()) throw error("argument of zero");
  const long n = z.order();
  TurnArgument out;
  // monomial detection: z = r * zeta^k
  for (long k = 0; k < n; ++k) {
    Cyc w = z * Cyc::zeta(n, -k);
    if (w.is_rational()) {
      Rat turn = make_rat(Int(k), Int(n));
      if (w.rational_value() < 0) turn += make_rat(Int(1), Int(2));
      if (turn >= 1) turn -= 1;
      out.exact = true;
      out.value = turn;
      return out;
    }
  }
  Cyc re2 = z + z.conj();        // 2 Re(z), a real cyclotomic
  Cyc im_diff = z - z.conj();    // 2 i Im(z)
  if (im_diff.is_zero()) {       // real axis
    out.exact = true;
    out.value = cyc_real_sign(re2) > 0 ? Rat(0) : make_rat(Int(1), Int(2));
    return out;
  }
  if (re2.is_zero()) {  // imaginary axis; sign of Im from interval refinement
    for (int prec = 8; prec <= 2048; prec *= 2) {
      RatInterval im = cyc_imag_part_interval(z, prec);
      if (!im.contains_zero()) {
        out.exact = true;
        out.value = im.lo > 0 ? make_rat(Int(1), Int(4)) : make_rat(Int(3), Int(4));
        return out;
      }
    }
    throw error("argument refinement did not converge");
  }
  const int re_sign = cyc_real_sign(re2);
  const Rat target_width = make_rat(Int(1), Int(720));
  for (int prec = 16; prec <= 4096; prec *= 2) {
    RatInterval re = cyc_real_part_interval(z, prec);
    RatInterval im = cyc_imag_part_interval(z, prec);
    if (re.contains_zero() || im.contains_zero()) continue;
    RatInterval theta = arctan_interval(im / re, prec);  // in (-pi/2, pi/2)
    RatInterval two_pi = Rat(2) * pi_interval(prec);
    RatInterval turn = theta / two_pi;
    if (re_sign < 0) {
      turn = turn + RatInterval(make_rat(Int(1), Int(2)));
    } else if (im.hi < 0) {
      turn = turn + RatInterval(Rat(1));
    }
    if (turn.width() <= target_width) {
      out.exact = false;
      out.bracket = turn;
      return out;
    }
  }
  throw error("argument refinement did not converge");
}

}  // namespace ncsymp

#endif  // NCSYMP_CYCLOTOMIC_HPP
