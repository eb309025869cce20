#ifndef NCSYMP_INTERVAL_HPP
#define NCSYMP_INTERVAL_HPP

#include <algorithm>
#include <stdexcept>

#include "ncsymp/rational.hpp"

namespace ncsymp {

/// Closed interval with rational endpoints.  Used to determine signs and
/// argument brackets of real algebraic numbers exactly: enclosures are
/// refined until the question at hand is decided, every endpoint staying a
/// rational number.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit RatInterval(const Rat& x) : lo(x), hi(x) {}

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
  }
  friend RatInterval operator*(const Rat& s, const RatInterval& a) { return RatInterval(s) * a; }

  /// Division by an interval strictly away from zero.
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division through zero");
    RatInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
    return a * inv;
  }
};

namespace detail {

/// Bracket of arctan(1/q) for integer q >= 1, from the alternating series;
/// consecutive partial sums enclose the limit.
inline RatInterval arctan_inv_interval(long q, int terms) {
  Rat x = make_rat(Int(1), Int(q));
  Rat x2 = x * x;
  Rat term = x, s_prev(0), s(0);
  for (int j = 0; j < terms; ++j) {
    s_prev = s;
    Rat contrib = term / Rat(2 * j + 1);
    s += (j % 2 == 0) ? contrib : -contrib;
    term *= x2;
  }
  return {std::min(s_prev, s), std::max(s_prev, s)};
}

}  // namespace detail

/// Machin's formula: pi = 16 arctan(1/5) - 4 arctan(1/239).
inline RatInterval pi_interval(int terms) {
  RatInterval a = detail::arctan_inv_interval(5, terms);
  RatInterval b = detail::arctan_inv_interval(239, terms);
  return Rat(16) * a - Rat(4) * b;
}

namespace detail {

// cos(r) for rational r with Lagrange remainder |R| <= |r|^(2m+2)/(2m+2)!.
inline RatInterval cos_at_rational(const Rat& r, int m) {
  Rat r2 = r * r;
  Rat term(1), sum(0);
  for (int j = 0; j <= m; ++j) {
    sum += (j % 2 == 0) ? term : -term;
    term = term * r2 / Rat(Int(2 * j + 1) * Int(2 * j + 2));
  }
  Rat bound = term > 0 ? term : -term;
  return {sum - bound, sum + bound};
}

inline RatInterval sin_at_rational(const Rat& r, int m) {
  Rat r2 = r * r;
  Rat term = r, sum(0);
  for (int j = 0; j <= m; ++j) {
    sum += (j % 2 == 0) ? term : -term;
    term = term * r2 / Rat(Int(2 * j + 2) * Int(2 * j + 3));
  }
  Rat bound = term > 0 ? term : -term;
  return {sum - bound, sum + bound};
}

}  // namespace detail

/// Enclosure of cos(x) over a rational interval x, via the midpoint value
/// and the Lipschitz bound |cos(a)-cos(b)| <= |a-b|.
inline RatInterval cos_interval(const RatInterval& x, int prec) {
  Rat r = x.mid();
  Rat w = x.width() / 2;
  RatInterval c = detail::cos_at_rational(r, prec);
  return {c.lo - w, c.hi + w};
}

inline RatInterval sin_interval(const RatInterval& x, int prec) {
  Rat r = x.mid();
  Rat w = x.width() / 2;
  RatInterval s = detail::sin_at_rational(r, prec);
  return {s.lo - w, s.hi + w};
}

/// arctan over an interval (monotone), converging for any rational input via
/// the |x|<=1 series and the reflection arctan(x) = pi/2 - arctan(1/x).
inline RatInterval arctan_interval(const RatInterval& x, int prec) {
  auto at_point = [&](const Rat& v) -> RatInterval {
    Rat a = v < 0 ? Rat(-v) : v;
    bool neg = v < 0;
    bool reflect = a > 1;
    Rat arg = reflect ? Rat(1) / a : a;
    // alternating series; consecutive partial sums bracket the value
    Rat arg2 = arg * arg, term = arg, s(0), s_prev(0);
    for (int j = 0; j < prec; ++j) {
      s_prev = s;
      Rat contrib = term / Rat(2 * j + 1);
      s += (j % 2 == 0) ? contrib : -contrib;
      term *= arg2;
    }
    RatInterval r(std::min(s_prev, s), std::max(s_prev, s));
    if (reflect) {
      RatInterval half_pi = Rat(Int(1)) / Rat(2) * pi_interval(prec);
      r = half_pi - r;
    }
    if (neg) r = -r;
    return r;
  };
  RatInterval a = at_point(x.lo), b = at_point(x.hi);
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace ncsymp

#endif  // NCSYMP_INTERVAL_HPP
