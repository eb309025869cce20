#ifndef NCSYMP_DUAL_HPP
#define NCSYMP_DUAL_HPP

#include "ncsymp/errors.hpp"
#include "ncsymp/rational.hpp"

namespace ncsymp {

/// Dual number a + alpha*eps with eps^2 = 0, both parts rational.
struct Dual {
  Rat a;    // fixed part
  Rat eps;  // infinitesimal part

  Dual() : a(0), eps(0) {}
  explicit Dual(Rat fixed) : a(std::move(fixed)), eps(0) {}
  Dual(Rat fixed, Rat inf) : a(std::move(fixed)), eps(std::move(inf)) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.eps + y.eps}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.eps - y.eps}; }
  friend Dual operator-(const Dual& x) { return {-x.a, -x.eps}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.eps + x.eps * y.a}; }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.eps == y.eps; }
  friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }

  bool is_zero() const { return a == 0 && eps == 0; }

  /// (a + alpha eps)^(-1) = a^(-1) - a^(-2) alpha eps; requires a != 0.
  Dual inverse() const {
    if (a == 0) throw not_a_unit("dual number with zero fixed part");
    Rat ai = Rat(1) / a;
    return {ai, -ai * ai * eps};
  }

  Dual conj() const { return {a, -eps}; }
};

/// Polar form a + alpha eps = scale * (1 + (alpha/scale) eps) with scale = a.
struct DualPolar {
  Rat scale;
  Dual unit;
};

inline DualPolar dual_polar(const Dual& x) {
  if (x.a == 0) throw not_a_unit("polar form needs a nonzero fixed part");
  return {x.a, Dual(Rat(1), x.eps / x.a)};
}

}  // namespace ncsymp

#endif  // NCSYMP_DUAL_HPP
