#ifndef NCSYMP_POSITIVITY_HPP
#define NCSYMP_POSITIVITY_HPP

#include <string>
#include <vector>

#include "ncsymp/rings.hpp"

namespace ncsymp {

// ---------------------------------------------------------------------------
// integral subrings
//
// Membership in the distinguished subring of integral elements: plain
// integers, integer-coefficient polynomials / cyclotomics, integer duals,
// and matrices / Laurent elements built from those entrywise.

inline bool integral_contains(const IntegerRing&, const Int&) { return true; }
inline bool integral_contains(const RationalRing&, const Rat& x) { return is_integer(x); }
inline bool integral_contains(const PolyRing&, const Poly& x) {
  for (const Rat& c : x.coeffs())
    if (!is_integer(c)) return false;
  return true;
}
inline bool integral_contains(const CycRing&, const Cyc& x) {
  for (const Rat& c : x.rep().coeffs())
    if (!is_integer(c)) return false;
  return true;
}
inline bool integral_contains(const DualRing&, const Dual& x) { return is_integer(x.a) && is_integer(x.eps); }
template <InvolutiveRing B>
bool integral_contains(const MatRing<B>& r, const typename MatRing<B>::Elem& x) {
  for (const auto& entry : x.data())
    if (!integral_contains(r.base(), entry)) return false;
  return true;
}
template <InvolutiveRing B>
bool integral_contains(const LaurentRing<B>& r, const typename LaurentRing<B>::Elem& x) {
  for (const auto& [e, c] : x.terms())
    if (!integral_contains(r.base(), c)) return false;
  return true;
}

/// x is a unit of the integral subring: integral, invertible, with an
/// integral inverse.
template <InvolutiveRing R>
bool unit_in_integral_subring(const R& r, const typename R::Elem& x) {
  if (!integral_contains(r, x)) return false;
  auto inv = r.try_invert(x);
  return inv && integral_contains(r, *inv);
}

// ---------------------------------------------------------------------------
// positive structures
//
// positive_contains(ring, x) is true when x is sigma-fixed and satisfies the
// ring's positivity predicate: positive rationals, everywhere-positive
// polynomials, positive reals inside a cyclotomic field (decided by exact
// sign refinement), duals with positive fixed part, and symmetric/Hermitian
// matrices whose leading principal minors are positive.

inline bool positive_predicate(const IntegerRing&, const Int& x) { return x > 0; }
inline bool positive_predicate(const RationalRing&, const Rat& x) { return x > 0; }
inline bool positive_predicate(const PolyRing&, const Poly& x) { return poly_positive_everywhere(x); }
inline bool positive_predicate(const CycRing&, const Cyc& x) {
  return !x.is_zero() && x.is_real() && cyc_real_sign(x) > 0;
}
inline bool positive_predicate(const DualRing&, const Dual& x) { return x.a > 0; }
template <InvolutiveRing B>
bool positive_predicate(const MatRing<B>& r, const typename MatRing<B>::Elem& x) {
  // Sylvester: positive definite iff every leading principal minor is
  // positive; minors are evaluated exactly in the base ring.
  for (int k = 1; k <= r.dim(); ++k) {
    MatRing<B> top(k, r.base());
    std::vector<typename B::Elem> data;
    data.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) data.push_back(x.at(i, j));
    if (!positive_predicate(r.base(), top.det(typename MatRing<B>::Elem(k, std::move(data))))) return false;
  }
  return true;
}
template <InvolutiveRing B>
bool positive_predicate(const LaurentRing<B>&, const typename LaurentRing<B>::Elem&) {
  throw wrong_base_ring("no positive structure on a Laurent extension");
}

template <InvolutiveRing R>
bool positive_contains(const R& r, const typename R::Elem& x) {
  return is_sigma_fixed(r, x) && positive_predicate(r, x);
}

}  // namespace ncsymp

#endif  // NCSYMP_POSITIVITY_HPP
