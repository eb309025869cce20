#ifndef NCSYMP_QUANTUM_HPP
#define NCSYMP_QUANTUM_HPP

#include <array>
#include <vector>

#include "ncsymp/mat2.hpp"
#include "ncsymp/rings.hpp"

namespace ncsymp {

/// The deformed form Omega_q = [[0, 1], [-q^(-1), 0]].
template <InvolutiveRing B>
Mat2<LaurentRing<B>> omega_q_form(const LaurentRing<B>& q) {
  return {q.zero(), q.one(), q.neg(q.q_power(-2)), q.zero()};
}

/// omega_q(v, w) = sigma(v1) w2 - q^(-1) sigma(v2) w1.
template <InvolutiveRing B>
typename LaurentRing<B>::Elem omega_q(const LaurentRing<B>& q, const Vec2<LaurentRing<B>>& v,
                                      const Vec2<LaurentRing<B>>& w) {
  auto first = q.mul(q.sigma(v.v1), w.v2);
  auto second = q.mul(q.q_power(-2), q.mul(q.sigma(v.v2), w.v1));
  return sub(q, first, second);
}

/// q^(-1) sigma(V2) V1 == sigma(V1) V2, the left q-commutation of the
/// quantum plane.  Genericity is not modeled.
template <InvolutiveRing B>
bool is_q_plane_vector(const LaurentRing<B>& q, const Vec2<LaurentRing<B>>& v) {
  auto lhs = q.mul(q.q_power(-2), q.mul(q.sigma(v.v2), v.v1));
  auto rhs = q.mul(q.sigma(v.v1), v.v2);
  return q.eq(lhs, rhs);
}

/// The six quantum symplectic equations for [[A, B], [C, D]] over A_q.  All
/// residuals are zero exactly on the quantum symplectic group; nothing here
/// imposes commutativity between B and C.
template <InvolutiveRing B>
std::array<typename LaurentRing<B>::Elem, 6> quantum_symplectic_residuals(const LaurentRing<B>& q,
                                                                          const Mat2<LaurentRing<B>>& m) {
  auto qi = q.q_power(-2);  // q^(-1)
  auto t = [&](const auto& x, const auto& y) { return q.mul(x, y); };
  return {
      sub(q, t(q.sigma(m.a), m.c), t(qi, t(q.sigma(m.c), m.a))),
      sub(q, t(m.a, q.sigma(m.b)), t(qi, t(m.b, q.sigma(m.a)))),
      sub(q, t(q.sigma(m.b), m.d), t(qi, t(q.sigma(m.d), m.b))),
      sub(q, t(m.c, q.sigma(m.d)), t(qi, t(m.d, q.sigma(m.c)))),
      sub(q, sub(q, t(q.sigma(m.a), m.d), t(qi, t(q.sigma(m.c), m.b))), q.one()),
      sub(q, sub(q, t(m.a, q.sigma(m.d)), t(qi, t(m.b, q.sigma(m.c)))), q.one()),
  };
}

template <InvolutiveRing B>
bool is_quantum_symplectic(const LaurentRing<B>& q, const Mat2<LaurentRing<B>>& m) {
  for (const auto& res : quantum_symplectic_residuals(q, m))
    if (!is_zero(q, res)) return false;
  return true;
}

/// Lift of a symplectic element to the quantum group:
/// [[A, q^(1/2) B], [q^(-1/2) C, D]].
template <InvolutiveRing B>
Mat2<LaurentRing<B>> quantum_lift(const LaurentRing<B>& q, const Mat2<B>& m) {
  if (!is_symplectic(q.base(), m)) throw not_symplectic();
  return {
      q.constant(m.a),
      q.monomial(1, m.b),
      q.monomial(-1, m.c),
      q.constant(m.d),
  };
}

/// Collapse q^(1/2) := 1 entrywise.
template <InvolutiveRing B>
Mat2<B> specialize_q1(const LaurentRing<B>& q, const Mat2<LaurentRing<B>>& m) {
  return {q.specialize_q1(m.a), q.specialize_q1(m.b), q.specialize_q1(m.c), q.specialize_q1(m.d)};
}

/// Residuals of the rephrased quantum SL2 relations for a concrete tuple
/// (a, b, c, d) over a commutative base with trivial involution:
///   ac - q^(-1)ca,  ab - q^(-1)ba,  bd - q^(-1)db,  cd - q^(-1)dc,
///   ad - q^(-1)cb - 1,  ad - q^(-1)bc - 1,  da - qbc - 1,  da - qcb - 1.
/// Products are taken verbatim; over a commutative ring the only solutions
/// are the diagonal ones.
template <InvolutiveRing B>
std::array<typename LaurentRing<B>::Elem, 8> quantum_sl2_residuals(const LaurentRing<B>& q,
                                                                   const typename LaurentRing<B>::Elem& a,
                                                                   const typename LaurentRing<B>::Elem& b,
                                                                   const typename LaurentRing<B>::Elem& c,
                                                                   const typename LaurentRing<B>::Elem& d) {
  if (!q.base().commutative() || !q.base().trivial_sigma()) throw not_commutative();
  auto qi = q.q_power(-2);
  auto qq = q.q_power(2);
  auto t = [&](const auto& x, const auto& y) { return q.mul(x, y); };
  return {
      sub(q, t(a, c), t(qi, t(c, a))),
      sub(q, t(a, b), t(qi, t(b, a))),
      sub(q, t(b, d), t(qi, t(d, b))),
      sub(q, t(c, d), t(qi, t(d, c))),
      sub(q, sub(q, t(a, d), t(qi, t(c, b))), q.one()),
      sub(q, sub(q, t(a, d), t(qi, t(b, c))), q.one()),
      sub(q, sub(q, t(d, a), t(qq, t(b, c))), q.one()),
      sub(q, sub(q, t(d, a), t(qq, t(c, b))), q.one()),
  };
}

/// Cross-check that a matrix preserves omega_q on the standard basis.
template <InvolutiveRing B>
bool preserves_omega_q_on_basis(const LaurentRing<B>& q, const Mat2<LaurentRing<B>>& m) {
  Vec2<LaurentRing<B>> e1{q.one(), q.zero()}, e2{q.zero(), q.one()};
  auto img = [&](const Vec2<LaurentRing<B>>& v) { return mat2_apply(q, m, v); };
  std::array<std::pair<Vec2<LaurentRing<B>>, Vec2<LaurentRing<B>>>, 4> pairs{
      std::pair{e1, e1}, std::pair{e1, e2}, std::pair{e2, e1}, std::pair{e2, e2}};
  for (const auto& [v, w] : pairs) {
    if (!q.eq(omega_q(q, img(v), img(w)), omega_q(q, v, w))) return false;
  }
  return true;
}

}  // namespace ncsymp

#endif  // NCSYMP_QUANTUM_HPP
