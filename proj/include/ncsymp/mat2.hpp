#ifndef NCSYMP_MAT2_HPP
#define NCSYMP_MAT2_HPP

#include <array>
#include <optional>

#include "ncsymp/rings.hpp"

namespace ncsymp {

/// Column vector in A^2, acted on from the left by Mat2.
template <InvolutiveRing R>
struct Vec2 {
  typename R::Elem v1, v2;
};

/// 2x2 matrix [[a, b], [c, d]] over an involutive ring.
template <InvolutiveRing R>
struct Mat2 {
  typename R::Elem a, b, c, d;
};

template <InvolutiveRing R>
Mat2<R> mat2_identity(const R& r) {
  return {r.one(), r.zero(), r.zero(), r.one()};
}

/// The standard skew form Omega_1 = [[0, 1], [-1, 0]].
template <InvolutiveRing R>
Mat2<R> mat2_omega(const R& r) {
  return {r.zero(), r.one(), r.neg(r.one()), r.zero()};
}

template <InvolutiveRing R>
Mat2<R> mat2_add(const R& r, const Mat2<R>& x, const Mat2<R>& y) {
  return {r.add(x.a, y.a), r.add(x.b, y.b), r.add(x.c, y.c), r.add(x.d, y.d)};
}

template <InvolutiveRing R>
Mat2<R> mat2_sub(const R& r, const Mat2<R>& x, const Mat2<R>& y) {
  return {sub(r, x.a, y.a), sub(r, x.b, y.b), sub(r, x.c, y.c), sub(r, x.d, y.d)};
}

template <InvolutiveRing R>
Mat2<R> mat2_mul(const R& r, const Mat2<R>& x, const Mat2<R>& y) {
  return {r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)), r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
          r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)), r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

/// Entrywise involution; does not respect the product.
template <InvolutiveRing R>
Mat2<R> mat2_sigma(const R& r, const Mat2<R>& x) {
  return {r.sigma(x.a), r.sigma(x.b), r.sigma(x.c), r.sigma(x.d)};
}

/// sigma(M)^T, the anti-homomorphism combining entrywise sigma with the
/// transpose.
template <InvolutiveRing R>
Mat2<R> mat2_sigma_transpose(const R& r, const Mat2<R>& x) {
  return {r.sigma(x.a), r.sigma(x.c), r.sigma(x.b), r.sigma(x.d)};
}

/// Left multiplication of every entry by a ring scalar.
template <InvolutiveRing R>
Mat2<R> mat2_scale_left(const R& r, const typename R::Elem& s, const Mat2<R>& x) {
  return {r.mul(s, x.a), r.mul(s, x.b), r.mul(s, x.c), r.mul(s, x.d)};
}

template <InvolutiveRing R>
bool mat2_eq(const R& r, const Mat2<R>& x, const Mat2<R>& y) {
  return r.eq(x.a, y.a) && r.eq(x.b, y.b) && r.eq(x.c, y.c) && r.eq(x.d, y.d);
}

template <InvolutiveRing R>
bool mat2_is_zero(const R& r, const Mat2<R>& x) {
  return is_zero(r, x.a) && is_zero(r, x.b) && is_zero(r, x.c) && is_zero(r, x.d);
}

template <InvolutiveRing R>
Vec2<R> mat2_apply(const R& r, const Mat2<R>& m, const Vec2<R>& v) {
  return {r.add(r.mul(m.a, v.v1), r.mul(m.b, v.v2)), r.add(r.mul(m.c, v.v1), r.mul(m.d, v.v2))};
}

/// omega(v, w) = sigma(v)^T Omega_1 w = sigma(v1) w2 - sigma(v2) w1.
template <InvolutiveRing R>
typename R::Elem omega(const R& r, const Vec2<R>& v, const Vec2<R>& w) {
  return sub(r, r.mul(r.sigma(v.v1), w.v2), r.mul(r.sigma(v.v2), w.v1));
}

/// The four entry equations of the symplectic condition
/// sigma(M)^T Omega_1 M = Omega_1.
template <InvolutiveRing R>
std::array<typename R::Elem, 4> symplectic_residuals(const R& r, const Mat2<R>& m) {
  return {
      sub(r, r.mul(r.sigma(m.a), m.c), r.mul(r.sigma(m.c), m.a)),
      sub(r, r.mul(r.sigma(m.b), m.d), r.mul(r.sigma(m.d), m.b)),
      sub(r, sub(r, r.mul(r.sigma(m.a), m.d), r.mul(r.sigma(m.c), m.b)), r.one()),
      sub(r, sub(r, r.mul(r.sigma(m.d), m.a), r.mul(r.sigma(m.b), m.c)), r.one()),
  };
}

template <InvolutiveRing R>
bool is_symplectic(const R& r, const Mat2<R>& m) {
  for (const auto& res : symplectic_residuals(r, m))
    if (!is_zero(r, res)) return false;
  return true;
}

/// trace, left/right determinants and the adjoint matrix of a 2x2 matrix
/// over an involutive ring.
template <InvolutiveRing R>
struct CharData {
  typename R::Elem trace;
  typename R::Elem det_l;
  typename R::Elem det_r;
  Mat2<R> adj;
};

template <InvolutiveRing R>
typename R::Elem mat2_trace(const R& r, const Mat2<R>& m) {
  return r.add(m.a, m.d);
}

template <InvolutiveRing R>
Mat2<R> mat2_adjugate(const R& r, const Mat2<R>& m) {
  return {r.sigma(m.d), r.neg(r.sigma(m.b)), r.neg(r.sigma(m.c)), r.sigma(m.a)};
}

template <InvolutiveRing R>
CharData<R> char_data(const R& r, const Mat2<R>& m) {
  CharData<R> out{
      mat2_trace(r, m),
      sub(r, r.mul(r.sigma(m.a), m.d), r.mul(r.sigma(m.c), m.b)),
      sub(r, r.mul(m.a, r.sigma(m.d)), r.mul(m.b, r.sigma(m.c))),
      mat2_adjugate(r, m),
  };
  return out;
}

/// Inverse of a symplectic matrix: its adjoint.
template <InvolutiveRing R>
Mat2<R> sp2_inverse(const R& r, const Mat2<R>& m) {
  if (!is_symplectic(r, m)) throw not_symplectic();
  return mat2_adjugate(r, m);
}

/// Residual of sigma(M) M - sigma(trace M) M + id; zero exactly when M is
/// symplectic.
template <InvolutiveRing R>
Mat2<R> cayley_hamilton_residual(const R& r, const Mat2<R>& m) {
  Mat2<R> lhs = mat2_mul(r, mat2_sigma(r, m), m);
  Mat2<R> mid = mat2_scale_left(r, r.sigma(mat2_trace(r, m)), m);
  return mat2_add(r, mat2_sub(r, lhs, mid), mat2_identity(r));
}

/// trace(Adj(M) N) + trace(sigma(M) N) - sigma(trace M) trace(N); identically
/// zero for all M, N.
template <InvolutiveRing R>
typename R::Elem classical_trace_identity_residual(const R& r, const Mat2<R>& m, const Mat2<R>& n) {
  auto t1 = mat2_trace(r, mat2_mul(r, mat2_adjugate(r, m), n));
  auto t2 = mat2_trace(r, mat2_mul(r, mat2_sigma(r, m), n));
  auto t3 = r.mul(r.sigma(mat2_trace(r, m)), mat2_trace(r, n));
  return sub(r, r.add(t1, t2), t3);
}

/// trace(sigma(MN)) - trace(sigma(N) sigma(M)); identically zero.
template <InvolutiveRing R>
typename R::Elem trace_sigma_product_residual(const R& r, const Mat2<R>& m, const Mat2<R>& n) {
  auto lhs = mat2_trace(r, mat2_sigma(r, mat2_mul(r, m, n)));
  auto rhs = mat2_trace(r, mat2_mul(r, mat2_sigma(r, n), mat2_sigma(r, m)));
  return sub(r, lhs, rhs);
}

/// SL2 trace identities over a commutative ring with trivial involution.
template <InvolutiveRing R>
struct FrickeResiduals {
  typename R::Elem product_identity;
  typename R::Elem commutator;
};

template <InvolutiveRing R>
FrickeResiduals<R> check_fricke(const R& r, const Mat2<R>& m, const Mat2<R>& n) {
  if (!r.commutative() || !r.trivial_sigma()) throw not_commutative();
  auto det = [&](const Mat2<R>& x) { return sub(r, r.mul(x.a, x.d), r.mul(x.b, x.c)); };
  if (!r.eq(det(m), r.one()) || !r.eq(det(n), r.one())) throw not_unit_determinant();
  auto tr = [&](const Mat2<R>& x) { return mat2_trace(r, x); };
  Mat2<R> n_inv = mat2_adjugate(r, n);  // classical adjugate inverse at det 1
  Mat2<R> m_inv = mat2_adjugate(r, m);
  auto t_m = tr(m), t_n = tr(n), t_mn = tr(mat2_mul(r, m, n));

  auto product_residual =
      sub(r, r.add(t_mn, tr(mat2_mul(r, m, n_inv))), r.mul(t_m, t_n));

  Mat2<R> comm = mat2_mul(r, mat2_mul(r, m, n), mat2_mul(r, m_inv, n_inv));
  auto sq = [&](const typename R::Elem& x) { return r.mul(x, x); };
  auto rhs = sub(r, sub(r, r.add(r.add(sq(t_m), sq(t_n)), sq(t_mn)), r.mul(r.mul(t_m, t_n), t_mn)),
                 r.from_int(2));
  auto commutator_residual = sub(r, tr(comm), rhs);
  return {product_residual, commutator_residual};
}

// ---------------------------------------------------------------------------
// Manin matrices

/// AC = CA, BD = DB, AD - CB = DA - BC (plain products, no involution).
template <InvolutiveRing R>
bool is_manin(const R& r, const Mat2<R>& m) {
  if (!is_zero(r, sub(r, r.mul(m.a, m.c), r.mul(m.c, m.a)))) return false;
  if (!is_zero(r, sub(r, r.mul(m.b, m.d), r.mul(m.d, m.b)))) return false;
  auto lhs = sub(r, r.mul(m.a, m.d), r.mul(m.c, m.b));
  auto rhs = sub(r, r.mul(m.d, m.a), r.mul(m.b, m.c));
  return r.eq(lhs, rhs);
}

/// (AD - CB)^(-1) [[D, -B], [-C, A]] composed with M; identity iff the left
/// inverse is as claimed.  Requires AD - CB invertible.
template <InvolutiveRing R>
Mat2<R> manin_left_inverse_residual(const R& r, const Mat2<R>& m) {
  auto det = sub(r, r.mul(m.a, m.d), r.mul(m.c, m.b));
  auto det_inv = invert(r, det);
  Mat2<R> cof{m.d, r.neg(m.b), r.neg(m.c), m.a};
  Mat2<R> left = mat2_scale_left(r, det_inv, cof);
  return mat2_sub(r, mat2_mul(r, left, m), mat2_identity(r));
}

/// M^2 - trace(M) M + id, the Manin Cayley-Hamilton residual (no involution);
/// meaningful when AD - CB = 1.
template <InvolutiveRing R>
Mat2<R> manin_cayley_hamilton_residual(const R& r, const Mat2<R>& m) {
  Mat2<R> m2 = mat2_mul(r, m, m);
  Mat2<R> mid = mat2_scale_left(r, mat2_trace(r, m), m);
  return mat2_add(r, mat2_sub(r, m2, mid), mat2_identity(r));
}

// ---------------------------------------------------------------------------
// random symplectic elements
//
// Words in the generators [[1, S], [0, 1]], [[1, 0], [S, 1]] with
// sigma(S) = S and [[U, 0], [0, sigma(U)^(-1)]] with U a unit.

template <InvolutiveRing R>
typename R::Elem sample_sigma_fixed(const R& r, SplitMix64& g) {
  auto x = r.sample(g);
  return r.add(x, r.sigma(x));
}

template <InvolutiveRing R>
Mat2<R> random_symplectic(const R& r, SplitMix64& g, int max_word = 6) {
  Mat2<R> acc = mat2_identity(r);
  const int len = static_cast<int>(g.range(1, max_word));
  for (int i = 0; i < len; ++i) {
    Mat2<R> gen = mat2_identity(r);
    switch (g.below(3)) {
      case 0:
        gen.b = sample_sigma_fixed(r, g);
        break;
      case 1:
        gen.c = sample_sigma_fixed(r, g);
        break;
      default: {
        auto u = r.sample_unit(g);
        gen.a = u;
        gen.d = invert(r, r.sigma(u));
        break;
      }
    }
    acc = mat2_mul(r, acc, gen);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// flattening Sp2(Mat_n(k), transpose) into Sp(2n, k)

/// Block matrix [[A, B], [C, D]] as a 2n x 2n matrix over the scalar base.
template <InvolutiveRing B>
SqMat<typename B::Elem> flatten_to_sp2n(const MatRing<B>& r, const Mat2<MatRing<B>>& m) {
  if (!r.base().commutative() || !r.base().trivial_sigma())
    throw wrong_base_ring("flattening needs a commutative scalar base with trivial involution");
  if (!is_symplectic(r, m)) throw not_symplectic();
  const int n = r.dim();
  SqMat<typename B::Elem> out(2 * n, r.base().zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.at(i, j) = m.a.at(i, j);
      out.at(i, j + n) = m.b.at(i, j);
      out.at(i + n, j) = m.c.at(i, j);
      out.at(i + n, j + n) = m.d.at(i, j);
    }
  return out;
}

/// J = [[0, I_n], [-I_n, 0]] over the scalar base.
template <InvolutiveRing B>
SqMat<typename B::Elem> sp2n_form(const B& base, int two_n) {
  const int n = two_n / 2;
  SqMat<typename B::Elem> j(two_n, base.zero());
  for (int i = 0; i < n; ++i) {
    j.at(i, i + n) = base.one();
    j.at(i + n, i) = base.neg(base.one());
  }
  return j;
}

/// G^T J G == J, evaluated exactly over the scalar base.
template <InvolutiveRing B>
bool preserves_sp2n_form(const B& base, const SqMat<typename B::Elem>& g) {
  MatRing<B> big(g.dim(), base);
  auto j = sp2n_form(base, g.dim());
  return big.eq(big.mul(big.mul(big.transpose(g), j), g), j);
}

}  // namespace ncsymp

#endif  // NCSYMP_MAT2_HPP
