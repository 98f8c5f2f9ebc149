#pragma once

#include <utility>
#include <vector>

#include "toda/curve.hpp"
#include "toda/laurent.hpp"
#include "toda/toda_flow.hpp"

namespace toda {

// The matrix displays below assume n >= 3; at n = 2 the z-corner of the
// periodic Jacobi matrix collides with the superdiagonal and the genus
// degenerates, so the matrix pipeline rejects it (the flow itself is fine).
inline void require_matrix_scale(int n) {
  if (n < 3) throw BadInput("matrix/curve pipeline needs n >= 3");
}

/// Which characteristic matrix a minor refers to:
///   MR: L_t = M_t R_t - x E_n (diagonal I_i + V_{i-1})
///   RM: L_{t+1} = R_t M_t - x E_n (diagonal I_i + V_i)
/// `shift` applies the cyclic shift sigma^shift to the state first.
struct MinorSpec {
  enum class Variant { MR, RM };
  int k = 0;  // rows/columns deleted at the front
  int l = 0;  // deleted at the back
  Variant variant = Variant::MR;
  int shift = 0;
};

template <class F>
struct LaxMatrices {
  LaurentMatrix<F> M, R, L_MR, L_RM;
};

/// The factor matrices M_t(z), R_t(z) and the two periodic Jacobi
/// matrices L_t = M R and L_{t+1} = R M, built entry-for-entry.
template <class F>
LaxMatrices<F> lax_matrices(const TodaState<F>& s) {
  require_matrix_scale(s.n);
  const int n = s.n;
  using L = Laurent<F>;
  using P = Polynomial<F>;
  auto zero = L();
  LaxMatrices<F> out;
  out.M.assign(n, std::vector<L>(n, zero));
  out.R.assign(n, std::vector<L>(n, zero));
  out.L_MR.assign(n, std::vector<L>(n, zero));
  out.L_RM.assign(n, std::vector<L>(n, zero));

  for (int i = 1; i <= n; ++i) {
    out.M[i - 1][i - 1] = L(P(F(1)));
    if (i < n) out.M[i][i - 1] = L(P(s.at_V(i)));
    out.R[i - 1][i - 1] = L(P(s.at_I(i)));
    if (i < n) out.R[i - 1][i] = L(P(F(1)));
  }
  out.M[0][n - 1] = L::z_power(s.at_V(n), -1);
  out.R[n - 1][0] = L::z_power(F(1), 1);

  for (int i = 1; i <= n; ++i) {
    out.L_MR[i - 1][i - 1] = L(P(s.at_I(i) + s.at_V(i - 1)));
    out.L_RM[i - 1][i - 1] = L(P(s.at_I(i) + s.at_V(i)));
    if (i < n) {
      out.L_MR[i - 1][i] = L(P(F(1)));
      out.L_RM[i - 1][i] = L(P(F(1)));
      out.L_MR[i][i - 1] = L(P(s.at_I(i) * s.at_V(i)));
      out.L_RM[i][i - 1] = L(P(s.at_I(i + 1) * s.at_V(i)));
    }
  }
  out.L_MR[0][n - 1] = L::z_power(s.at_I(n) * s.at_V(n), -1);
  out.L_RM[0][n - 1] = L::z_power(s.at_I(1) * s.at_V(n), -1);
  out.L_MR[n - 1][0] = L::z_power(F(1), 1);
  out.L_RM[n - 1][0] = L::z_power(F(1), 1);
  return out;
}

/// Characteristic matrix L - x E_n of the requested variant, as Laurent data.
template <class F>
LaurentMatrix<F> characteristic_matrix(const TodaState<F>& s, MinorSpec::Variant variant) {
  auto lax = lax_matrices(s);
  LaurentMatrix<F> m = variant == MinorSpec::Variant::MR ? lax.L_MR : lax.L_RM;
  Polynomial<F> minus_x = Polynomial<F>::monomial(F(-1), 1);
  for (int i = 0; i < s.n; ++i) m[i][i] = m[i][i] + Laurent<F>(minus_x);
  return m;
}

/// Determinant of the (k,l)-trimmed characteristic matrix (first k and
/// last l rows/columns removed).  With k+l >= 1 the z-corners are gone
/// and the matrix is tridiagonal, so the determinant is the three-term
/// continuant: expanding along the first row,
///
///   MR: |^k L_l| = (I_{k+1}+V_k-x) |^{k+1} L_l| - I_{k+1} V_{k+1} |^{k+2} L_l|
///   RM: |^k L_l| = (I_{k+1}+V_{k+1}-x) |^{k+1} L_l| - I_{k+2} V_{k+1} |^{k+2} L_l|
///
/// with the empty matrix contributing 1.
template <class F>
Polynomial<F> minor_det(const TodaState<F>& state, const MinorSpec& spec) {
  require_matrix_scale(state.n);
  const int n = state.n;
  if (spec.k < 0 || spec.l < 0 || spec.k + spec.l < 1 || spec.k + spec.l > n)
    throw BadInput("minor spec must satisfy 1 <= k+l <= n");
  const TodaState<F> s = spec.shift == 0 ? state : cyclic_shift(state, spec.shift);

  using P = Polynomial<F>;
  const P x = P::variable();
  const bool mr = spec.variant == MinorSpec::Variant::MR;

  auto diag = [&](int i) {
    return P(mr ? s.at_I(i) + s.at_V(i - 1) : s.at_I(i) + s.at_V(i)) - x;
  };
  auto offdiag = [&](int i) {  // product of entries (i+1,i) and (i,i+1)
    return P(mr ? s.at_I(i) * s.at_V(i) : s.at_I(i + 1) * s.at_V(i));
  };

  // rows k+1 .. n-l; continuant from the right end
  const int first = spec.k + 1, last = n - spec.l;
  P det_two_ahead(F(1));  // empty
  P det_one_ahead(F(1));
  for (int i = last; i >= first; --i) {
    P det_here = diag(i) * det_one_ahead;
    if (i + 1 <= last) det_here -= offdiag(i) * det_two_ahead;
    det_two_ahead = std::move(det_one_ahead);
    det_one_ahead = std::move(det_here);
  }
  return det_one_ahead;
}

/// Spectral curve z^2 + h(x) z - f = 0 of a state:
///   f = -I_1 V_1 ... I_n V_n
///   h = (-1)^{n-1} [ (I_n+V_{n-1}-x)|L_1| - I_n V_n |^1 L_1| - I_{n-1} V_{n-1} |L_2| ]
/// Equals (-1)^{n-1} z det(L(z) - x E_n) identically; laurent_det serves
/// as the oracle for that at test scale.
template <class F>
CurvePtr<F> spectral_curve(const TodaState<F>& s) {
  require_matrix_scale(s.n);
  const int n = s.n;
  using P = Polynomial<F>;
  const P x = P::variable();
  using V = MinorSpec::Variant;
  P l1 = minor_det(s, {.k = 0, .l = 1, .variant = V::MR});
  P l1_inner = minor_det(s, {.k = 1, .l = 1, .variant = V::MR});
  P l2 = minor_det(s, {.k = 0, .l = 2, .variant = V::MR});

  P h = (P(s.at_I(n) + s.at_V(n - 1)) - x) * l1 -
        P(s.at_I(n) * s.at_V(n)) * l1_inner -
        P(s.at_I(n - 1) * s.at_V(n - 1)) * l2;
  if (n % 2 == 0) h = -h;

  F f = -(s.product_I() * s.product_V());

  auto curve = std::make_shared<CurveModel<F>>();
  curve->kind = CurveModel<F>::Kind::spectral;
  curve->h = std::move(h);
  curve->f = P(f);
  curve->n = n;
  curve->genus = n - 1;
  return curve;
}

/// The minor-determinant polynomials attached to a state at times t and
/// t+1:
///   u = (-1)^{n-1} |L_1|        ubar = (-1)^{n-1} |RM_1|
///   v = (-1)^{n-1} I_n V_n |^1 L_1|    vbar = (-1)^{n-1} I_1 V_n |^1 RM_1|
///   w = (-1)^{n-1} I_{n-1} V_{n-1} |L_2|   wbar = (-1)^{n-1} I_n V_{n-1} |RM_2|
/// They satisfy h = (I_n+V_{n-1}-x) u - v - w and
/// h = (I_n+V_n-x) ubar - vbar - wbar exactly.
template <class F>
struct EigenvectorData {
  Polynomial<F> u, v, w;
  Polynomial<F> u_next, v_next, w_next;
  CurvePtr<F> curve;
};

template <class F>
EigenvectorData<F> uvw(const TodaState<F>& s) {
  require_matrix_scale(s.n);
  const int n = s.n;
  using V = MinorSpec::Variant;
  const F sign = (n % 2 == 1) ? F(1) : F(-1);

  EigenvectorData<F> out;
  out.u = sign * minor_det(s, {.k = 0, .l = 1, .variant = V::MR});
  out.v = (sign * (s.at_I(n) * s.at_V(n))) *
          minor_det(s, {.k = 1, .l = 1, .variant = V::MR});
  out.w = (sign * (s.at_I(n - 1) * s.at_V(n - 1))) *
          minor_det(s, {.k = 0, .l = 2, .variant = V::MR});
  out.u_next = sign * minor_det(s, {.k = 0, .l = 1, .variant = V::RM});
  out.v_next = (sign * (s.at_I(1) * s.at_V(n))) *
               minor_det(s, {.k = 1, .l = 1, .variant = V::RM});
  out.w_next = (sign * (s.at_I(n) * s.at_V(n - 1))) *
               minor_det(s, {.k = 0, .l = 2, .variant = V::RM});
  out.curve = spectral_curve(s);

  if (!out.u.is_monic())
    throw IdentityViolation("u is not monic; minor bookkeeping is broken");
  return out;
}

/// Eigenvector components phi_i(x,z) = (-1)^{i-1} |L_{i,n}| (delete
/// column i, row n), as Laurent objects.  They satisfy
/// (L - x E_n) phi = (0, ..., 0, *)^T with z * (last entry) = z^2 + h z - f,
/// phi_n = u and phi_1 = 1 - v/z.
template <class F>
std::vector<Laurent<F>> eigenvector_components(const TodaState<F>& s) {
  require_matrix_scale(s.n);
  const int n = s.n;
  auto chi = characteristic_matrix(s, MinorSpec::Variant::MR);
  std::vector<Laurent<F>> phi;
  phi.reserve(n);
  for (int col = 0; col < n; ++col) {
    LaurentMatrix<F> sub(n - 1, std::vector<Laurent<F>>(n - 1));
    for (int r = 0; r + 1 < n; ++r) {  // drop row n
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        sub[r][cc++] = chi[r][c];
      }
    }
    Laurent<F> d = laurent_det(sub);
    phi.push_back(col % 2 == 0 ? d : -d);
  }
  return phi;
}

}  // namespace toda
