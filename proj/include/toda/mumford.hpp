#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toda/curve.hpp"
#include "toda/spectral.hpp"

namespace toda {

/// Jacobian element in Mumford form: [P, Q] with P monic, deg P <= g,
/// Q the reduced representative mod P, plus the weight d.
///
/// Equality of divisors is [P,Q]-equality on the same curve; d is carried
/// as metadata and never participates in comparisons.  The composition
/// law below ignores d, which makes the pair-level arithmetic compute in
/// the quotient of the Jacobian by the cyclic subgroup supported at
/// infinity; that subgroup is handled separately via baby_step and
/// equal_mod_torsion.
template <class F>
struct MumfordDivisor {
  CurvePtr<F> curve;
  Polynomial<F> P;
  Polynomial<F> Q;
  int d = 0;

  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
    return same_curve(a.curve, b.curve) && a.P == b.P && a.Q == b.Q;
  }
};

template <class F>
MumfordDivisor<F> zero_divisor(CurvePtr<F> curve) {
  return {std::move(curve), Polynomial<F>(F(1)), Polynomial<F>(), 0};
}

/// The distinguished n-torsion generator ([1,0], 2).
template <class F>
MumfordDivisor<F> torsion_generator(CurvePtr<F> curve) {
  return {std::move(curve), Polynomial<F>(F(1)), Polynomial<F>(), 2};
}

template <class F>
bool is_zero_element(const MumfordDivisor<F>& a) {
  return a.P.is_one() && a.Q.is_zero() && a.d == 0;
}

template <class F>
Polynomial<F> membership_norm(const Polynomial<F>& Q, const CurveModel<F>& c) {
  return Q * Q + c.h * Q - c.f;
}

namespace detail {

/// Truncated square root of p at infinity: the unique polynomial E of
/// degree m = deg(p)/2 with deg(p - E^2) < m, when the leading
/// coefficient has a square root in F.  Same coefficient recursion as
/// poly_sqrt, minus the exactness verification.
template <class F>
std::optional<Polynomial<F>> sqrt_at_infinity(const Polynomial<F>& p) {
  if (p.is_zero() || p.degree() % 2 != 0) return std::nullopt;
  auto lead = exact_sqrt_scalar(p.leading());
  if (!lead || lead->is_zero()) return std::nullopt;
  const int m = p.degree() / 2;
  std::vector<F> q(static_cast<size_t>(m) + 1, F(0));
  q[static_cast<size_t>(m)] = *lead;
  const F two_lead = *lead + *lead;
  for (int i = m - 1; i >= 0; --i) {
    F acc = p.coeff(m + i);
    for (int j = i + 1; j <= m - 1; ++j)
      acc -= q[static_cast<size_t>(j)] * q[static_cast<size_t>(m + i - j)];
    q[static_cast<size_t>(i)] = acc / two_lead;
  }
  return Polynomial<F>::from_coeffs(std::move(q));
}

/// Degree window deg(Q'^2 + h Q' - f) <= 2g+2 - d + deg P, allowed to be
/// met by the stored representative or by Q lifted toward either branch
/// of z at infinity.  On spectral curves (constant f) the stored
/// representative suffices; the branch lifts matter on standard-form
/// curves, where f has full degree 2g+2 and the reduced representative
/// always saturates it.
template <class F>
bool degree_window_ok(const Polynomial<F>& P, const Polynomial<F>& Q,
                      const CurveModel<F>& c, int d) {
  const int bound = 2 * c.genus + 2 - d + P.degree();
  if (membership_norm(Q, c).degree() <= bound) return true;

  auto disc = sqrt_at_infinity(c.h * c.h + F(4) * c.f);
  if (!disc) return false;
  const F half = F(2).inverse();
  for (int sign : {+1, -1}) {
    Polynomial<F> branch = half * (F(sign) * *disc - c.h);
    Polynomial<F> lift = Q + (branch - Q) / P * P;
    if (membership_norm(lift, c).degree() <= bound) return true;
  }
  return false;
}

}  // namespace detail

struct Membership {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// All four membership conditions: monicity and degree bounds, the
/// divisibility P | Q^2 + hQ - f, the d interval, and the degree window.
template <class F>
Membership validate_membership(const MumfordDivisor<F>& e) {
  const CurveModel<F>& c = *e.curve;
  if (e.P.is_zero() || !e.P.is_monic()) return {false, "P must be monic"};
  if (e.P.degree() > c.genus) return {false, "deg P exceeds the genus"};
  if (e.Q.degree() >= e.P.degree()) return {false, "Q is not reduced mod P"};
  if (!divides(e.P, membership_norm(e.Q, c)))
    return {false, "P does not divide Q^2 + hQ - f"};
  if (e.d < e.P.degree() || e.d > c.genus + 1)
    return {false, "d outside [deg P, genus + 1]"};
  if (!detail::degree_window_ok(e.P, e.Q, c, e.d))
    return {false, "degree window violated"};
  return {true, ""};
}

/// Composition step of the Gauss law:
///   s = gcd(P1, P2, Q1+Q2+h) = f1 P1 + f2 P2 + f3 (Q1+Q2+h)
///   Pt = P1 P2 / s^2
///   Qt = (f1 P1 Q2 + f2 P2 Q1 + f3 (Q1 Q2 + f)) / s  mod Pt
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> compose(const MumfordDivisor<F>& a,
                                                const MumfordDivisor<F>& b) {
  if (!same_curve(a.curve, b.curve))
    throw BadInput("composition of divisors on different curves");
  const CurveModel<F>& c = *a.curve;

  auto [s, f1, f2, f3] = xgcd3(a.P, b.P, a.Q + b.Q + c.h);
  auto [pt, prem] = poly_divrem(a.P * b.P, s * s);
  if (!prem.is_zero())
    throw IdentityViolation("composition outside the algorithm's domain: s^2 does not divide P1 P2");
  Polynomial<F> qnum = f1 * a.P * b.Q + f2 * b.P * a.Q + f3 * (a.Q * b.Q + c.f);
  Polynomial<F> qt = divide_exact(qnum, s) % pt;
  if (!divides(pt, membership_norm(qt, c)))
    throw IdentityViolation("composed pair fails the divisibility invariant");
  return {pt, qt};
}

/// Reduction step, iterated while deg P > g:
///   [P, Q]  <-  [(Q^2 + hQ - f)/P made monic, -(Q + h) mod P']
/// d is then assigned as the smallest value in [deg P, g+1] satisfying
/// the degree window.
template <class F>
MumfordDivisor<F> reduce(Polynomial<F> pt, Polynomial<F> qt, CurvePtr<F> curve) {
  const CurveModel<F>& c = *curve;
  qt = qt % pt;
  if (!divides(pt, membership_norm(qt, c)))
    throw BadInput("reduce: P does not divide Q^2 + hQ - f");

  int guard = 4 * c.genus + 8;
  while (pt.degree() > c.genus) {
    if (--guard < 0)
      throw IdentityViolation("reduction failed to terminate");
    Polynomial<F> norm = membership_norm(qt, c);
    if (norm.is_zero())
      throw IdentityViolation("reduction hit a component of a reducible curve");
    Polynomial<F> next_p = divide_exact(norm, pt).made_monic();
    Polynomial<F> next_q = (-(qt + c.h)) % next_p;
    pt = std::move(next_p);
    qt = std::move(next_q);
  }

  MumfordDivisor<F> out{std::move(curve), pt, qt, pt.degree()};
  while (out.d <= c.genus + 1 &&
         !detail::degree_window_ok(out.P, out.Q, c, out.d))
    ++out.d;
  Membership m = validate_membership(out);
  if (!m) throw IdentityViolation("reduced divisor invalid: " + m.reason);
  return out;
}

template <class F>
MumfordDivisor<F> add(const MumfordDivisor<F>& a, const MumfordDivisor<F>& b) {
  if (is_zero_element(a)) return b;
  if (is_zero_element(b)) return a;
  auto [pt, qt] = compose(a, b);
  return reduce(std::move(pt), std::move(qt), a.curve);
}

template <class F>
MumfordDivisor<F> neg(const MumfordDivisor<F>& a) {
  MumfordDivisor<F> out = a;
  out.Q = (-(a.curve->h + a.Q)) % a.P;
  return out;
}

template <class F>
MumfordDivisor<F> sub(const MumfordDivisor<F>& a, const MumfordDivisor<F>& b) {
  return add(a, neg(b));
}

template <class F>
MumfordDivisor<F> scalar_mul(long k, const MumfordDivisor<F>& a) {
  if (k == 0) return zero_divisor(a.curve);
  if (k < 0) return scalar_mul(-k, neg(a));
  MumfordDivisor<F> acc = zero_divisor(a.curve);
  MumfordDivisor<F> base = a;
  unsigned long kk = static_cast<unsigned long>(k);
  while (true) {
    if (kk & 1UL) acc = add(acc, base);
    kk >>= 1;
    if (kk == 0UL) break;
    base = add(base, base);
  }
  return acc;
}

/// Addition of the torsion generator ([1,0],2) in the full Jacobian: one
/// reduction step applied in place.  The pair-level compose() treats
/// [1,0] as the identity, so the infinity-supported part of the class is
/// realized as this action instead.
template <class F>
MumfordDivisor<F> baby_step(const MumfordDivisor<F>& a) {
  const CurveModel<F>& c = *a.curve;
  if (c.kind != CurveModel<F>::Kind::spectral)
    throw BadInput("baby_step is defined on spectral curves");
  Polynomial<F> norm = membership_norm(a.Q, c);
  if (norm.is_zero())
    throw IdentityViolation("baby_step on a degenerate divisor");
  Polynomial<F> next_p = divide_exact(norm, a.P).made_monic();
  Polynomial<F> next_q = (-(a.Q + c.h)) % next_p;
  return reduce(std::move(next_p), std::move(next_q), a.curve);
}

/// Subtraction of ([1,0],2): conjugate of baby_step by negation.
template <class F>
MumfordDivisor<F> baby_step_inv(const MumfordDivisor<F>& a) {
  return neg(baby_step(neg(a)));
}

/// Smallest k in {0, ..., n-1} with a = b + k*([1,0],2) in the full
/// Jacobian, i.e. a equals the k-th baby step of b; (false, -1) if the
/// classes differ modulo the cyclic subgroup.
template <class F>
std::pair<bool, int> equal_mod_torsion(const MumfordDivisor<F>& a,
                                       const MumfordDivisor<F>& b) {
  if (!same_curve(a.curve, b.curve))
    throw BadInput("equal_mod_torsion on different curves");
  MumfordDivisor<F> cur = b;
  for (int k = 0; k < a.curve->n; ++k) {
    if (a == cur) return {true, k};
    cur = baby_step(cur);
  }
  return {false, -1};
}

/// Eigenvector map: state -> ([u, v mod u], d) with d = n for odd genus
/// and n-1 otherwise.
template <class F>
MumfordDivisor<F> eigenvector_map(const TodaState<F>& s) {
  EigenvectorData<F> data = uvw(s);
  MumfordDivisor<F> out{data.curve, data.u, data.v % data.u,
                        data.curve->genus % 2 == 1 ? s.n : s.n - 1};
  Membership m = validate_membership(out);
  if (!m)
    throw IdentityViolation("eigenvector image fails membership: " + m.reason);
  return out;
}

/// D = ([x, (-1)^n I_1...I_n], 2) on the spectral curve.
template <class F>
MumfordDivisor<F> divisor_D(const TodaState<F>& s) {
  CurvePtr<F> curve = spectral_curve(s);
  F q0 = s.product_I();
  if (s.n % 2 == 1) q0 = -q0;
  MumfordDivisor<F> out{curve, Polynomial<F>::variable(), Polynomial<F>(q0), 2};
  Membership m = validate_membership(out);
  if (!m) throw IdentityViolation("divisor D fails membership: " + m.reason);
  return out;
}

/// Transport to the standard-form curve y^2 = h^2 + 4f:
/// [P, Q] -> [P, (2Q + h) mod P], d unchanged.
template <class F>
MumfordDivisor<F> to_standard_form(const MumfordDivisor<F>& a) {
  CurvePtr<F> target = standard_form_curve(*a.curve);
  MumfordDivisor<F> out{target, a.P, (F(2) * a.Q + a.curve->h) % a.P, a.d};
  Membership m = validate_membership(out);
  if (!m)
    throw IdentityViolation("standard-form transport fails membership: " + m.reason);
  return out;
}

/// D-tilde = ([x, (-1)^n (I_1...I_n - V_1...V_n)], 2) on the standard form.
template <class F>
std::pair<CurvePtr<F>, MumfordDivisor<F>> divisor_D_tilde(const TodaState<F>& s) {
  CurvePtr<F> base = spectral_curve(s);
  CurvePtr<F> target = standard_form_curve(*base);
  F q0 = s.product_I() - s.product_V();
  if (s.n % 2 == 1) q0 = -q0;
  MumfordDivisor<F> out{target, Polynomial<F>::variable(), Polynomial<F>(q0), 2};
  Membership m = validate_membership(out);
  if (!m) throw IdentityViolation("divisor D-tilde fails membership: " + m.reason);
  return {target, out};
}

}  // namespace toda
