#include <doctest.h>

#include "toda/harness.hpp"
#include "toda/spectral.hpp"

using namespace toda;
using QPoly = Polynomial<BigRational>;
using QState = TodaState<BigRational>;
using Spec = MinorSpec;

namespace {

QState instance3() {
  return QState({BigRational(1), BigRational(2), BigRational(3)},
                {BigRational(4), BigRational(5), BigRational(6)});
}

QPoly qpoly(std::initializer_list<long> ascending) {
  std::vector<BigRational> c;
  for (long v : ascending) c.emplace_back(v);
  return QPoly::from_coeffs(std::move(c));
}

// Independent oracle: literally trim the characteristic matrix and
// cofactor-expand.  The result must live purely at z^0.
QPoly minor_oracle(const QState& state, const Spec& spec) {
  const QState s = spec.shift == 0 ? state : cyclic_shift(state, spec.shift);
  auto chi = characteristic_matrix(s, spec.variant);
  const int n = s.n;
  const int size = n - spec.k - spec.l;
  LaurentMatrix<BigRational> sub(size, std::vector<Laurent<BigRational>>(size));
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) sub[r][c] = chi[r + spec.k][c + spec.k];
  Laurent<BigRational> det = laurent_det(sub);
  for (const auto& [zexp, part] : det.parts()) REQUIRE(zexp == 0);
  return det.at(0);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("lax matrices match the displays and factor exactly") {
  QState s = instance3();
  auto lax = lax_matrices(s);
  using L = Laurent<BigRational>;

  // diagonals of the two characteristic shapes
  CHECK(lax.L_MR[0][0] == L(QPoly(BigRational(7))));
  CHECK(lax.L_MR[1][1] == L(QPoly(BigRational(6))));
  CHECK(lax.L_MR[2][2] == L(QPoly(BigRational(8))));
  CHECK(lax.L_RM[0][0] == L(QPoly(BigRational(5))));
  CHECK(lax.L_RM[1][1] == L(QPoly(BigRational(7))));
  CHECK(lax.L_RM[2][2] == L(QPoly(BigRational(9))));

  // corner entries carry the spectral parameter
  CHECK(lax.L_MR[0][2] == L::z_power(BigRational(18), -1));  // I_3 V_3 / z
  CHECK(lax.L_RM[0][2] == L::z_power(BigRational(6), -1));   // I_1 V_3 / z
  CHECK(lax.L_MR[2][0] == L::z_power(BigRational(1), 1));

  CHECK(laurent_mat_mul(lax.M, lax.R) == lax.L_MR);
  CHECK(laurent_mat_mul(lax.R, lax.M) == lax.L_RM);
  CHECK_THROWS_AS(lax_matrices(QState({BigRational(1), BigRational(2)},
                                      {BigRational(3), BigRational(4)})),
                  toda::BadInput);
}

TEST_CASE("minor determinants on the worked instance") {
  QState s = instance3();
  CHECK(minor_det(s, {.k = 0, .l = 1, .variant = Spec::Variant::MR}) ==
        qpoly({38, -13, 1}));
  CHECK(minor_det(s, {.k = 1, .l = 1, .variant = Spec::Variant::MR}) ==
        qpoly({6, -1}));
  CHECK(minor_det(s, {.k = 0, .l = 3, .variant = Spec::Variant::MR}) ==
        qpoly({1}));  // empty matrix
  CHECK(minor_det(s, {.k = 2, .l = 1, .variant = Spec::Variant::RM}) ==
        qpoly({1}));
  CHECK_THROWS_AS(minor_det(s, {.k = 0, .l = 0, .variant = Spec::Variant::MR}),
                  toda::BadInput);
  CHECK_THROWS_AS(minor_det(s, {.k = 2, .l = 2, .variant = Spec::Variant::MR}),
                  toda::BadInput);
}

TEST_CASE("recurrence equals cofactor expansion for every trim, both variants") {
  toda::Rng rng(555);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + static_cast<int>(rng.range(0, 2));
    QState s = toda::harness::random_rational_state(rng, n, 9, 0);
    for (int k = 0; k <= n; ++k)
      for (int l = 0; k + l <= n && l <= n; ++l) {
        if (k + l < 1) continue;
        for (auto variant : {Spec::Variant::MR, Spec::Variant::RM}) {
          Spec spec{.k = k, .l = l, .variant = variant};
          CHECK(minor_det(s, spec) == minor_oracle(s, spec));
        }
      }
  }
}

TEST_CASE("spectral curve of the worked instance") {
  QState s = instance3();
  auto curve = spectral_curve(s);
  CHECK(curve->f == QPoly(BigRational(-720)));
  CHECK(curve->h == qpoly({126, -114, 21, -1}));
  CHECK(curve->h.coeff(2) == BigRational(21));  // trace 7 + 6 + 8
  CHECK(curve->genus == 2);
  CHECK(curve->n == 3);
}

TEST_CASE("curve identity against the laurent determinant, both factorizations") {
  toda::Rng rng(777);
  for (int trial = 0; trial < 9; ++trial) {
    const int n = 3 + static_cast<int>(rng.range(0, 2));
    QState s = trial == 0 ? instance3()
                          : toda::harness::random_rational_state(rng, n, 9, 0);
    auto curve = spectral_curve(s);
    Laurent<BigRational> expect =
        Laurent<BigRational>::z_power(BigRational(1), 2) +
        Laurent<BigRational>(curve->h).shifted_z(1) +
        Laurent<BigRational>(-curve->f);
    for (auto variant : {Spec::Variant::MR, Spec::Variant::RM}) {
      Laurent<BigRational> det = laurent_det(characteristic_matrix(s, variant));
      Laurent<BigRational> lhs = det.shifted_z(1);
      if (s.n % 2 == 0) lhs = -lhs;  // (-1)^(n-1) z det(L - xE)
      CHECK(lhs == expect);
    }
  }
}

TEST_CASE("curve is invariant under the flow and under cyclic shifts") {
  QState s = instance3();
  auto curve = spectral_curve(s);
  CHECK(*spectral_curve(toda_step(s)) == *curve);
  for (int k = 1; k < 3; ++k) CHECK(*spectral_curve(cyclic_shift(s, k)) == *curve);

  QState shifted = cyclic_shift(s, 1);
  CHECK(shifted.I == std::vector<BigRational>{BigRational(2), BigRational(3), BigRational(1)});
}

TEST_CASE("uvw on the worked instance, including the next-time triple") {
  QState s = instance3();
  auto e = uvw(s);
  CHECK(e.u == qpoly({38, -13, 1}));
  CHECK(e.v == qpoly({108, -18}));
  CHECK(e.w == qpoly({70, -10}));
  CHECK(e.u_next == qpoly({27, -12, 1}));
  CHECK(e.v_next == qpoly({42, -6}));
  CHECK(e.w_next == qpoly({75, -15}));

  // h-decompositions at both times, exact polynomial zero
  const QPoly x = QPoly::variable();
  const QPoly h = e.curve->h;
  CHECK(h + e.v + e.w - (QPoly(BigRational(3 + 5)) - x) * e.u == QPoly());
  CHECK(h + e.v_next + e.w_next - (QPoly(BigRational(3 + 6)) - x) * e.u_next == QPoly());

  // little lemma: ((-1)^n I_1...I_n - v(0)) / u(0) = -I_n
  CHECK((BigRational(-6) - e.v.eval(BigRational(0))) / e.u.eval(BigRational(0)) ==
        BigRational(-3));
}

TEST_CASE("lemma identity suite on seeded random states") {
  toda::Rng rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.range(0, 2));
    QState s = toda::harness::random_rational_state(rng, n, 9, 0);
    auto e = uvw(s);
    const QPoly h = e.curve->h;
    const QPoly f = e.curve->f;
    auto norm = [&](const QPoly& q) { return q * q + h * q - f; };

    // u | w^2 + hw - f and the next-time analogue
    CHECK(divides(e.u, norm(e.w)));
    CHECK(divides(e.u_next, norm(e.w_next)));

    // vw + f = (-1)^(n-1) I_{n-1}V_{n-1} I_n V_n u |^1 L_2|
    QPoly rhs = minor_det(s, {.k = 1, .l = 2, .variant = Spec::Variant::MR});
    BigRational scale = s.at_I(n - 1) * s.at_V(n - 1) * s.at_I(n) * s.at_V(n);
    if (n % 2 == 0) scale = -scale;
    CHECK(e.v * e.w + f == scale * (e.u * rhs));

    // (v^2 + hv - f)/(I_n u) = V_n u_next - (v_next - v)
    QPoly lhs10 = s.at_I(n).inverse() * divide_exact(norm(e.v), e.u);
    CHECK(lhs10 == s.at_V(n) * e.u_next - (e.v_next - e.v));

    // key relation: -I_n u + v = -I_n u_next + w_next
    CHECK((-s.at_I(n)) * e.u + e.v == (-s.at_I(n)) * e.u_next + e.w_next);

    // lemma 8 for all admissible l
    for (int l = 1; l <= n - 2; ++l) {
      const QPoly x = QPoly::variable();
      QPoly lhs = (QPoly(s.at_V(1)) - x) *
                      minor_det(s, {.k = 1, .l = l, .variant = Spec::Variant::RM}) -
                  QPoly(s.at_I(2) * s.at_V(1)) *
                      minor_det(s, {.k = 2, .l = l, .variant = Spec::Variant::RM});
      QPoly rhs8 = (QPoly(s.at_V(n - l)) - x) *
                       minor_det(s, {.k = 1, .l = l, .variant = Spec::Variant::MR}) -
                   QPoly(s.at_I(n - l) * s.at_V(n - l)) *
                       minor_det(s, {.k = 1, .l = l + 1, .variant = Spec::Variant::MR});
      CHECK(lhs == rhs8);
    }

    // (w^2 + wh - f)/(I_{n-1} V_{n-1} u) equals u of the back-shifted
    // state, i.e. (-1)^(n-1) |sigma^{-1}(MR)_1|.  The sign factor is
    // needed at even n.
    QPoly lhs11 = (s.at_I(n - 1) * s.at_V(n - 1)).inverse() *
                  divide_exact(norm(e.w), e.u);
    CHECK(lhs11 == uvw(cyclic_shift(s, -1)).u);
    QPoly shifted_minor = minor_det(
        s, {.k = 0, .l = 1, .variant = Spec::Variant::MR, .shift = -1});
    if (n % 2 == 0) shifted_minor = -shifted_minor;
    CHECK(lhs11 == shifted_minor);

    // the forward-shift analogue: (v^2 + hv - f)/(I_n V_n u) = u(sigma s)
    QPoly lhs_fwd =
        (s.at_I(n) * s.at_V(n)).inverse() * divide_exact(norm(e.v), e.u);
    CHECK(lhs_fwd == uvw(cyclic_shift(s, 1)).u);

    // little lemma, guarded by u(0) != 0
    const BigRational u0 = e.u.eval(BigRational(0));
    if (!u0.is_zero()) {
      BigRational prod_i = s.product_I();
      if (n % 2 == 1) prod_i = -prod_i;
      CHECK((prod_i - e.v.eval(BigRational(0))) / u0 == -s.at_I(n));
    }
  }
}

TEST_CASE("eigenvector components solve the characteristic system") {
  toda::Rng rng(31);
  for (int n : {3, 4}) {
    QState s = toda::harness::random_rational_state(rng, n, 6, 0);
    auto phi = eigenvector_components(s);
    auto e = uvw(s);
    auto curve = e.curve;

    // phi_n = u and phi_1 = 1 - v/z
    CHECK(phi.back() == Laurent<BigRational>(e.u));
    Laurent<BigRational> expect1 =
        Laurent<BigRational>(QPoly(BigRational(1))) +
        Laurent<BigRational>(-e.v).shifted_z(-1);
    CHECK(phi.front() == expect1);

    // (L - xE) phi = (0, ..., 0, *) with z * last = z^2 + hz - f
    auto chi = characteristic_matrix(s, Spec::Variant::MR);
    for (int row = 0; row < n; ++row) {
      Laurent<BigRational> acc;
      for (int col = 0; col < n; ++col) acc = acc + chi[row][col] * phi[col];
      if (row + 1 < n) {
        CHECK(acc.is_zero());
      } else {
        Laurent<BigRational> expect =
            Laurent<BigRational>::z_power(BigRational(1), 2) +
            Laurent<BigRational>(curve->h).shifted_z(1) +
            Laurent<BigRational>(-curve->f);
        CHECK(acc.shifted_z(1) == expect);
      }
    }
  }
}

}  // TEST_SUITE
