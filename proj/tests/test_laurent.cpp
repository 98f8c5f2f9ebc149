#include <doctest.h>

#include "toda/laurent.hpp"
#include "toda/rational.hpp"

using toda::BigRational;
using toda::Laurent;
using toda::LaurentMatrix;
using toda::Polynomial;
using L = Laurent<BigRational>;
using QPoly = Polynomial<BigRational>;

TEST_SUITE("laurent") {

TEST_CASE("no zero parts are stored") {
  L a = L::z_power(BigRational(2), 3);
  L b = L::z_power(BigRational(-2), 3);
  CHECK((a + b).is_zero());
  CHECK((a + b).parts().empty());
}

TEST_CASE("z-shift and multiplication") {
  L z = L::z_power(BigRational(1), 1);
  L zinv = L::z_power(BigRational(1), -1);
  CHECK(z * zinv == L(QPoly(BigRational(1))));
  L p = L(QPoly::variable());  // x at z^0
  CHECK(p.shifted_z(2) == p * z * z);
}

TEST_CASE("determinant: identity and diagonal") {
  auto one = L(QPoly(BigRational(1)));
  LaurentMatrix<BigRational> id2{{one, L()}, {L(), one}};
  CHECK(laurent_det(id2) == one);

  LaurentMatrix<BigRational> diag{{L::z_power(BigRational(1), 1), L()},
                                  {L(), L::z_power(BigRational(1), -1)}};
  CHECK(laurent_det(diag) == one);
}

TEST_CASE("determinant with all z-exponents zero matches the plain 2x2 formula") {
  auto entry = [](long c0, long c1) {
    return L(QPoly::from_coeffs({BigRational(c0), BigRational(c1)}));
  };
  LaurentMatrix<BigRational> m{{entry(1, 2), entry(0, 1)},
                               {entry(3, 0), entry(2, -1)}};
  L expect = entry(1, 2) * entry(2, -1) - entry(0, 1) * entry(3, 0);
  CHECK(laurent_det(m) == expect);
}

TEST_CASE("non-square input is rejected") {
  LaurentMatrix<BigRational> bad{{L(), L()}};
  CHECK_THROWS_AS(laurent_det(bad), toda::BadInput);
}

}  // TEST_SUITE
