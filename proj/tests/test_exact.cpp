#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenspec/lambda_poly.hpp"
#include "tenspec/rational.hpp"

using namespace tenspec;

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("3") == Rat(3));
  CHECK(rat_from_string("-7/4") == Rat(-7, 4));
  CHECK(rat_from_string("0.25") == Rat(1, 4));
  CHECK(rat_from_string("1.5e-3") == Rat(3, 2000));
  CHECK(rat_from_string("-2e2") == Rat(-200));
  CHECK_THROWS(rat_from_string(""));
  CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("doubles convert exactly") {
  CHECK(rat_from_double(0.5) == Rat(1, 2));
  CHECK(rat_from_double(-0.125) == Rat(-1, 8));
  double x = 0.1;  // not exactly 1/10 in binary
  Rat q = rat_from_double(x);
  CHECK(rat_to_double(q) == x);
  CHECK(q != Rat(1, 10));
}

TEST_CASE("complex rational arithmetic") {
  CRat i(Rat(0), Rat(1));
  CHECK(i * i == CRat(-1L));
  CRat z(Rat(3), Rat(-2));
  CHECK(z * z.conj() == CRat(Rat(13)));
  CHECK((z / z) == CRat(1L));
  CHECK_THROWS(CRat().inverse());
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(Int(10), 3) == 120);
  CHECK(binomial(Int(7), 0) == 1);
}

TEST_CASE("lambda poly basics") {
  LambdaPoly p({CRat(2L), CRat(0L), CRat(1L)});  // 2 + x^2
  CHECK(p.degree() == 2);
  CHECK(p.eval(CRat(3L)) == CRat(11L));

  LambdaPoly q = LambdaPoly::monomial(CRat(1L), 1);  // x
  LambdaPoly prod = p * q;
  CHECK(prod.degree() == 3);
  CHECK(prod.coeff(1) == CRat(2L));
  CHECK(prod.coeff(3) == CRat(1L));

  LambdaPoly d = prod.derivative();  // 2 + 3x^2
  CHECK(d.coeff(0) == CRat(2L));
  CHECK(d.coeff(2) == CRat(3L));

  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
}

TEST_CASE("trailing zeros trimmed") {
  LambdaPoly p({CRat(1L), CRat(1L)});
  LambdaPoly q({CRat(0L), CRat(1L)});
  CHECK((p - q).degree() == 0);
}
