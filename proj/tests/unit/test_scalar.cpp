#include <doctest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "kdirac/gauss_rational.hpp"
#include "kdirac/rational.hpp"

using kdirac::GaussRational;
using kdirac::Rational;

TEST_CASE("rational normal form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(-4, 2).den() == 1);
  CHECK(Rational(-4, 2).num() == -2);
  CHECK(Rational(7, 3).to_string() == "7/3");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS((void)Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(b < a);
  CHECK(Rational(-1, 2).sign() == -1);
}

TEST_CASE("rational promotes on overflow and demotes back") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  const Rational x(big);
  CHECK_FALSE(x.is_big());

  const Rational y = x * x;
  CHECK(y.is_big());
  CHECK_THROWS_AS((void)y.num(), std::overflow_error);
  CHECK(y.to_string() == "85070591730234615847396907784232501249");

  const Rational back = y / x;
  CHECK_FALSE(back.is_big());
  CHECK(back == x);

  const Rational sum = x + Rational(1);
  CHECK(sum.is_big());
  CHECK(sum - Rational(1) == x);
  CHECK_FALSE((sum - Rational(1)).is_big());

  const Rational tiny = Rational(1, big) * Rational(1, big);
  CHECK(tiny.is_big());
  CHECK(tiny * y == Rational(1));
}

TEST_CASE("rational keeps INT64_MIN out of the inline form") {
  const Rational m = Rational(std::numeric_limits<std::int64_t>::max()) + Rational(1);
  const Rational neg = -m;
  CHECK(neg.is_big());
  CHECK(-neg == m);
  CHECK(neg + m == Rational(0));
}

TEST_CASE("gaussian rationals") {
  const GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  const GaussRational z(Rational(3), Rational(4));
  CHECK(z * z.conj() == GaussRational(25));
  CHECK(z * z.inverse() == GaussRational(1));
  CHECK((z / z).is_real());
  CHECK(z.to_string().find('i') != std::string::npos);
  CHECK_THROWS_AS((void)GaussRational(0).inverse(), std::domain_error);
}
