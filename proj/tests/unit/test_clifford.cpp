#include <doctest.h>

#include <stdexcept>

#include "kdirac/clifford.hpp"

using namespace kdirac;

TEST_CASE("generators anticommute") {
  for (std::size_t n = 3; n <= 8; ++n) {
    CAPTURE(n);
    const CliffordRep rep = build_spinor_rep(n);
    REQUIRE(rep.gamma.size() == n);
    CHECK(rep.s == (std::size_t{1} << (n / 2)));
    const ExactMatrix id = ExactMatrix::identity(rep.s);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const ExactMatrix ac = rep.gamma[a] * rep.gamma[b] + rep.gamma[b] * rep.gamma[a];
        CHECK(ac == (a == b ? GaussRational(-2) * id : ExactMatrix(rep.s, rep.s)));
      }
    }
    CHECK(satisfies_clifford_relation(rep));
  }
}

TEST_CASE("entries are units or zero") {
  const GaussRational i = GaussRational::i();
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& g : build_spinor_rep(n).gamma) {
      for (const auto& row : g.row_data()) {
        for (const auto& e : row) {
          const GaussRational v = e.value;
          CHECK((v == 1 || v == -1 || v == i || v == -i));
        }
      }
    }
  }
}

TEST_CASE("chirality for even n") {
  for (std::size_t n = 4; n <= 8; n += 2) {
    const CliffordRep rep = build_spinor_rep(n);
    REQUIRE(rep.chirality);
    const ExactMatrix& c = *rep.chirality;
    CHECK(c * c == ExactMatrix::identity(rep.s));
    for (const auto& g : rep.gamma) CHECK((c * g + g * c).is_zero());
    const ChiralSplit split = chirality_split(rep);
    CHECK(split.plus == rep.s / 2);
    CHECK(split.minus == rep.s / 2);
  }
  CHECK_FALSE(build_spinor_rep(5).chirality);
  CHECK_THROWS_AS(chirality_split(build_spinor_rep(5)), std::invalid_argument);
}

TEST_CASE("clifford_apply squares to minus one") {
  const CliffordRep rep = build_spinor_rep(5);
  std::vector<GaussRational> v(rep.s);
  v[1] = 3;
  v[2] = GaussRational::i();
  for (std::size_t a = 1; a <= 5; ++a) {
    std::vector<GaussRational> w = clifford_apply(rep, a, clifford_apply(rep, a, v));
    for (std::size_t j = 0; j < v.size(); ++j) CHECK(w[j] == -v[j]);
  }
  CHECK_THROWS_AS(clifford_apply(rep, 0, v), std::out_of_range);
  CHECK_THROWS_AS(clifford_apply(rep, 6, v), std::out_of_range);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(RepParams::make(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(RepParams::make(3, 1), std::invalid_argument);
  const RepParams p = RepParams::make(7, 3);
  CHECK(p.m == 3);
  CHECK(p.s == 8);
  CHECK_THROWS_AS(build_spinor_rep(2), std::invalid_argument);
}
