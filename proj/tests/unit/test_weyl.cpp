#include <doctest.h>

#include <stdexcept>

#include "kdirac/clifford.hpp"
#include "kdirac/weyl.hpp"

using namespace kdirac;
using F = RootSystem::Family;

namespace {

Weight ints(std::initializer_list<std::int64_t> xs) {
  Weight w;
  for (auto x : xs) w.emplace_back(x);
  return w;
}

}  // namespace

TEST_CASE("root systems") {
  CHECK(RootSystem::make(F::A, 3).positive_roots.size() == 6);
  CHECK(RootSystem::make(F::B, 3).positive_roots.size() == 9);
  CHECK(RootSystem::make(F::D, 4).positive_roots.size() == 12);
  CHECK(RootSystem::make(F::A, 2).ambient_dim() == 3);
  CHECK(RootSystem::make(F::D, 3).simple_roots.size() == 3);
  CHECK(RootSystem::make(F::B, 2).rho() == Weight{Rational(3, 2), Rational(1, 2)});
  CHECK_THROWS_AS(RootSystem::make(F::D, 1), std::invalid_argument);
}

TEST_CASE("classical dimensions") {
  const RootSystem a1 = RootSystem::make(F::A, 1);
  for (std::int64_t j = 0; j <= 6; ++j) CHECK(weyl_dim(a1, ints({j, 0})) == static_cast<std::uint64_t>(j + 1));
  CHECK(weyl_dim(RootSystem::make(F::A, 2), ints({1, 1, 0})) == 3);
  CHECK(weyl_dim(RootSystem::make(F::A, 2), ints({2, 1, 0})) == 8);
  CHECK(weyl_dim(RootSystem::make(F::B, 2), ints({1, 0})) == 5);
  CHECK(weyl_dim(RootSystem::make(F::B, 3), ints({1, 1, 0})) == 21);
  CHECK(weyl_dim(RootSystem::make(F::D, 3), ints({1, 0, 0})) == 6);
  CHECK(weyl_dim(RootSystem::make(F::D, 3), ints({1, 1, 0})) == 15);
  CHECK(weyl_dim(RootSystem::make(F::D, 4), ints({2, 0, 0, 0})) == 35);
}

TEST_CASE("spinor weights") {
  for (std::size_t m = 2; m <= 5; ++m) {
    CHECK(weyl_dim(RootSystem::make(F::B, m), spin_weight(m, {})) == (std::uint64_t{1} << m));
    const RootSystem d = RootSystem::make(F::D, m);
    CHECK(weyl_dim(d, spin_weight(m, {})) == (std::uint64_t{1} << (m - 1)));
    CHECK(weyl_dim(d, spin_weight(m, {}, true)) == (std::uint64_t{1} << (m - 1)));
    const ChiralSplit split = chirality_split(build_spinor_rep(2 * m));
    CHECK(split.plus == weyl_dim(d, spin_weight(m, {})));
  }
  // Vector (x) spinor = spinor + (vector-spinor) for B_2: 5 * 4 = 4 + 16.
  CHECK(weyl_dim(RootSystem::make(F::B, 2), spin_weight(2, {1})) == 16);
}

TEST_CASE("invalid weights") {
  const RootSystem b2 = RootSystem::make(F::B, 2);
  CHECK_THROWS_AS(weyl_dim(b2, ints({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(b2, ints({1})), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(b2, Weight{Rational(1, 3), Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(spin_weight(2, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("module table") {
  const std::uint64_t cubic[] = {32, 200, 448, 1680, 2816, 8736};
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto rows = module_table(n);
    std::uint64_t total = 0;
    for (const auto& r : rows) total += r.dim;
    CHECK(total == cubic[n - 3]);
  }
  CHECK(module_table(3).size() == 1);
  CHECK(module_table(4).at(1).dim == 40);
  CHECK(module_table(5).at(1).dim == 128);
  CHECK(module_table(6).at(1).dim == 560);
  CHECK_THROWS_AS(module_table(2), std::invalid_argument);
}
