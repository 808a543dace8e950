#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kdirac/euclidean.hpp"
#include "kdirac/tableau.hpp"

using namespace kdirac;

namespace {

std::size_t choose(std::size_t n, std::size_t r) {
  return static_cast<std::size_t>(binomial(n, r));
}

// A inside V* (x) W for dim V = 2, dim W = 1 spanned by the first coordinate covector.
Tableau first_covector() {
  const std::vector<SparseVector> v = {SparseVector::unit(0)};
  return Tableau::make(2, 1, SubspaceBasis::span(2, v));
}

// S^2 V* (x) W inside V* (x) V* (x) W, coordinates (a, b, w) -> (a n + b) W + w.
SubspaceBasis symmetric_tensors(std::size_t n, std::size_t W) {
  std::vector<SparseVector> gens;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t w = 0; w < W; ++w) {
        gens.push_back(SparseVector::unit((a * n + b) * W + w) + SparseVector::unit((b * n + a) * W + w));
      }
    }
  }
  return SubspaceBasis::span(n * n * W, gens);
}

// V* (x) A inside V* (x) V* (x) W.
SubspaceBasis covector_times(const Tableau& t) {
  const std::size_t block = t.dim_V * t.dim_W;
  std::vector<SparseVector> gens;
  for (std::size_t a = 0; a < t.dim_V; ++a) {
    for (const auto& sigma : t.basis.vectors()) {
      std::vector<SparseVector::Entry> e;
      for (const auto& x : sigma) e.push_back({a * block + x.index, x.value});
      gens.emplace_back(std::move(e));
    }
  }
  return SubspaceBasis::span(t.dim_V * block, gens);
}

}  // namespace

TEST_CASE("symmetric index") {
  const SymmetricIndex idx(4, 3);
  CHECK(idx.size() == choose(6, 3));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    std::vector<std::size_t> t = idx.tuple(r);
    CHECK(std::is_sorted(t.begin(), t.end()));
    CHECK(idx.rank(t) == r);
    std::reverse(t.begin(), t.end());
    CHECK(idx.rank(t) == r);
  }
  CHECK(idx.tuple(0) == std::vector<std::size_t>{0, 0, 0});
  CHECK(idx.tuple(1) == std::vector<std::size_t>{0, 0, 1});
  CHECK(SymmetricIndex(5, 0).size() == 1);
}

TEST_CASE("full and zero tableaux are involutive") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t W = 1; W <= 3; ++W) {
      const Tableau full = Tableau::full(n, W);
      const CartanReport r = cartan_test(full, OrderedBasis::identity(n));
      CHECK(r.dim_prolongation == W * choose(n + 1, 2));
      CHECK(r.characters == std::vector<std::size_t>(n, W));
      CHECK(r.involutive);
      CHECK(h02_dim(full) == 0);

      const Tableau zero = Tableau::zero(n, W);
      const CartanReport z = cartan_test(zero, OrderedBasis::identity(n));
      CHECK(z.dim_prolongation == 0);
      CHECK(z.involutive);
      CHECK(h02_dim(zero) == W * choose(n, 2));
    }
  }
}

TEST_CASE("the ordering decides whether the test is sharp") {
  const Tableau t = first_covector();
  const CartanReport good = cartan_test(t, OrderedBasis::identity(2));
  CHECK(good.characters == std::vector<std::size_t>{1, 0});
  CHECK(good.involutive);

  const ExactMatrix swap = ExactMatrix::from_rows({{0, 1}, {1, 0}});
  const CartanReport bad = cartan_test(t, OrderedBasis::from_dual_vectors(swap, "swap"));
  CHECK(bad.characters == std::vector<std::size_t>{0, 1});
  CHECK(bad.rhs == 2);
  CHECK(bad.dim_prolongation == 1);
  CHECK_FALSE(bad.involutive);
  CHECK(bad.ordering_label == "swap");

  CHECK(cartan_test(t, search_ordering(t, OrderingStrategy::greedy())).involutive);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(cartan_test(t, search_ordering(t, OrderingStrategy::random(seed))).involutive);
  }
}

TEST_CASE("prolongation agrees with the intersection in V* (x) V* (x) W") {
  const EuclideanSystem sys = build_euclidean(3, 2);
  const Tableau t = euclidean_tableau(sys);
  const SubspaceBasis meet = intersect(symmetric_tensors(t.dim_V, t.dim_W), covector_times(t));
  const Prolongation p = prolong(t);
  CHECK(p.raw.dim() == meet.dim());
  CHECK(p.lifted.dim() == meet.dim());
  CHECK(prolongation_dim(t) == meet.dim());
  CHECK(SymbolTower(t, 0).level_dim(1) == meet.dim());
  CHECK(p.lifted.dim_W == t.dim());
}

TEST_CASE("second prolongation equals the prolongation of the first") {
  for (std::size_t n = 3; n <= 4; ++n) {
    const EuclideanSystem sys = build_euclidean(n, 2);
    const SymbolTower tower(euclidean_tableau(sys), 2);
    CHECK(prolongation_dim(tower.lifted(1)) == tower.level_dim(2));
    CHECK(prolongation_dim(tower.lifted(2)) == tower.level_dim(3));
    CHECK(tower.level(1).dim() == prolong(tower.base()).raw.dim());
  }
}

TEST_CASE("prolongation does not depend on the ordering") {
  const EuclideanSystem sys = build_euclidean(3, 2);
  const SymbolTower tower(euclidean_tableau(sys), 1);
  const Tableau lifted = tower.lifted(1);
  std::size_t rhs_min = SIZE_MAX;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const CartanReport r = cartan_test(tower, 1, search_ordering(lifted, OrderingStrategy::random(seed)));
    CHECK(r.dim_prolongation == tower.level_dim(2));
    CHECK(r.dim_prolongation <= r.rhs);
    std::size_t total = 0;
    for (std::size_t c : r.characters) total += c;
    CHECK(total == lifted.dim());
    rhs_min = std::min(rhs_min, r.rhs);
  }
  CHECK(rhs_min == tower.level_dim(2));
}

TEST_CASE("random orderings are reproducible") {
  CHECK(random_change_matrix(9, 42) == random_change_matrix(9, 42));
  CHECK_FALSE(random_change_matrix(9, 42) == random_change_matrix(9, 43));
  const ExactMatrix m = random_change_matrix(6, 3);
  CHECK(rank(m) == 6);
  for (const auto& row : m.row_data()) {
    for (const auto& e : row) {
      CHECK(e.value.is_real());
      CHECK(e.value.re().is_integer());
      CHECK(e.value.re().num() >= -3);
      CHECK(e.value.re().num() <= 3);
    }
  }
  const Tableau t = Tableau::full(4, 2);
  const OrderedBasis a = search_ordering(t, OrderingStrategy::random(8));
  const OrderedBasis b = search_ordering(t, OrderingStrategy::random(8));
  CHECK(a.dual == b.dual);
  CHECK(a.change * a.dual == ExactMatrix::identity(4));
}

TEST_CASE("filtration bookkeeping") {
  CHECK(characters_from_filtration(5, {3, 1, 0}) == std::vector<std::size_t>{2, 2, 1});
  CHECK_THROWS_AS(characters_from_filtration(2, {3}), std::logic_error);
  CHECK_THROWS_AS(filtration_dims(Tableau::full(3, 1), OrderedBasis::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(Tableau::make(2, 2, SubspaceBasis(3)), std::invalid_argument);
  CHECK_THROWS_AS(OrderedBasis::from_change(ExactMatrix::from_rows({{1, 1}, {1, 1}}), "x"), std::domain_error);
}
