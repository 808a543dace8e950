#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "kdirac/euclidean.hpp"

using namespace kdirac;

namespace {

std::vector<SpinorPoly> solutions(const EuclideanSystem& sys, unsigned d) {
  std::vector<SpinorPoly> out;
  const SubspaceBasis space = solution_space(sys.ops, *sys.vars, sys.params.s, d);
  for (const auto& v : space.vectors()) {
    out.push_back(to_spinor_poly(sys.vars, sys.params.s, d, v));
  }
  return out;
}

SpinorPoly unit_spinor(const VarsPtr& v, std::size_t s, const Exponents& e, std::size_t comp) {
  std::vector<GaussRational> spinor(s);
  spinor[comp] = 1;
  return SpinorPoly::monomial(v, s, e, spinor);
}

}  // namespace

TEST_CASE("variables are row major") {
  const EuclideanSystem sys = build_euclidean(4, 3);
  CHECK(sys.var(1, 1) == 0);
  CHECK(sys.var(1, 3) == 2);
  CHECK(sys.var(2, 1) == 3);
  CHECK(sys.var(4, 3) == 11);
  CHECK(sys.vars->names[sys.var(2, 3)] == "x23");
  CHECK(matrix_var_name('x', 10, 2) == "x10_2");
  CHECK(matrix_var_name('y', 1, 2) == "y12");
  CHECK(sys.ops.size() == 3);
}

TEST_CASE("tableau dimension is k s (n - 1)") {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t k = 2; k <= 3; ++k) {
      const EuclideanSystem sys = build_euclidean(n, k);
      const Tableau t = euclidean_tableau(sys);
      CHECK(t.dim_V == n * k);
      CHECK(t.dim_W == sys.params.s);
      CHECK(t.dim() == k * sys.params.s * (n - 1));
      // Linear solutions are the tableau.
      CHECK(solution_space(sys.ops, *sys.vars, sys.params.s, 1).dim() == t.dim());
    }
  }
}

TEST_CASE("prolongations match polynomial solutions") {
  const EuclideanSystem sys = build_euclidean(3, 2);
  const SymbolTower tower(euclidean_tableau(sys), 1);
  CHECK(tower.level_dim(1) == solution_space(sys.ops, *sys.vars, 2, 2).dim());
  CHECK(tower.level_dim(2) == solution_space(sys.ops, *sys.vars, 2, 3).dim());
  CHECK(tower.level_dim(1) == 18);
  CHECK(tower.level_dim(2) == 32);
}

TEST_CASE("paper orderings") {
  const EuclideanSystem sys = build_euclidean(3, 2);
  const OrderedBasis ob0 = euclidean_level0_ordering(sys).ordered_basis();
  CHECK(ob0.dual == ExactMatrix::identity(6));
  CHECK(ob0.label == "paper");
  const PaperOrdering p1 = euclidean_level1_ordering(sys);
  CHECK(rank(p1.vectors) == 6);
  CHECK_THROWS_AS(euclidean_level1_ordering(build_euclidean(3, 3)), std::invalid_argument);
}

TEST_CASE("the t-chart") {
  const EuclideanSystem sys = build_euclidean(3, 2);
  const TChart chart = t_chart(sys);
  CHECK(chart.basis * chart.inverse == ExactMatrix::identity(6));
  // x31 = t3 + t4 and x32 = t3 - t4.
  CHECK(chart.basis.at(sys.var(3, 1), 2) == GaussRational(1));
  CHECK(chart.basis.at(sys.var(3, 1), 3) == GaussRational(1));
  CHECK(chart.basis.at(sys.var(3, 2), 3) == GaussRational(-1));
  CHECK(chart.basis.at(sys.var(1, 2), 4) == GaussRational(1));
  CHECK(chart.basis.at(sys.var(2, 1), 5) == GaussRational(1));
  for (const auto& psi : solutions(sys, 2)) {
    CHECK(is_solution(chart.ops, psi.substitute_linear(chart.t_vars, chart.basis)));
  }
}

TEST_CASE("initial data dimension formula") {
  CHECK(initial_dim_formula(3, 2, 2) == 18);
  CHECK(initial_dim_formula(3, 2, 3) == 32);
  CHECK(initial_dim_formula(3, 2, 4) == 50);
  CHECK(initial_dim_formula(4, 2, 2) == 80);
  CHECK_THROWS_AS(initial_dim_formula(3, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(initial_dim_formula(3, 2, 1), std::invalid_argument);
  const EuclideanSystem sys = build_euclidean(3, 2);
  CHECK(solution_space(sys.ops, *sys.vars, 2, 4).dim() == 50);
}

TEST_CASE("extension from initial data") {
  const EuclideanSystem sys = build_euclidean(3, 2);
  const TChart chart = t_chart(sys);
  const VarsPtr& tv = chart.t_vars;
  const SpinorPoly zero(tv, 2);
  CHECK(extend_from_initial_data(sys, chart, zero, zero).is_zero());

  const SpinorPoly g1 = unit_spinor(tv, 2, {2, 0, 0, 0, 0, 0}, 0);
  const SpinorPoly psi = extend_from_initial_data(sys, chart, g1, zero);
  CHECK(is_solution(chart.ops, psi));
  CHECK(is_solution(sys.ops, psi.substitute_linear(sys.vars, chart.inverse)));
  CHECK(psi.coeff({2, 0, 0, 0, 0, 0}, 0) == GaussRational(1));
  // No other data monomial appears.
  for (const auto& [key, c] : psi.terms()) {
    const unsigned tail = key.exps[3] + key.exps[4] + key.exps[5];
    if (tail == 0 || (tail == 1 && key.exps[3] == 1)) CHECK(key.exps == Exponents{2, 0, 0, 0, 0, 0});
  }

  const SpinorPoly g2 = unit_spinor(tv, 2, {0, 1, 1, 0, 0, 0}, 1);
  const SpinorPoly chi = extend_from_initial_data(sys, chart, zero, g2);
  CHECK(chi.coeff({0, 1, 1, 1, 0, 0}, 1) == GaussRational(1));
  CHECK(is_solution(chart.ops, chi));

  const SpinorPoly tail_data = unit_spinor(tv, 2, {1, 0, 0, 1, 0, 0}, 0);
  CHECK_THROWS_AS(extend_from_initial_data(sys, chart, tail_data, zero), std::invalid_argument);
  const SpinorPoly linear = unit_spinor(tv, 2, {1, 0, 0, 0, 0, 0}, 0);
  CHECK_THROWS_AS(extend_from_initial_data(sys, chart, linear, zero), std::invalid_argument);
  CHECK_THROWS_AS(extend_from_initial_data(sys, chart, g1, g1), std::invalid_argument);
}

TEST_CASE("quadratic components for n = 3") {
  const ComponentDims c = quadratic_component_dims(build_euclidean(3, 2));
  CHECK(c.sym == 18);
  CHECK(c.skew == 0);
}

TEST_CASE("restriction commutator") {
  const EuclideanSystem sys = build_euclidean(3, 2);
  for (unsigned d = 1; d <= 3; ++d) {
    for (const auto& psi : solutions(sys, d)) CHECK(restriction_commutator_check(sys, psi));
  }
  SpinorPoly bad(sys.vars, 2);
  bad.add_term({2, 0, 0, 0, 0, 0}, 0, 1);
  CHECK_THROWS_AS(restriction_commutator_check(sys, bad), std::invalid_argument);
}
