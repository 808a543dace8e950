#include <doctest.h>

#include <stdexcept>

#include "kdirac/euclidean.hpp"
#include "kdirac/poly.hpp"

using namespace kdirac;

namespace {

SpinorPoly sample(const VarsPtr& v) {
  SpinorPoly p(v, 2);
  p.add_term({2, 1, 0}, 0, 3);
  p.add_term({1, 1, 1}, 1, GaussRational::i());
  p.add_term({0, 3, 0}, 0, -1);
  p.add_term({0, 0, 3}, 1, Rational(1, 2));
  return p;
}

}  // namespace

TEST_CASE("monomial basis") {
  const auto v = VariableSet::uniform({"a", "b", "c"});
  const auto m2 = monomial_basis(*v, 2);
  CHECK(m2.size() == 6);
  CHECK(m2.front() == Exponents{2, 0, 0});
  CHECK(m2[1] == Exponents{1, 1, 0});
  CHECK(m2.back() == Exponents{0, 0, 2});
  CHECK(monomial_basis(*v, 4).size() == 15);

  const auto w = VariableSet::weighted({"x", "y"}, {1, 2});
  CHECK(monomial_basis(*w, 3).size() == 2);
  CHECK(w->weighted_degree({1, 1}) == 3);
  CHECK(w->index_of("y") == 1);
}

TEST_CASE("derivatives commute") {
  const auto v = VariableSet::uniform({"a", "b", "c"});
  const SpinorPoly p = sample(v);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(p.derivative(i).derivative(j) == p.derivative(j).derivative(i));
  }
  CHECK(p.derivative(0).coeff({1, 1, 0}, 0) == GaussRational(6));
}

TEST_CASE("operators are linear") {
  const EuclideanSystem sys = build_euclidean(3, 2);
  const auto& v = sys.vars;
  SpinorPoly p(v, 2), q(v, 2);
  p.add_term({2, 0, 1, 0, 0, 0}, 0, 1);
  p.add_term({0, 1, 0, 0, 1, 1}, 1, GaussRational::i());
  q.add_term({1, 1, 1, 0, 0, 0}, 1, 5);
  q.add_term({0, 0, 0, 3, 0, 0}, 0, -2);
  const GaussRational c(Rational(2), Rational(-1));
  for (const auto& op : sys.ops) {
    CHECK(apply_op(op, p + c * q) == apply_op(op, p) + c * apply_op(op, q));
    CHECK(weighted_shift(op, *v) == -1);
  }
}

TEST_CASE("coordinates round trip") {
  const auto v = VariableSet::uniform({"a", "b", "c"});
  SpinorPoly p(v, 2);
  p.add_term({3, 0, 0}, 0, 1);
  p.add_term({0, 1, 2}, 1, GaussRational::i());
  const SparseVector coords = to_coordinates(p, 3);
  CHECK(to_spinor_poly(v, 2, 3, coords) == p);
  CHECK(p.is_weighted_homogeneous(3));
  CHECK_FALSE(p.is_weighted_homogeneous(2));
}

TEST_CASE("substitution and restriction") {
  const auto v = VariableSet::uniform({"a", "b"});
  SpinorPoly p(v, 1);
  p.add_term({1, 1}, 0, 1);  // a b
  // a = u + w, b = u - w
  const auto uw = VariableSet::uniform({"u", "w"});
  const ExactMatrix forms = ExactMatrix::from_rows({{1, 1}, {1, -1}});
  const SpinorPoly q = p.substitute_linear(uw, forms);
  CHECK(q.coeff({2, 0}, 0) == GaussRational(1));
  CHECK(q.coeff({0, 2}, 0) == GaussRational(-1));
  CHECK(q.coeff({1, 1}, 0).is_zero());
  const std::vector<std::size_t> w_only = {1};
  CHECK(q.restrict_to_zero(w_only).coeff({2, 0}, 0) == GaussRational(1));
  CHECK(q.max_degree_in(w_only) == 2);
}

TEST_CASE("solution spaces of the Laplacian-free case") {
  // d/da on polynomials in a, b: solutions are the polynomials in b.
  const auto v = VariableSet::uniform({"a", "b"});
  DiffOp d;
  d.add(Poly::constant(v, 1), 0, ExactMatrix::identity(1));
  const std::vector<DiffOp> ops = {d};
  for (unsigned deg = 0; deg <= 4; ++deg) CHECK(solution_space(ops, *v, 1, deg).dim() == 1);
  const ExactMatrix m = constraint_matrix(ops, *v, 1, 3);
  CHECK(m.cols() == 4);
  CHECK(m.rows() == 3);
}

TEST_CASE("non-uniform operators are rejected") {
  const auto v = VariableSet::uniform({"a", "b"});
  DiffOp d;
  d.add(Poly::constant(v, 1), 0, ExactMatrix::identity(1));
  d.add(Poly::monomial(v, {1, 0}), 1, ExactMatrix::identity(1));
  const std::vector<DiffOp> ops = {d};
  CHECK_FALSE(weighted_shift(d, *v).has_value());
  CHECK_THROWS_AS(solution_space(ops, *v, 1, 2), std::invalid_argument);
}
