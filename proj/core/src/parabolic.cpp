#include "kdirac/parabolic.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "kdirac/linalg.hpp"

namespace kdirac {

std::size_t ParabolicSystem::x_index(std::size_t alpha, std::size_t i) const {
  if (alpha < 1 || alpha > params.n || i < 1 || i > params.k) {
    throw std::out_of_range("ParabolicSystem::x_index: index out of range");
  }
  return (alpha - 1) * params.k + (i - 1);
}

std::size_t ParabolicSystem::y_index(std::size_t r, std::size_t s) const {
  const std::size_t k = params.k;
  if (r < 1 || s > k || r >= s) throw std::out_of_range("ParabolicSystem::y_index: need 1 <= r < s <= k");
  const std::size_t a = r - 1, b = s - 1;
  return num_x() + a * k - a * (a + 1) / 2 + (b - a - 1);
}

std::vector<std::size_t> ParabolicSystem::y_vars() const {
  std::vector<std::size_t> out;
  for (std::size_t v = num_x(); v < num_x() + num_y(); ++v) out.push_back(v);
  return out;
}

DiffOp y_derivative(const ParabolicSystem& sys, std::size_t i, std::size_t j) {
  DiffOp op;
  if (i == j) return op;
  const ExactMatrix id = ExactMatrix::identity(sys.params.s);
  if (i < j) {
    op.add(Poly::constant(sys.vars, 1), sys.y_index(i, j), id);
  } else {
    op.add(Poly::constant(sys.vars, -1), sys.y_index(j, i), id);
  }
  return op;
}

ParabolicSystem build_parabolic(std::size_t n, std::size_t k) {
  ParabolicSystem sys;
  sys.params = RepParams::make(n, k);
  sys.rep = build_spinor_rep(n);
  std::vector<std::string> names;
  std::vector<unsigned> weights;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t i = 1; i <= k; ++i) {
      names.push_back(matrix_var_name('x', a, i));
      weights.push_back(1);
    }
  }
  for (std::size_t r = 1; r <= k; ++r) {
    for (std::size_t s = r + 1; s <= k; ++s) {
      names.push_back(matrix_var_name('y', r, s));
      weights.push_back(2);
    }
  }
  sys.vars = VariableSet::weighted(std::move(names), std::move(weights));

  const std::size_t s = sys.params.s;
  const ExactMatrix id = ExactMatrix::identity(s);
  const GaussRational half{Rational(1, 2)};
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t i = 1; i <= k; ++i) {
      DiffOp L;
      L.add(Poly::constant(sys.vars, 1), sys.x_index(a, i), id);
      for (std::size_t j = 1; j <= k; ++j) {
        for (const auto& t : y_derivative(sys, i, j).terms) {
          Poly coeff = t.coeff * Poly::monomial(sys.vars, sys.vars->unit(sys.x_index(a, j)), -half);
          L.add(std::move(coeff), t.var, id);
        }
      }
      sys.lfields.push_back(std::move(L));
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    DiffOp D;
    DiffOp flat;
    for (std::size_t a = 1; a <= n; ++a) {
      const ExactMatrix& g = sys.rep.gamma[a - 1];
      for (const auto& t : sys.lfields[sys.x_index(a, i)].terms) D.add(t.coeff, t.var, g);
      flat.add(Poly::constant(sys.vars, 1), sys.x_index(a, i), g);
    }
    sys.ops.push_back(std::move(D));
    sys.euclid_ops.push_back(std::move(flat));
  }
  return sys;
}

bool bracket_identity_holds(const ParabolicSystem& sys, unsigned max_degree) {
  const std::size_t n = sys.params.n;
  const std::size_t k = sys.params.k;
  const std::size_t s = sys.params.s;
  std::vector<GaussRational> spinor(s);
  spinor[0] = 1;
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const auto& mono : monomial_basis(*sys.vars, d)) {
      const SpinorPoly p = SpinorPoly::monomial(sys.vars, s, mono, spinor);
      for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t i = 1; i <= k; ++i) {
          const DiffOp& La = sys.lfields[sys.x_index(a, i)];
          const SpinorPoly Lap = apply_op(La, p);
          for (std::size_t b = 1; b <= n; ++b) {
            for (std::size_t j = 1; j <= k; ++j) {
              const DiffOp& Lb = sys.lfields[sys.x_index(b, j)];
              const SpinorPoly bracket = apply_op(La, apply_op(Lb, p)) - apply_op(Lb, Lap);
              const SpinorPoly expected =
                  a == b ? apply_op(y_derivative(sys, i, j), p) : SpinorPoly(sys.vars, s);
              if (!(bracket == expected)) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

Tableau parabolic_tableau(const ParabolicSystem& sys) {
  return symbol_tableau(sys.ops, sys.vars->size(), sys.params.s);
}

PaperOrdering parabolic_level0_ordering(const ParabolicSystem& sys) {
  const std::size_t N = sys.vars->size();
  std::vector<std::size_t> order;
  for (std::size_t a = 1; a < sys.params.n; ++a) {
    for (std::size_t i = 1; i <= sys.params.k; ++i) order.push_back(sys.x_index(a, i));
  }
  for (std::size_t v : sys.y_vars()) order.push_back(v);
  for (std::size_t i = 1; i <= sys.params.k; ++i) order.push_back(sys.x_index(sys.params.n, i));
  ExactMatrix vectors(N, N);
  for (std::size_t c = 0; c < N; ++c) vectors.set(order[c], c, 1);
  return {"paper", std::move(vectors)};
}

PaperOrdering parabolic_level1_ordering(const ParabolicSystem& sys) {
  if (sys.params.k != 2) throw std::invalid_argument("parabolic_level1_ordering: only k = 2 is supported");
  const EuclideanSystem flat = build_euclidean(sys.params.n, 2);
  const ExactMatrix chart = t_chart(flat).basis;
  const std::size_t N = sys.vars->size();
  ExactMatrix vectors(N, N);
  vectors.set(sys.y_index(1, 2), 0, 1);
  for (std::size_t r = 0; r < chart.rows(); ++r) {
    for (const auto& e : chart.row(r)) vectors.set(r, e.index + 1, e.value);
  }
  return {"paper", std::move(vectors)};
}

std::vector<std::size_t> graded_dims(const SubspaceBasis& basis, const SymmetricIndex& index,
                                     std::size_t dim_W, std::size_t num_x) {
  std::vector<std::size_t> grade(index.size());
  for (std::size_t r = 0; r < index.size(); ++r) {
    for (std::size_t v : index.tuple(r)) grade[r] += v >= num_x ? 1 : 0;
  }
  std::vector<std::size_t> dims;
  for (std::size_t g = 0; g <= index.degree(); ++g) {
    EchelonBuilder outside(basis.ambient_dim());
    for (const auto& v : basis.vectors()) {
      std::vector<SparseVector::Entry> entries;
      for (const auto& e : v) {
        if (grade[e.index / dim_W] != g) entries.push_back(e);
      }
      outside.add(SparseVector(std::move(entries)));
    }
    dims.push_back(basis.dim() - outside.rank());
  }
  return dims;
}

ParabolicDecomposition parabolic_prolongation_decomposition(const ParabolicSystem& sys) {
  if (sys.params.k != 2) {
    throw std::invalid_argument("parabolic_prolongation_decomposition: only k = 2 is supported");
  }
  const SymbolTower tower(parabolic_tableau(sys), 2);
  const std::size_t s = sys.params.s;
  return {graded_dims(tower.level(1), tower.index(2), s, sys.num_x()),
          graded_dims(tower.level(2), tower.index(3), s, sys.num_x())};
}

SubspaceBasis weighted_monogenic_space(const ParabolicSystem& sys, unsigned r) {
  return solution_space(sys.ops, *sys.vars, sys.params.s, r);
}

std::size_t y_independent_dim(const ParabolicSystem& sys, const SubspaceBasis& space, unsigned r) {
  const auto monos = monomial_basis(*sys.vars, r);
  const std::size_t s = sys.params.s;
  const auto ys = sys.y_vars();
  EchelonBuilder outside(space.ambient_dim());
  for (const auto& v : space.vectors()) {
    std::vector<SparseVector::Entry> entries;
    for (const auto& e : v) {
      const Exponents& m = monos.at(e.index / s);
      bool has_y = false;
      for (std::size_t y : ys) has_y = has_y || m[y] > 0;
      if (has_y) entries.push_back(e);
    }
    outside.add(SparseVector(std::move(entries)));
  }
  return space.dim() - outside.rank();
}

std::vector<SpinorPoly> lift_many(const ParabolicSystem& sys, std::span<const SpinorPoly> psis, const Poly& g) {
  const std::size_t s = sys.params.s;
  const auto ys = sys.y_vars();
  if (g.is_zero()) throw std::invalid_argument("lift_many: g must be nonzero");
  if (!g.vars() || !(*g.vars() == *sys.vars)) throw std::invalid_argument("lift_many: g must use the system variables");
  std::optional<unsigned> l;
  for (const auto& [e, c] : g.terms()) {
    unsigned ydeg = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (v < sys.num_x() && e[v] > 0) throw std::invalid_argument("lift_many: g must depend on y only");
      if (v >= sys.num_x()) ydeg += e[v];
    }
    if (l && *l != ydeg) throw std::invalid_argument("lift_many: g must be homogeneous");
    l = ydeg;
  }

  std::vector<SpinorPoly> lifted(psis.size(), SpinorPoly(sys.vars, s));
  std::map<unsigned, std::vector<std::size_t>> by_degree;
  std::vector<SpinorPoly> products(psis.size());
  for (std::size_t p = 0; p < psis.size(); ++p) {
    SpinorPoly psi = psis[p];
    if (psi.is_zero()) continue;
    if (psi.spinor_dim() != s) throw std::invalid_argument("lift_many: spinor dimension mismatch");
    if (psi.vars()->size() == sys.num_x()) psi = psi.embed(sys.vars);
    if (!(*psi.vars() == *sys.vars)) throw std::invalid_argument("lift_many: psi uses foreign variables");
    if (psi.max_degree_in(ys) > 0) throw std::invalid_argument("lift_many: psi must not depend on y");
    const unsigned r = sys.vars->weighted_degree(psi.terms().begin()->first.exps);
    if (!psi.is_weighted_homogeneous(r)) throw std::invalid_argument("lift_many: psi must be homogeneous");
    if (!is_solution(sys.euclid_ops, psi)) throw std::invalid_argument("lift_many: psi is not monogenic");
    products[p] = psi.times(g);
    by_degree[r].push_back(p);
  }

  for (const auto& [r, members] : by_degree) {
    const unsigned deg = r + 2 * *l;
    const auto monos = monomial_basis(*sys.vars, deg);
    std::vector<std::size_t> unknown_col(monos.size() * s, SIZE_MAX);
    std::vector<std::size_t> unknown_source;
    for (std::size_t m = 0; m < monos.size(); ++m) {
      unsigned ydeg = 0;
      for (std::size_t y : ys) ydeg += monos[m][y];
      if (ydeg >= *l) continue;
      for (std::size_t c = 0; c < s; ++c) {
        unknown_col[m * s + c] = unknown_source.size();
        unknown_source.push_back(m * s + c);
      }
    }
    const ExactMatrix full = constraint_matrix(sys.ops, *sys.vars, s, deg);
    std::vector<SparseVector> sub_rows;
    for (const auto& row : full.row_data()) {
      std::vector<SparseVector::Entry> entries;
      for (const auto& e : row) {
        if (unknown_col[e.index] != SIZE_MAX) entries.push_back({unknown_col[e.index], e.value});
      }
      sub_rows.emplace_back(std::move(entries));
    }
    const ExactMatrix sub(unknown_source.size(), std::move(sub_rows));
    std::vector<SparseVector> rhs;
    for (std::size_t p : members) rhs.push_back(full.apply(to_coordinates(products[p], deg)).scaled(-1));
    const auto solved = solve_many(sub, rhs);
    for (std::size_t q = 0; q < members.size(); ++q) {
      if (!solved[q]) throw std::logic_error("lift_many: no parabolic monogenic lift");
      std::vector<SparseVector::Entry> entries;
      for (const auto& e : *solved[q]) entries.push_back({unknown_source[e.index], e.value});
      SpinorPoly Psi = products[members[q]] + to_spinor_poly(sys.vars, s, deg, SparseVector(std::move(entries)));
      if (!is_solution(sys.ops, Psi)) throw std::logic_error("lift_many: lift failed verification");
      lifted[members[q]] = std::move(Psi);
    }
  }
  return lifted;
}

SpinorPoly lift_check(const ParabolicSystem& sys, const SpinorPoly& psi, const Poly& g) {
  return lift_many(sys, std::span<const SpinorPoly>(&psi, 1), g).front();
}

ParabolicCartan parabolic_cartan_suite(const ParabolicSystem& sys, const OrderingStrategy& strategy) {
  const Tableau t = parabolic_tableau(sys);
  const SymbolTower tower(t, 1);
  const Tableau lifted = tower.lifted(1);
  OrderedBasis ob0;
  OrderedBasis ob1;
  if (strategy.kind == OrderingStrategy::Kind::given && !strategy.supplied) {
    ob0 = parabolic_level0_ordering(sys).ordered_basis();
    ob1 = sys.params.k == 2 ? parabolic_level1_ordering(sys).ordered_basis()
                            : search_ordering(lifted, OrderingStrategy::greedy());
  } else {
    ob0 = search_ordering(t, strategy);
    ob1 = search_ordering(lifted, strategy);
  }
  return {cartan_test(t, ob0), cartan_test(tower, 1, ob1)};
}

}  // namespace kdirac
