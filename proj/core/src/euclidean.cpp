#include "kdirac/euclidean.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "kdirac/linalg.hpp"

namespace kdirac {

std::size_t EuclideanSystem::var(std::size_t alpha, std::size_t i) const {
  if (alpha < 1 || alpha > params.n || i < 1 || i > params.k) {
    throw std::out_of_range("EuclideanSystem::var: index out of range");
  }
  return (alpha - 1) * params.k + (i - 1);
}

std::string matrix_var_name(char letter, std::size_t row, std::size_t col) {
  std::string name(1, letter);
  if (row < 10 && col < 10) return name + std::to_string(row) + std::to_string(col);
  return name + std::to_string(row) + "_" + std::to_string(col);
}

EuclideanSystem build_euclidean(std::size_t n, std::size_t k) {
  EuclideanSystem sys;
  sys.params = RepParams::make(n, k);
  sys.rep = build_spinor_rep(n);
  std::vector<std::string> names;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t i = 1; i <= k; ++i) names.push_back(matrix_var_name('x', a, i));
  }
  sys.vars = VariableSet::uniform(std::move(names));
  const Poly one = Poly::constant(sys.vars, 1);
  for (std::size_t i = 1; i <= k; ++i) {
    DiffOp op;
    for (std::size_t a = 1; a <= n; ++a) op.add(one, sys.var(a, i), sys.rep.gamma[a - 1]);
    sys.ops.push_back(std::move(op));
  }
  return sys;
}

Tableau symbol_tableau(std::span<const DiffOp> ops, std::size_t num_vars, std::size_t s) {
  std::vector<SparseVector> rows;
  for (const auto& op : ops) {
    std::vector<std::vector<SparseVector::Entry>> per_comp(s);
    for (const auto& term : op.terms) {
      if (term.var >= num_vars) throw std::invalid_argument("symbol_tableau: variable out of range");
      GaussRational c0;
      for (const auto& [e, c] : term.coeff.terms()) {
        if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) c0 = c;
      }
      if (c0.is_zero()) continue;
      for (std::size_t p = 0; p < s; ++p) {
        for (const auto& entry : term.matrix.row(p)) {
          per_comp[p].push_back({term.var * s + entry.index, c0 * entry.value});
        }
      }
    }
    for (auto& r : per_comp) rows.emplace_back(std::move(r));
  }
  return Tableau::make(num_vars, s, kernel(ExactMatrix(num_vars * s, std::move(rows))));
}

Tableau euclidean_tableau(const EuclideanSystem& sys) {
  return symbol_tableau(sys.ops, sys.vars->size(), sys.params.s);
}

OrderedBasis PaperOrdering::ordered_basis() const {
  return OrderedBasis::from_dual_vectors(vectors, label);
}

PaperOrdering euclidean_level0_ordering(const EuclideanSystem& sys) {
  return {"paper", ExactMatrix::identity(sys.vars->size())};
}

PaperOrdering euclidean_level1_ordering(const EuclideanSystem& sys) {
  return {"paper", t_chart(sys).basis};
}

ComponentDims quadratic_component_dims(const EuclideanSystem& sys) {
  const Tableau t = euclidean_tableau(sys);
  const Prolongation p = prolong(t);
  const std::size_t s = sys.params.s;
  const std::size_t k = sys.params.k;
  const SymmetricIndex pairs(t.dim_V, 2);

  // tau: (alpha i)(beta j) -> (alpha j)(beta i)
  std::vector<std::size_t> tau(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto& tp = pairs.tuple(r);
    const std::size_t a = tp[0] / k, i = tp[0] % k;
    const std::size_t b = tp[1] / k, j = tp[1] % k;
    const std::size_t swapped[2] = {a * k + j, b * k + i};
    tau[r] = pairs.rank(swapped);
  }
  EchelonBuilder minus(pairs.size() * s);
  EchelonBuilder plus(pairs.size() * s);
  for (const auto& v : p.raw.vectors()) {
    std::vector<SparseVector::Entry> entries;
    for (const auto& e : v) entries.push_back({tau[e.index / s] * s + e.index % s, e.value});
    const SparseVector tv(std::move(entries));
    minus.add(tv - v);
    plus.add(tv + v);
  }
  return {p.raw.dim() - minus.rank(), p.raw.dim() - plus.rank()};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const unsigned __int128 next = static_cast<unsigned __int128>(out) * (n - r + i);
    if (next / i > UINT64_MAX) throw std::overflow_error("binomial: overflow");
    out = static_cast<std::uint64_t>(next / i);
  }
  return out;
}

std::uint64_t initial_dim_formula(std::size_t n, std::size_t k, std::size_t r) {
  if (k != 2) throw std::invalid_argument("initial_dim_formula: only k = 2 is supported");
  if (r < 2) throw std::invalid_argument("initial_dim_formula: r must be at least 2");
  const RepParams p = RepParams::make(n, k);
  return p.s * (binomial(r + 2 * n - 4, 2 * n - 4) + binomial(r - 1 + 2 * n - 4, 2 * n - 4));
}

TChart t_chart(const EuclideanSystem& sys) {
  if (sys.params.k != 2) throw std::invalid_argument("t_chart: only k = 2 is supported");
  const std::size_t n = sys.params.n;
  const std::size_t N = 2 * n;
  auto x = [&](std::size_t a, std::size_t i) { return sys.var(a, i); };

  TChart chart;
  std::vector<std::string> names;
  for (std::size_t a = 1; a <= N; ++a) names.push_back("t" + std::to_string(a));
  chart.t_vars = VariableSet::uniform(std::move(names));

  // Columns are 0-based t indices.
  ExactMatrix B(N, N);
  for (std::size_t a = 1; a + 3 <= n; ++a) {
    B.set(x(a, 1), 2 * a - 2, 1);
    B.set(x(a, 2), 2 * a - 1, 1);
  }
  B.set(x(n - 2, 1), 2 * n - 6, 1);
  B.set(x(n - 1, 2), 2 * n - 5, 1);
  B.set(x(n, 1), 2 * n - 4, 1);
  B.set(x(n, 1), 2 * n - 3, 1);
  B.set(x(n, 2), 2 * n - 4, 1);
  B.set(x(n, 2), 2 * n - 3, -1);
  B.set(x(n - 2, 2), 2 * n - 2, 1);
  B.set(x(n - 1, 1), 2 * n - 1, 1);
  chart.basis = B;
  chart.inverse = inverse(B);

  const Poly one = Poly::constant(chart.t_vars, 1);
  const std::size_t s = sys.params.s;
  for (std::size_t i = 1; i <= 2; ++i) {
    DiffOp op;
    for (std::size_t t = 0; t < N; ++t) {
      ExactMatrix m(s, s);
      for (std::size_t a = 1; a <= n; ++a) {
        const GaussRational u = chart.inverse.at(t, x(a, i));
        if (!u.is_zero()) m = m + u * sys.rep.gamma[a - 1];
      }
      op.add(one, t, std::move(m));
    }
    chart.ops.push_back(std::move(op));
  }
  return chart;
}

bool is_solution(std::span<const DiffOp> ops, const SpinorPoly& p) {
  return std::all_of(ops.begin(), ops.end(), [&](const DiffOp& op) { return apply_op(op, p).is_zero(); });
}

SpinorPoly extend_from_initial_data(const EuclideanSystem& sys, const TChart& chart, const SpinorPoly& g1,
                                    const SpinorPoly& g2) {
  const std::size_t n = sys.params.n;
  const std::size_t s = sys.params.s;
  const VarsPtr& tv = chart.t_vars;
  for (const SpinorPoly* g : {&g1, &g2}) {
    if (!g->is_zero() && (!g->vars() || !(*g->vars() == *tv) || g->spinor_dim() != s)) {
      throw std::invalid_argument("extend_from_initial_data: data must live in the t-chart");
    }
  }
  if (g1.is_zero() && g2.is_zero()) return SpinorPoly(tv, s);

  const unsigned r = g1.is_zero() ? tv->weighted_degree(g2.terms().begin()->first.exps) + 1
                                  : tv->weighted_degree(g1.terms().begin()->first.exps);
  if (r < 2) throw std::invalid_argument("extend_from_initial_data: degree must be at least 2");
  if (!g1.is_weighted_homogeneous(r) || !g2.is_weighted_homogeneous(r - 1)) {
    throw std::invalid_argument("extend_from_initial_data: g1, g2 must be homogeneous of degrees r, r - 1");
  }
  const std::vector<std::size_t> tail = {2 * n - 3, 2 * n - 2, 2 * n - 1};
  const std::size_t leading = 2 * n - 3;
  if (g1.max_degree_in(tail) > 0 || g2.max_degree_in(tail) > 0) {
    throw std::invalid_argument("extend_from_initial_data: data may only use t_1 .. t_{2n-3}");
  }

  const SpinorPoly zero(tv, s);
  const SpinorPoly base =
      (g1.is_zero() ? zero : g1) + (g2.is_zero() ? zero : g2).times(Poly::monomial(tv, tv->unit(leading)));
  const auto monos = monomial_basis(*tv, r);
  std::vector<std::size_t> unknown_col(monos.size() * s, SIZE_MAX);
  std::vector<std::size_t> unknown_source;
  for (std::size_t m = 0; m < monos.size(); ++m) {
    unsigned deg = 0;
    for (std::size_t v : tail) deg += monos[m][v];
    if (deg == 0 || (deg == 1 && monos[m][leading] == 1)) continue;
    for (std::size_t c = 0; c < s; ++c) {
      unknown_col[m * s + c] = unknown_source.size();
      unknown_source.push_back(m * s + c);
    }
  }

  const ExactMatrix full = constraint_matrix(chart.ops, *tv, s, r);
  std::vector<SparseVector> sub_rows;
  sub_rows.reserve(full.rows());
  for (const auto& row : full.row_data()) {
    std::vector<SparseVector::Entry> entries;
    for (const auto& e : row) {
      if (unknown_col[e.index] != SIZE_MAX) entries.push_back({unknown_col[e.index], e.value});
    }
    sub_rows.emplace_back(std::move(entries));
  }
  const ExactMatrix sub(unknown_source.size(), std::move(sub_rows));
  if (rank(sub) != unknown_source.size()) {
    throw std::logic_error("extend_from_initial_data: extension is not unique");
  }
  const SparseVector rhs = full.apply(to_coordinates(base, r)).scaled(-1);
  const auto solved = solve_many(sub, std::span<const SparseVector>(&rhs, 1));
  if (!solved.front()) throw std::logic_error("extend_from_initial_data: no monogenic extension");

  std::vector<SparseVector::Entry> entries;
  for (const auto& e : *solved.front()) entries.push_back({unknown_source[e.index], e.value});
  const SpinorPoly psi = base + to_spinor_poly(tv, s, r, SparseVector(std::move(entries)));

  if (!is_solution(chart.ops, psi) || !is_solution(sys.ops, psi.substitute_linear(sys.vars, chart.inverse))) {
    throw std::logic_error("extend_from_initial_data: extension failed verification");
  }
  return psi;
}

bool restriction_commutator_check(const EuclideanSystem& sys, const SpinorPoly& psi) {
  if (!is_solution(sys.ops, psi)) throw std::invalid_argument("restriction_commutator_check: psi is not monogenic");
  const std::size_t n = sys.params.n;
  const std::size_t k = sys.params.k;
  std::vector<std::size_t> first_row;
  for (std::size_t i = 1; i <= k; ++i) first_row.push_back(sys.var(1, i));

  const Poly one = Poly::constant(sys.vars, 1);
  std::vector<DiffOp> truncated(k);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t a = 2; a <= n; ++a) truncated[i - 1].add(one, sys.var(a, i), sys.rep.gamma[a - 1]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const SpinorPoly ij = apply_op(truncated[i], apply_op(truncated[j], psi));
      const SpinorPoly ji = apply_op(truncated[j], apply_op(truncated[i], psi));
      if (!(ij - ji).restrict_to_zero(first_row).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace kdirac
