#include "kdirac/report.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "kdirac/euclidean.hpp"
#include "kdirac/parabolic.hpp"
#include "kdirac/weyl.hpp"

namespace kdirac {
namespace {

using json = nlohmann::json;
using u64 = std::uint64_t;

class Stopwatch {
 public:
  explicit Stopwatch(Report& r) : report_(r), last_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    report_.timing_ms.emplace_back(stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  Report& report_;
  std::chrono::steady_clock::time_point last_;
};

// Closed forms.
u64 euclid_tableau_dim(u64 n, u64 k, u64 s) { return k * s * (n - 1); }
u64 euclid_a1_dim(u64 n, u64 k, u64 s) { return s * binomial(k * (n - 1) + 1, 2) - s * binomial(k, 2); }
u64 euclid_level1_rhs(u64 n, u64 s) { return s * binomial(2 * n, 3) - 2 * s * (n - 1); }
u64 para_tableau_dim(u64 n, u64 k, u64 s) { return k * (n - 1) * s + binomial(k, 2) * s; }
u64 para_a1_dim(u64 n, u64 k, u64 s) {
  return s * binomial(k * (n - 1) + binomial(k, 2) + 1, 2) - s * binomial(k, 2);
}
u64 para_level1_rhs(u64 n, u64 s) { return s * (2 * n - 1) * (4 * n * n + 2 * n - 6) / 6; }

std::vector<u64> descending_characters(u64 top, u64 s, std::size_t length) {
  std::vector<u64> out;
  for (u64 c = top; c >= 2; --c) out.push_back(c * s);
  while (out.size() < length) out.push_back(0);
  return out;
}

std::vector<u64> as_u64(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::string instance(const std::string& op, std::size_t n, std::size_t k) {
  return op + ".n" + std::to_string(n) + ".k" + std::to_string(k);
}

OrderedBasis resolve_ordering(const RunConfig& cfg, const Tableau& t,
                              const std::function<std::optional<PaperOrdering>()>& paper) {
  if (cfg.ordering == "paper") {
    if (auto p = paper()) return p->ordered_basis();
    return search_ordering(t, OrderingStrategy::greedy());
  }
  if (cfg.ordering == "greedy") return search_ordering(t, OrderingStrategy::greedy());
  u64 seed = cfg.seed.value_or(0);
  if (cfg.ordering.size() > 7) seed = std::stoull(cfg.ordering.substr(7));
  return search_ordering(t, OrderingStrategy::random(seed));
}

void run_euclidean(const RunConfig& cfg, Report& rep, Stopwatch& sw) {
  const EuclideanSystem sys = build_euclidean(cfg.n, cfg.k);
  const std::size_t n = cfg.n, k = cfg.k, s = sys.params.s;
  const Tableau T = euclidean_tableau(sys);
  sw.lap("tableau");
  rep.dims["tableau"] = T.dim();
  rep.check("tableau_dim", euclid_tableau_dim(n, k, s), T.dim());

  const SymbolTower tower(T, cfg.level);
  sw.lap("prolongation");
  for (std::size_t l = 1; l <= cfg.level + 1; ++l) rep.dims["prolongation_" + std::to_string(l)] = tower.level_dim(l);
  rep.check("prolongation_1_dim", euclid_a1_dim(n, k, s), tower.level_dim(1));

  const Tableau lifted = tower.lifted(cfg.level);
  const OrderedBasis ob = resolve_ordering(cfg, lifted, [&]() -> std::optional<PaperOrdering> {
    if (cfg.level == 0) return euclidean_level0_ordering(sys);
    if (cfg.level == 1 && k == 2) return euclidean_level1_ordering(sys);
    return std::nullopt;
  });
  const CartanReport cr = cartan_test(tower, cfg.level, ob);
  sw.lap("cartan");
  rep.cartan.push_back({"level" + std::to_string(cfg.level), cr});

  if (cfg.level == 0) {
    rep.check("level0_involutive", false, cr.involutive);
  } else if (cfg.level == 1 && k == 2) {
    rep.check("level1_involutive", true, cr.involutive);
    rep.check("level1_rhs", euclid_level1_rhs(n, s), cr.rhs);
    if (ob.label == "paper") {
      rep.check("level1_characters", descending_characters(2 * n - 2, s, 2 * n), as_u64(cr.characters));
    }
  } else if (cfg.level == 1) {
    rep.check("level1_involutive", false, cr.involutive);
  }

  if (cfg.level >= 1 && n <= 5) {
    const ComponentDims c = quadratic_component_dims(sys);
    rep.component_dims["quadratic_sym_skew"] = {c.sym, c.skew};
    rep.check("quadratic_components_sum", euclid_a1_dim(n, k, s), c.sym + c.skew);
    sw.lap("components");
  }

  if (cfg.degree) {
    const unsigned d = *cfg.degree;
    const u64 dim = solution_space(sys.ops, *sys.vars, s, d).dim();
    sw.lap("solution_space");
    rep.dims["solutions_degree_" + std::to_string(d)] = dim;
    if (d == 0) rep.check("solutions_degree_0", s, dim);
    if (d == 1) rep.check("solutions_degree_1", euclid_tableau_dim(n, k, s), dim);
    if (d == 2) rep.check("solutions_degree_2", euclid_a1_dim(n, k, s), dim);
    if (k == 2 && d >= 2) rep.check("solutions_initial_data", initial_dim_formula(n, k, d), dim);
  }
}

void run_parabolic(const RunConfig& cfg, Report& rep, Stopwatch& sw) {
  const ParabolicSystem sys = build_parabolic(cfg.n, cfg.k);
  const std::size_t n = cfg.n, k = cfg.k, s = sys.params.s;
  const Tableau T = parabolic_tableau(sys);
  sw.lap("tableau");
  rep.dims["tableau"] = T.dim();
  rep.check("tableau_dim", para_tableau_dim(n, k, s), T.dim());

  const std::size_t tower_levels = std::max<std::size_t>(cfg.level, k == 2 && cfg.level >= 1 ? 2 : 0);
  const SymbolTower tower(T, tower_levels);
  sw.lap("prolongation");
  for (std::size_t l = 1; l <= cfg.level + 1; ++l) rep.dims["prolongation_" + std::to_string(l)] = tower.level_dim(l);
  rep.check("prolongation_1_dim", para_a1_dim(n, k, s), tower.level_dim(1));

  const Tableau lifted = tower.lifted(cfg.level);
  const OrderedBasis ob = resolve_ordering(cfg, lifted, [&]() -> std::optional<PaperOrdering> {
    if (cfg.level == 0) return parabolic_level0_ordering(sys);
    if (cfg.level == 1 && k == 2) return parabolic_level1_ordering(sys);
    return std::nullopt;
  });
  const CartanReport cr = cartan_test(tower, cfg.level, ob);
  sw.lap("cartan");
  rep.cartan.push_back({"level" + std::to_string(cfg.level), cr});

  if (cfg.level == 0) {
    rep.check("level0_involutive", false, cr.involutive);
  } else if (cfg.level == 1 && k == 2) {
    rep.check("level1_involutive", true, cr.involutive);
    rep.check("level1_rhs", para_level1_rhs(n, s), cr.rhs);
    if (ob.label == "paper") {
      rep.check("level1_characters", descending_characters(2 * n - 1, s, 2 * n + 1), as_u64(cr.characters));
    }
  }

  if (k == 2 && cfg.level >= 1) {
    const u64 x = sys.num_x();
    const auto l1 = graded_dims(tower.level(1), tower.index(2), s, x);
    const auto l2 = graded_dims(tower.level(2), tower.index(3), s, x);
    rep.component_dims["prolongation_1_by_y_degree"] = as_u64(l1);
    rep.component_dims["prolongation_2_by_y_degree"] = as_u64(l2);
    const u64 quad = euclid_a1_dim(n, 2, s);
    const u64 cubic = euclid_level1_rhs(n, s);
    const u64 twistor = 2 * s * (n - 1);
    rep.check("prolongation_1_components", std::vector<u64>{quad, twistor, s}, as_u64(l1));
    rep.check("prolongation_2_components", std::vector<u64>{cubic, quad, twistor, s}, as_u64(l2));
    sw.lap("components");
  }

  if (cfg.degree) {
    const unsigned d = *cfg.degree;
    const SubspaceBasis space = weighted_monogenic_space(sys, d);
    sw.lap("solution_space");
    rep.dims["solutions_weighted_degree_" + std::to_string(d)] = space.dim();
    const EuclideanSystem flat = build_euclidean(n, k);
    rep.check("solutions_y_independent", solution_space(flat.ops, *flat.vars, s, d).dim(),
              y_independent_dim(sys, space, d));
  }
}

std::vector<SpinorPoly> basis_polys(const VarsPtr& vars, std::size_t s, unsigned d, const SubspaceBasis& b) {
  std::vector<SpinorPoly> out;
  for (const auto& v : b.vectors()) out.push_back(to_spinor_poly(vars, s, d, v));
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (n < 3 || n > 10) throw std::invalid_argument("n must be in [3, 10]");
  if (k < 2 || k > 6) throw std::invalid_argument("k must be in [2, 6]");
  if (level > 2) throw std::invalid_argument("level must be 0, 1 or 2");
  if (level == 2) {
    const bool bounded = (k == 2 && n <= 6) || (k == 3 && n <= 4);
    if (!bounded) throw std::invalid_argument("level 2 needs n <= 6 for k = 2 or n <= 4 for k = 3");
  }
  if (ordering != "paper" && ordering != "greedy" && ordering != "random") {
    const std::string prefix = "random:";
    const bool ok = ordering.size() > prefix.size() && ordering.compare(0, prefix.size(), prefix) == 0 &&
                    ordering.find_first_not_of("0123456789", prefix.size()) == std::string::npos &&
                    ordering.size() - prefix.size() <= 19;
    if (!ok) throw std::invalid_argument("ordering must be paper, greedy, random or random:<seed>");
  }
  if (degree && *degree > 6) throw std::invalid_argument("degree must be at most 6");
}

json RunConfig::to_json() const {
  json j;
  j["operator"] = op == Operator::euclidean ? "euclidean" : "parabolic";
  j["n"] = n;
  j["k"] = k;
  j["level"] = level;
  j["ordering"] = ordering;
  if (seed) j["seed"] = *seed;
  if (degree) j["degree"] = *degree;
  return j;
}

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void Report::check(std::string name, const json& expected, const json& actual) {
  const bool pass = expected == actual;
  checks.push_back({std::move(name), expected, actual, pass});
}

json cartan_json(const CartanReport& r) {
  json j;
  j["dim_tableau"] = r.dim_A;
  j["characters"] = r.characters;
  j["filtration_dims"] = r.filtration_dims;
  j["rhs_cartan_test"] = r.rhs;
  j["dim_prolongation"] = r.dim_prolongation;
  j["involutive"] = r.involutive;
  j["ordering"] = r.ordering_label;
  return j;
}

json Report::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = config;
  json cj = json::array();
  for (const auto& c : cartan) {
    json e = cartan_json(c.report);
    e["label"] = c.label;
    cj.push_back(std::move(e));
  }
  j["cartan"] = std::move(cj);
  j["dims"] = dims;
  j["component_dims"] = component_dims;
  json chk = json::array();
  for (const auto& c : checks) {
    chk.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  j["checks"] = std::move(chk);
  j["all_pass"] = all_pass();
  if (include_timing) {
    json t;
    for (const auto& [stage, ms] : timing_ms) t[stage] = ms;
    j["timing_ms"] = std::move(t);
  }
  return j;
}

std::string Report::to_json_text() const {
  return to_json().dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "config: " << config.dump() << "\n";
  for (const auto& c : cartan) {
    const CartanReport& r = c.report;
    os << c.label << " [" << r.ordering_label << "]: dim A = " << r.dim_A << ", characters (";
    for (std::size_t i = 0; i < r.characters.size(); ++i) os << (i ? ", " : "") << r.characters[i];
    os << "), rhs = " << r.rhs << ", dim A^(1) = " << r.dim_prolongation
       << (r.involutive ? ", involutive" : ", not involutive") << "\n";
  }
  for (const auto& [name, d] : dims) os << "dim " << name << " = " << d << "\n";
  for (const auto& [name, v] : component_dims) {
    os << "components " << name << " =";
    for (u64 x : v) os << " " << x;
    os << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.pass ? 1 : 0;
    if (!c.pass) os << "FAIL " << c.name << ": expected " << c.expected.dump() << ", got " << c.actual.dump() << "\n";
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  for (const auto& [stage, ms] : timing_ms) os << "time " << stage << " " << ms << " ms\n";
  return os.str();
}

Report run(const RunConfig& config) {
  config.validate();
  Report rep;
  rep.config = config.to_json();
  rep.include_timing = config.include_timing;
  Stopwatch sw(rep);
  if (config.op == RunConfig::Operator::euclidean) {
    run_euclidean(config, rep, sw);
  } else {
    run_parabolic(config, rep, sw);
  }
  return rep;
}

Report verify_paper_matrix(bool include_timing) {
  Report rep;
  rep.config = {{"mode", "verify-all"}};
  rep.include_timing = include_timing;
  Stopwatch sw(rep);

  // Clifford relation and spinor dimension.
  for (std::size_t n = 3; n <= 8; ++n) {
    const CliffordRep r = build_spinor_rep(n);
    const std::string id = "c01.clifford.n" + std::to_string(n);
    rep.check(id + ".relation", true, satisfies_clifford_relation(r));
    rep.check(id + ".s", u64{1} << (n / 2), r.s);
  }
  sw.lap("clifford");

  // Euclidean tableaux, quadratic spinors, level-0 tests.
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t k = 2; k <= 3; ++k) {
      const EuclideanSystem sys = build_euclidean(n, k);
      const std::size_t s = sys.params.s;
      const Tableau T = euclidean_tableau(sys);
      rep.check("c02.tableau." + instance("euclidean", n, k), euclid_tableau_dim(n, k, s), T.dim());
      const CartanReport r0 = cartan_test(T, euclidean_level0_ordering(sys).ordered_basis());
      rep.check("c05.level0." + instance("euclidean", n, k), false, r0.involutive);
      if (n <= 5) {
        const std::string id = "c03.quadratic." + instance("euclidean", n, k);
        rep.check(id + ".prolongation", euclid_a1_dim(n, k, s), r0.dim_prolongation);
        rep.check(id + ".solutions", euclid_a1_dim(n, k, s), solution_space(sys.ops, *sys.vars, s, 2).dim());
      }
    }
  }
  {
    const ComponentDims c = quadratic_component_dims(build_euclidean(3, 2));
    rep.check("c03.components.euclidean.n3.k2", std::vector<u64>{18, 0}, std::vector<u64>{c.sym, c.skew});
    rep.component_dims["euclidean.n3.k2.quadratic_sym_skew"] = {c.sym, c.skew};
  }
  sw.lap("euclidean_level0");

  // Euclidean first prolongation, k = 2.
  for (std::size_t n = 3; n <= 6; ++n) {
    const EuclideanSystem sys = build_euclidean(n, 2);
    const std::size_t s = sys.params.s;
    const SymbolTower tower(euclidean_tableau(sys), 1);
    const CartanReport r1 = cartan_test(tower, 1, euclidean_level1_ordering(sys).ordered_basis());
    const std::string id = "c04.level1." + instance("euclidean", n, 2);
    rep.check(id + ".rhs", euclid_level1_rhs(n, s), r1.rhs);
    rep.check(id + ".dim", euclid_level1_rhs(n, s), r1.dim_prolongation);
    rep.check(id + ".involutive", true, r1.involutive);
    rep.check(id + ".characters", descending_characters(2 * n - 2, s, 2 * n), as_u64(r1.characters));
    rep.cartan.push_back({"euclidean n=" + std::to_string(n) + " k=2 level=1", r1});
  }
  sw.lap("euclidean_level1");

  // Euclidean first prolongation, k = 3: strict inequality for every ordering tried.
  for (std::size_t n = 3; n <= 4; ++n) {
    const EuclideanSystem sys = build_euclidean(n, 3);
    const SymbolTower tower(euclidean_tableau(sys), 1);
    const Tableau lifted = tower.lifted(1);
    std::vector<OrderingStrategy> strategies = {OrderingStrategy::greedy()};
    for (u64 seed = 1; seed <= 5; ++seed) strategies.push_back(OrderingStrategy::random(seed));
    for (const auto& strategy : strategies) {
      const OrderedBasis ob = search_ordering(lifted, strategy);
      const CartanReport r = cartan_test(tower, 1, ob);
      const std::string id = "c05.level1." + instance("euclidean", n, 3) + "." + ob.label;
      rep.check(id + ".strict", true, r.dim_prolongation < r.rhs);
      rep.dims[instance("euclidean", n, 3) + ".level1." + ob.label + ".rhs_minus_dim"] = r.rhs - r.dim_prolongation;
      if (strategy.kind == OrderingStrategy::Kind::greedy) {
        rep.cartan.push_back({"euclidean n=" + std::to_string(n) + " k=3 level=1", r});
      }
    }
  }
  sw.lap("euclidean_k3");

  // Initial data.
  for (std::size_t n = 3; n <= 4; ++n) {
    const EuclideanSystem sys = build_euclidean(n, 2);
    for (unsigned r = 2; r <= 4; ++r) {
      const std::string id = "c06.initial_data." + instance("euclidean", n, 2) + ".r" + std::to_string(r);
      rep.check(id, initial_dim_formula(n, 2, r), solution_space(sys.ops, *sys.vars, sys.params.s, r).dim());
    }
  }
  {
    const EuclideanSystem sys = build_euclidean(3, 2);
    const TChart chart = t_chart(sys);
    const std::size_t s = sys.params.s;
    std::vector<SparseVector> images;
    std::size_t extended = 0;
    for (unsigned deg : {2u, 1u}) {
      for (const auto& mono : monomial_basis(*chart.t_vars, deg)) {
        bool admissible = true;
        for (std::size_t v = 3; v < 6; ++v) admissible = admissible && mono[v] == 0;
        if (!admissible) continue;
        for (std::size_t c = 0; c < s; ++c) {
          std::vector<GaussRational> spinor(s);
          spinor[c] = 1;
          const SpinorPoly g = SpinorPoly::monomial(chart.t_vars, s, mono, spinor);
          const SpinorPoly zero(chart.t_vars, s);
          const SpinorPoly psi = deg == 2 ? extend_from_initial_data(sys, chart, g, zero)
                                          : extend_from_initial_data(sys, chart, zero, g);
          images.push_back(to_coordinates(psi.substitute_linear(sys.vars, chart.inverse), 2));
          ++extended;
        }
      }
    }
    const std::size_t ambient = monomial_basis(*sys.vars, 2).size() * s;
    rep.check("c06.extension.euclidean.n3.k2.r2.pairs", initial_dim_formula(3, 2, 2), extended);
    rep.check("c06.extension.euclidean.n3.k2.r2.span", solution_space(sys.ops, *sys.vars, s, 2).dim(),
              SubspaceBasis::span(ambient, images).dim());
  }
  sw.lap("initial_data");

  // Restriction commutator.
  {
    const EuclideanSystem sys = build_euclidean(3, 2);
    for (unsigned d : {2u, 3u}) {
      const auto polys =
          basis_polys(sys.vars, sys.params.s, d, solution_space(sys.ops, *sys.vars, sys.params.s, d));
      std::size_t ok = 0;
      for (const auto& p : polys) ok += restriction_commutator_check(sys, p) ? 1 : 0;
      rep.check("c07.restriction.euclidean.n3.k2.d" + std::to_string(d), polys.size(), ok);
    }
  }
  sw.lap("restriction");

  // Parabolic bracket.
  for (std::size_t n = 3; n <= 4; ++n) {
    rep.check("c08.bracket." + instance("parabolic", n, 2), true, bracket_identity_holds(build_parabolic(n, 2), 4));
  }
  sw.lap("bracket");

  // Parabolic level 0.
  for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 2}, {5, 2}, {3, 3}}) {
    const ParabolicSystem sys = build_parabolic(n, k);
    const std::size_t s = sys.params.s;
    const Tableau T = parabolic_tableau(sys);
    const std::string id = "c09.level0." + instance("parabolic", n, k);
    rep.check(id + ".tableau", para_tableau_dim(n, k, s), T.dim());
    for (const auto& ob : {parabolic_level0_ordering(sys).ordered_basis(), search_ordering(T, OrderingStrategy::greedy())}) {
      const CartanReport r = cartan_test(T, ob);
      rep.check(id + ".prolongation." + ob.label, para_a1_dim(n, k, s), r.dim_prolongation);
      rep.check(id + ".involutive." + ob.label, false, r.involutive);
    }
  }
  sw.lap("parabolic_level0");

  // Parabolic level 1.
  for (std::size_t n = 3; n <= 5; ++n) {
    const ParabolicSystem sys = build_parabolic(n, 2);
    const std::size_t s = sys.params.s;
    const SymbolTower tower(parabolic_tableau(sys), n == 3 ? 2 : 1);
    const CartanReport r1 = cartan_test(tower, 1, parabolic_level1_ordering(sys).ordered_basis());
    const std::string id = "c10.level1." + instance("parabolic", n, 2);
    rep.check(id + ".rhs", para_level1_rhs(n, s), r1.rhs);
    rep.check(id + ".dim", para_level1_rhs(n, s), r1.dim_prolongation);
    rep.check(id + ".involutive", true, r1.involutive);
    rep.check(id + ".characters", descending_characters(2 * n - 1, s, 2 * n + 1), as_u64(r1.characters));
    rep.cartan.push_back({"parabolic n=" + std::to_string(n) + " k=2 level=1", r1});
    if (n == 3) {
      const auto l1 = as_u64(graded_dims(tower.level(1), tower.index(2), s, sys.num_x()));
      const auto l2 = as_u64(graded_dims(tower.level(2), tower.index(3), s, sys.num_x()));
      rep.check(id + ".components_1", std::vector<u64>{18, 8, 2}, l1);
      rep.check(id + ".components_2", std::vector<u64>{32, 18, 8, 2}, l2);
      rep.component_dims["parabolic.n3.k2.prolongation_1_by_y_degree"] = l1;
      rep.component_dims["parabolic.n3.k2.prolongation_2_by_y_degree"] = l2;
      rep.dims["parabolic.n3.k2.weighted_degree_2"] = weighted_monogenic_space(sys, 2).dim();
    }
  }
  sw.lap("parabolic_level1");

  // Lifts.
  for (std::size_t n = 3; n <= 4; ++n) {
    const ParabolicSystem sys = build_parabolic(n, 2);
    const EuclideanSystem flat = build_euclidean(n, 2);
    const std::size_t s = sys.params.s;
    const auto ys = sys.y_vars();
    const Poly one = Poly::constant(sys.vars, 1);
    const Poly y12 = Poly::monomial(sys.vars, sys.vars->unit(sys.y_index(1, 2)));
    for (unsigned r = 0; r <= 2; ++r) {
      const auto psis = basis_polys(flat.vars, s, r, solution_space(flat.ops, *flat.vars, s, r));
      for (const auto& [gname, g, l] : {std::tuple{"1", one, 0u}, std::tuple{"y12", y12, 1u}}) {
        std::size_t ok = 0;
        try {
          const auto lifts = lift_many(sys, psis, g);
          for (std::size_t i = 0; i < psis.size(); ++i) {
            const SpinorPoly rest = lifts[i] - psis[i].embed(sys.vars).times(g);
            const bool lower = l == 0 ? rest.is_zero() : rest.max_degree_in(ys) < l;
            if (is_solution(sys.ops, lifts[i]) && lifts[i].is_weighted_homogeneous(r + 2 * l) && lower) ++ok;
          }
        } catch (const std::logic_error&) {
          ok = 0;
        }
        rep.check("c11.lift." + instance("parabolic", n, 2) + ".r" + std::to_string(r) + ".g" + gname, psis.size(), ok);
      }
    }
  }
  sw.lap("lift");

  // Weyl dimensions.
  using F = RootSystem::Family;
  for (const auto& [family, rank] : std::vector<std::pair<F, std::size_t>>{{F::A, 1}, {F::B, 2}, {F::D, 3}}) {
    const RootSystem rs = RootSystem::make(family, rank);
    rep.check("c12.weyl.trivial." + std::to_string(static_cast<int>(family)) + std::to_string(rank), 1,
              weyl_dim(rs, Weight(rs.ambient_dim())));
  }
  for (std::size_t m = 3; m <= 5; ++m) {
    const RootSystem d = RootSystem::make(F::D, m);
    const std::string id = "c12.weyl.D" + std::to_string(m);
    rep.check(id + ".s3_spin", (u64{1} << (m - 2)) * (2 * m + 1) * (2 * m) * (2 * m - 1) / 3,
              weyl_dim(d, spin_weight(m, {3})));
    rep.check(id + ".mu", (2 * m + 1) * (2 * m - 1) * (2 * m - 3) * (u64{1} << (m - 1)) / 3,
              weyl_dim(d, spin_weight(m, {2, 1})));
  }
  for (std::size_t m = 2; m <= 4; ++m) {
    const RootSystem b = RootSystem::make(F::B, m);
    const std::string id = "c12.weyl.B" + std::to_string(m);
    rep.check(id + ".sigma", (u64{1} << m) * (2 * m + 2) * (2 * m + 1) * (2 * m) / 6, weyl_dim(b, spin_weight(m, {3})));
    rep.check(id + ".nu", (m + 1) * m * (m - 1) * (u64{1} << (m + 3)) / 3, weyl_dim(b, spin_weight(m, {2, 1})));
  }
  for (std::size_t m = 2; m <= 4; ++m) {
    const ChiralSplit split = chirality_split(build_spinor_rep(2 * m));
    const u64 half = weyl_dim(RootSystem::make(F::D, m), spin_weight(m, {}));
    rep.check("c12.weyl.half_spin.D" + std::to_string(m), std::vector<u64>{split.plus, split.minus},
              std::vector<u64>{half, half});
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto rows = module_table(n);
    u64 total = 0;
    for (const auto& row : rows) {
      rep.dims["module_table.n" + std::to_string(n) + "." + row.label] = row.dim;
      total += row.dim;
    }
    const u64 s = u64{1} << (n / 2);
    rep.check("c12.module_table.n" + std::to_string(n) + ".total", euclid_level1_rhs(n, s), total);
    if (n == 3) rep.check("c12.module_table.n3.row1", 32, rows.at(0).dim);
    if (n == 4) rep.check("c12.module_table.n4.special", 40, rows.at(1).dim);
    if (n <= 5) {
      const EuclideanSystem sys = build_euclidean(n, 2);
      rep.check("c12.module_table.n" + std::to_string(n) + ".cubic_solutions", total,
                solution_space(sys.ops, *sys.vars, sys.params.s, 3).dim());
    }
  }
  sw.lap("weyl");

  // Reproducible random orderings.
  for (u64 seed = 1; seed <= 5; ++seed) {
    rep.check("c13.random_seed." + std::to_string(seed), true,
              random_change_matrix(12, seed) == random_change_matrix(12, seed));
  }
  return rep;
}

}  // namespace kdirac
