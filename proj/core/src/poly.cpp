#include "kdirac/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kdirac {

VarsPtr VariableSet::uniform(std::vector<std::string> names) {
  std::vector<unsigned> weights(names.size(), 1);
  return weighted(std::move(names), std::move(weights));
}

VarsPtr VariableSet::weighted(std::vector<std::string> names, std::vector<unsigned> weights) {
  if (names.size() != weights.size()) throw std::invalid_argument("VariableSet: weights/names size mismatch");
  if (std::any_of(weights.begin(), weights.end(), [](unsigned w) { return w == 0; })) {
    throw std::invalid_argument("VariableSet: weights must be positive");
  }
  auto vars = std::make_shared<VariableSet>();
  vars->names = std::move(names);
  vars->weights = std::move(weights);
  return vars;
}

std::size_t VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("VariableSet: unknown variable " + name);
  return static_cast<std::size_t>(it - names.begin());
}

unsigned VariableSet::weighted_degree(const Exponents& e) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
  return d;
}

Exponents VariableSet::unit(std::size_t var, unsigned power) const {
  Exponents e(size(), 0);
  e.at(var) = power;
  return e;
}

namespace {

void enumerate(const VariableSet& vars, std::size_t var, unsigned remaining, Exponents& current,
               std::vector<Exponents>& out) {
  if (var + 1 == vars.size()) {
    if (remaining % vars.weights[var] == 0) {
      current[var] = remaining / vars.weights[var];
      out.push_back(current);
      current[var] = 0;
    }
    return;
  }
  for (unsigned e = remaining / vars.weights[var] + 1; e-- > 0;) {
    current[var] = e;
    enumerate(vars, var + 1, remaining - e * vars.weights[var], current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(const VariableSet& vars, unsigned weighted_degree) {
  std::vector<Exponents> out;
  if (vars.size() == 0) {
    if (weighted_degree == 0) out.emplace_back();
    return out;
  }
  Exponents current(vars.size(), 0);
  enumerate(vars, 0, weighted_degree, current, out);
  return out;
}

Poly Poly::constant(VarsPtr vars, GaussRational c) {
  Exponents zero(vars->size(), 0);
  return monomial(std::move(vars), std::move(zero), std::move(c));
}

Poly Poly::monomial(VarsPtr vars, Exponents e, GaussRational c) {
  Poly p(std::move(vars));
  if (e.size() != p.vars_->size()) throw std::invalid_argument("Poly: exponent size mismatch");
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponents& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long Poly::weighted_degree() const {
  if (terms_.empty()) return -1;
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long here = vars_->weighted_degree(e);
    if (d >= 0 && here != d) return -2;
    d = here;
  }
  return d;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a.vars_ ? a : Poly(b.vars_);
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.vars_ ? a.vars_ : b.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SpinorPoly SpinorPoly::monomial(VarsPtr vars, std::size_t spinor_dim, const Exponents& e,
                                std::span<const GaussRational> spinor) {
  if (spinor.size() != spinor_dim) throw std::invalid_argument("SpinorPoly: spinor length mismatch");
  SpinorPoly p(std::move(vars), spinor_dim);
  for (std::size_t mu = 0; mu < spinor_dim; ++mu) p.add_term(e, mu, spinor[mu]);
  return p;
}

void SpinorPoly::add_term(const Exponents& e, std::size_t comp, const GaussRational& c) {
  if (comp >= spinor_dim_) throw std::out_of_range("SpinorPoly: spinor component out of range");
  if (e.size() != vars_->size()) throw std::invalid_argument("SpinorPoly: exponent size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{e, comp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussRational SpinorPoly::coeff(const Exponents& e, std::size_t comp) const {
  auto it = terms_.find(Key{e, comp});
  return it == terms_.end() ? GaussRational{} : it->second;
}

bool SpinorPoly::is_weighted_homogeneous(unsigned degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return vars_->weighted_degree(t.first.exps) == degree;
  });
}

unsigned SpinorPoly::max_degree_in(std::span<const std::size_t> vars) const {
  unsigned best = 0;
  for (const auto& [key, c] : terms_) {
    unsigned d = 0;
    for (std::size_t v : vars) d += key.exps.at(v);
    best = std::max(best, d);
  }
  return best;
}

SpinorPoly SpinorPoly::derivative(std::size_t var) const {
  if (var >= vars_->size()) throw std::out_of_range("SpinorPoly::derivative: variable out of range");
  SpinorPoly out(vars_, spinor_dim_);
  for (const auto& [key, c] : terms_) {
    unsigned e = key.exps[var];
    if (e == 0) continue;
    Exponents lowered = key.exps;
    lowered[var] = e - 1;
    out.add_term(lowered, key.comp, c * GaussRational{static_cast<std::int64_t>(e)});
  }
  return out;
}

SpinorPoly SpinorPoly::times(const Poly& scalar) const {
  if (scalar.vars() && scalar.vars()->size() != vars_->size()) {
    throw std::invalid_argument("SpinorPoly::times: variable mismatch");
  }
  SpinorPoly out(vars_, spinor_dim_);
  for (const auto& [key, c] : terms_) {
    for (const auto& [e, d] : scalar.terms()) {
      Exponents prod = key.exps;
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += e[i];
      out.add_term(prod, key.comp, c * d);
    }
  }
  return out;
}

SpinorPoly SpinorPoly::apply_matrix(const ExactMatrix& m) const {
  if (m.rows() != spinor_dim_ || m.cols() != spinor_dim_) {
    throw std::invalid_argument("SpinorPoly::apply_matrix: matrix size mismatch");
  }
  const ExactMatrix cols = m.transpose();
  SpinorPoly out(vars_, spinor_dim_);
  for (const auto& [key, c] : terms_) {
    for (const auto& e : cols.row(key.comp)) out.add_term(key.exps, e.index, e.value * c);
  }
  return out;
}

SpinorPoly SpinorPoly::restrict_to_zero(std::span<const std::size_t> vars) const {
  SpinorPoly out(vars_, spinor_dim_);
  for (const auto& [key, c] : terms_) {
    bool vanishes = std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return key.exps.at(v) > 0; });
    if (!vanishes) out.add_term(key.exps, key.comp, c);
  }
  return out;
}

SpinorPoly SpinorPoly::substitute_linear(VarsPtr new_vars, const ExactMatrix& forms) const {
  if (forms.rows() != vars_->size() || forms.cols() != new_vars->size()) {
    throw std::invalid_argument("SpinorPoly::substitute_linear: form matrix shape mismatch");
  }
  std::vector<Poly> images;
  for (std::size_t i = 0; i < forms.rows(); ++i) {
    Poly img(new_vars);
    for (const auto& e : forms.row(i)) img.add_term(new_vars->unit(e.index), e.value);
    images.push_back(std::move(img));
  }
  SpinorPoly out(new_vars, spinor_dim_);
  std::map<Exponents, Poly> cache;
  for (const auto& [key, c] : terms_) {
    auto it = cache.find(key.exps);
    if (it == cache.end()) {
      Poly prod = Poly::constant(new_vars, 1);
      for (std::size_t i = 0; i < key.exps.size(); ++i) {
        for (unsigned p = 0; p < key.exps[i]; ++p) prod = prod * images[i];
      }
      it = cache.emplace(key.exps, std::move(prod)).first;
    }
    for (const auto& [e, d] : it->second.terms()) out.add_term(e, key.comp, c * d);
  }
  return out;
}

SpinorPoly SpinorPoly::embed(VarsPtr bigger) const {
  if (bigger->size() < vars_->size()) throw std::invalid_argument("SpinorPoly::embed: target too small");
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if (bigger->names[i] != vars_->names[i]) {
      throw std::invalid_argument("SpinorPoly::embed: variable prefix mismatch");
    }
  }
  SpinorPoly out(bigger, spinor_dim_);
  for (const auto& [key, c] : terms_) {
    Exponents e = key.exps;
    e.resize(bigger->size(), 0);
    out.add_term(e, key.comp, c);
  }
  return out;
}

void SpinorPoly::check_compatible_(const SpinorPoly& other) const {
  if (vars_->size() != other.vars_->size() || spinor_dim_ != other.spinor_dim_) {
    throw std::invalid_argument("SpinorPoly: incompatible operands");
  }
}

SpinorPoly operator+(const SpinorPoly& a, const SpinorPoly& b) {
  a.check_compatible_(b);
  SpinorPoly out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.exps, key.comp, c);
  return out;
}

SpinorPoly operator-(const SpinorPoly& a, const SpinorPoly& b) { return a + GaussRational{-1} * b; }

SpinorPoly operator*(const GaussRational& c, const SpinorPoly& p) {
  SpinorPoly out(p.vars_, p.spinor_dim_);
  for (const auto& [key, d] : p.terms_) out.add_term(key.exps, key.comp, c * d);
  return out;
}

std::string SpinorPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 0; i < key.exps.size(); ++i) {
      if (key.exps[i] == 0) continue;
      os << "*" << vars_->names[i];
      if (key.exps[i] > 1) os << "^" << key.exps[i];
    }
    os << "*e" << key.comp;
  }
  return os.str();
}

void DiffOp::add(Poly coeff, std::size_t var, ExactMatrix matrix) {
  if (coeff.is_zero() || matrix.is_zero()) return;
  terms.push_back({std::move(coeff), var, std::move(matrix)});
}

SpinorPoly apply_op(const DiffOp& op, const SpinorPoly& p) {
  SpinorPoly out(p.vars(), p.spinor_dim());
  for (const auto& t : op.terms) {
    if (t.var >= p.vars()->size()) throw std::invalid_argument("apply_op: variable mismatch");
    SpinorPoly d = p.derivative(t.var);
    if (d.is_zero()) continue;
    out = out + d.times(t.coeff).apply_matrix(t.matrix);
  }
  return out;
}

std::optional<long> weighted_shift(const DiffOp& op, const VariableSet& vars) {
  std::optional<long> shift;
  for (const auto& t : op.terms) {
    if (t.var >= vars.size()) return std::nullopt;
    long cdeg = t.coeff.weighted_degree();
    if (cdeg < 0) return std::nullopt;
    long here = cdeg - static_cast<long>(vars.weights[t.var]);
    if (shift && *shift != here) return std::nullopt;
    shift = here;
  }
  return shift;
}

namespace {

std::map<Exponents, std::size_t> index_monomials(const std::vector<Exponents>& monos) {
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  return index;
}

}  // namespace

ExactMatrix constraint_matrix(std::span<const DiffOp> ops, const VariableSet& vars, std::size_t s,
                              unsigned weighted_degree) {
  const auto sources = monomial_basis(vars, weighted_degree);
  std::vector<std::vector<SparseVector::Entry>> rows;
  for (const auto& op : ops) {
    auto shift = weighted_shift(op, vars);
    if (op.terms.empty()) continue;
    if (!shift || *shift >= 0) {
      throw std::invalid_argument("solution_space: operator does not lower the weighted degree uniformly");
    }
    long target_degree = static_cast<long>(weighted_degree) + *shift;
    if (target_degree < 0) continue;
    const auto targets = monomial_basis(vars, static_cast<unsigned>(target_degree));
    const auto target_index = index_monomials(targets);
    const std::size_t row_base = rows.size();
    rows.resize(row_base + targets.size() * s);

    std::vector<ExactMatrix> columns;
    for (const auto& t : op.terms) {
      if (t.matrix.rows() != s || t.matrix.cols() != s) {
        throw std::invalid_argument("solution_space: operator matrix size mismatch");
      }
      columns.push_back(t.matrix.transpose());
    }
    for (std::size_t src = 0; src < sources.size(); ++src) {
      const Exponents& mono = sources[src];
      for (std::size_t ti = 0; ti < op.terms.size(); ++ti) {
        const auto& term = op.terms[ti];
        unsigned e = mono[term.var];
        if (e == 0) continue;
        Exponents lowered = mono;
        lowered[term.var] = e - 1;
        for (const auto& [ce, cv] : term.coeff.terms()) {
          Exponents target = lowered;
          for (std::size_t i = 0; i < target.size(); ++i) target[i] += ce[i];
          const std::size_t tgt = target_index.at(target);
          const GaussRational factor = cv * GaussRational{static_cast<std::int64_t>(e)};
          for (std::size_t mu = 0; mu < s; ++mu) {
            for (const auto& entry : columns[ti].row(mu)) {
              rows[row_base + tgt * s + entry.index].push_back({src * s + mu, factor * entry.value});
            }
          }
        }
      }
    }
  }
  std::vector<SparseVector> sparse;
  sparse.reserve(rows.size());
  for (auto& r : rows) sparse.emplace_back(std::move(r));
  return ExactMatrix(sources.size() * s, std::move(sparse));
}

SubspaceBasis solution_space(std::span<const DiffOp> ops, const VariableSet& vars, std::size_t s,
                             unsigned weighted_degree) {
  return kernel(constraint_matrix(ops, vars, s, weighted_degree));
}

SpinorPoly to_spinor_poly(VarsPtr vars, std::size_t s, unsigned weighted_degree,
                          const SparseVector& coords) {
  const auto monos = monomial_basis(*vars, weighted_degree);
  SpinorPoly p(vars, s);
  for (const auto& e : coords) p.add_term(monos.at(e.index / s), e.index % s, e.value);
  return p;
}

SparseVector to_coordinates(const SpinorPoly& p, unsigned weighted_degree) {
  const auto monos = monomial_basis(*p.vars(), weighted_degree);
  const auto index = index_monomials(monos);
  std::vector<SparseVector::Entry> entries;
  for (const auto& [key, c] : p.terms()) {
    auto it = index.find(key.exps);
    if (it == index.end()) throw std::invalid_argument("to_coordinates: polynomial is not homogeneous of this degree");
    entries.push_back({it->second * p.spinor_dim() + key.comp, c});
  }
  return SparseVector(std::move(entries));
}

}  // namespace kdirac
