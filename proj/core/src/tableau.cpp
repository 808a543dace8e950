#include "kdirac/tableau.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace kdirac {
namespace {

constexpr std::size_t kMaxLookup = std::size_t{1} << 26;

void enumerate(std::size_t n, std::size_t degree, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == degree) {
    out.push_back(cur);
    return;
  }
  for (std::size_t a = start; a < n; ++a) {
    cur.push_back(a);
    enumerate(n, degree, a, cur, out);
    cur.pop_back();
  }
}

std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

// sigma'(a, w) = sum_b sigma(b, w) dual(b, a)
SparseVector transform(const SparseVector& sigma, std::size_t dim_W, const ExactMatrix& dual) {
  std::vector<SparseVector::Entry> entries;
  for (const auto& e : sigma) {
    const std::size_t b = e.index / dim_W;
    const std::size_t w = e.index % dim_W;
    for (const auto& d : dual.row(b)) entries.push_back({d.index * dim_W + w, e.value * d.value});
  }
  return SparseVector(std::move(entries));
}

// Evaluation sigma(v) in W.
SparseVector evaluate(const SparseVector& sigma, std::size_t dim_W, const std::vector<GaussRational>& v) {
  std::vector<SparseVector::Entry> entries;
  for (const auto& e : sigma) {
    const GaussRational& c = v[e.index / dim_W];
    if (!c.is_zero()) entries.push_back({e.index % dim_W, e.value * c});
  }
  return SparseVector(std::move(entries));
}

std::vector<std::vector<GaussRational>> candidate_pool(std::size_t n) {
  std::vector<std::vector<GaussRational>> pool;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<GaussRational> v(n);
    v[a] = 1;
    pool.push_back(std::move(v));
  }
  for (int sign : {1, -1}) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        std::vector<GaussRational> v(n);
        v[a] = 1;
        v[b] = sign;
        pool.push_back(std::move(v));
      }
    }
  }
  return pool;
}

OrderedBasis greedy_ordering(const Tableau& t) {
  const std::size_t n = t.dim_V;
  const auto pool = candidate_pool(n);
  std::vector<SparseVector> current = t.basis.vectors();
  std::vector<std::vector<GaussRational>> chosen;
  EchelonBuilder chosen_span(n);

  while (chosen.size() < n) {
    std::size_t best = pool.size();
    std::size_t best_rank = 0;
    for (std::size_t c = 0; c < pool.size() && !current.empty(); ++c) {
      std::vector<SparseVector> images;
      images.reserve(current.size());
      for (const auto& sigma : current) images.push_back(evaluate(sigma, t.dim_W, pool[c]));
      const std::size_t r = rank(t.dim_W, images);
      if (r > best_rank) {
        best_rank = r;
        best = c;
      }
    }
    if (best == pool.size()) {
      // Nothing left to separate: complete with independent pool vectors.
      for (std::size_t c = 0; c < pool.size() && chosen.size() < n; ++c) {
        if (chosen_span.add(SparseVector::from_dense(pool[c]))) chosen.push_back(pool[c]);
      }
      break;
    }
    const auto& v = pool[best];
    if (!chosen_span.add(SparseVector::from_dense(v))) {
      throw std::logic_error("greedy_ordering: selected a dependent vector");
    }
    chosen.push_back(v);

    // Restrict to the kernel of evaluation at v.
    std::vector<SparseVector> images;
    for (const auto& sigma : current) images.push_back(evaluate(sigma, t.dim_W, v));
    const ExactMatrix eval = ExactMatrix(t.dim_W, images).transpose();
    const SubspaceBasis combos = kernel(eval);
    std::vector<SparseVector> next;
    for (const auto& c : combos.vectors()) {
      SparseVector acc;
      for (const auto& e : c) acc = acc + current[e.index].scaled(e.value);
      next.push_back(std::move(acc));
    }
    current = SubspaceBasis::span(t.basis.ambient_dim(), next).vectors();
  }

  ExactMatrix dual(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) dual.set(b, a, chosen[a][b]);
  }
  return OrderedBasis::from_dual_vectors(std::move(dual), "greedy");
}

}  // namespace

Tableau Tableau::make(std::size_t dim_V, std::size_t dim_W, SubspaceBasis basis) {
  if (basis.ambient_dim() != dim_V * dim_W) {
    throw std::invalid_argument("Tableau: basis does not live in V* (x) W");
  }
  Tableau t;
  t.dim_V = dim_V;
  t.dim_W = dim_W;
  t.basis = std::move(basis);
  return t;
}

Tableau Tableau::full(std::size_t dim_V, std::size_t dim_W) {
  return make(dim_V, dim_W, SubspaceBasis::full(dim_V * dim_W));
}

Tableau Tableau::zero(std::size_t dim_V, std::size_t dim_W) {
  return make(dim_V, dim_W, SubspaceBasis(dim_V * dim_W));
}

OrderedBasis OrderedBasis::identity(std::size_t n, std::string label) {
  return {ExactMatrix::identity(n), ExactMatrix::identity(n), std::move(label)};
}

OrderedBasis OrderedBasis::from_change(ExactMatrix change, std::string label) {
  ExactMatrix dual = inverse(change);
  return {std::move(change), std::move(dual), std::move(label)};
}

OrderedBasis OrderedBasis::from_dual_vectors(ExactMatrix dual, std::string label) {
  ExactMatrix change = inverse(dual);
  return {std::move(change), std::move(dual), std::move(label)};
}

SymmetricIndex::SymmetricIndex(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
  std::size_t table = 1;
  for (std::size_t d = 0; d < degree; ++d) {
    if (n != 0 && table > kMaxLookup / n) throw std::overflow_error("SymmetricIndex: too large");
    table *= n;
  }
  std::vector<std::size_t> cur;
  enumerate(n, degree, 0, cur, tuples_);
  lookup_.assign(table, 0);
  // Fill every permutation of every tuple.
  for (std::size_t r = 0; r < tuples_.size(); ++r) {
    std::vector<std::size_t> perm = tuples_[r];
    do {
      std::size_t key = 0;
      for (std::size_t a : perm) key = key * n + a;
      lookup_[key] = r;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

std::size_t SymmetricIndex::rank(std::span<const std::size_t> indices) const {
  if (indices.size() != degree_) throw std::invalid_argument("SymmetricIndex: wrong multiset size");
  std::size_t key = 0;
  for (std::size_t a : indices) {
    if (a >= n_) throw std::out_of_range("SymmetricIndex: index out of range");
    key = key * n_ + a;
  }
  return lookup_[key];
}

SymbolTower::SymbolTower(Tableau base, std::size_t levels) : base_(std::move(base)) {
  annihilator_ = annihilator(base_.basis);
  for (std::size_t d = 0; d <= levels + 2; ++d) indices_.emplace_back(base_.dim_V, d);
  levels_.push_back(base_.basis);
  for (std::size_t l = 1; l <= levels; ++l) levels_.push_back(kernel(constraints(l)));
  top_dim_ = kernel_dim(constraints(levels + 1));
}

std::size_t SymbolTower::level_dim(std::size_t l) const {
  if (l < levels_.size()) return levels_[l].dim();
  if (l == levels_.size()) return top_dim_;
  throw std::out_of_range("SymbolTower: level not computed");
}

ExactMatrix SymbolTower::constraints(std::size_t l) const {
  if (l == 0 || l + 1 >= indices_.size()) throw std::out_of_range("SymbolTower: constraint level");
  const std::size_t W = base_.dim_W;
  const SymmetricIndex& lower = indices_[l];
  const SymmetricIndex& upper = indices_[l + 1];
  ExactMatrix m(upper.size() * W, std::vector<SparseVector>{});
  std::vector<std::size_t> tuple(l + 1);
  for (std::size_t r = 0; r < lower.size(); ++r) {
    const auto& base_tuple = lower.tuple(r);
    std::copy(base_tuple.begin(), base_tuple.end(), tuple.begin());
    for (const auto& phi : annihilator_.vectors()) {
      std::vector<SparseVector::Entry> entries;
      entries.reserve(phi.nnz());
      for (const auto& e : phi) {
        tuple[l] = e.index / W;
        entries.push_back({upper.rank(tuple) * W + e.index % W, e.value});
      }
      m.append_row(SparseVector(std::move(entries)));
    }
  }
  return m;
}

Tableau SymbolTower::lifted(std::size_t l) const {
  if (l == 0) return base_;
  if (l >= levels_.size()) throw std::out_of_range("SymbolTower: level not computed");
  const std::size_t W = base_.dim_W;
  const std::size_t n = base_.dim_V;
  const SubspaceBasis& lower = levels_[l - 1];
  const std::size_t d_lower = lower.dim();
  const SymmetricIndex& idx_lower = indices_[l];
  const SymmetricIndex& idx_upper = indices_[l + 1];

  std::vector<SparseVector> lifted_vectors;
  std::vector<std::vector<SparseVector::Entry>> slices(n);
  std::vector<std::size_t> rest(l);
  for (const auto& T : levels_[l].vectors()) {
    for (auto& s : slices) s.clear();
    for (const auto& e : T) {
      const auto& tuple = idx_upper.tuple(e.index / W);
      for (std::size_t pos = 0; pos < tuple.size(); ++pos) {
        if (pos > 0 && tuple[pos] == tuple[pos - 1]) continue;
        std::size_t out = 0;
        for (std::size_t q = 0; q < tuple.size(); ++q) {
          if (q != pos) rest[out++] = tuple[q];
        }
        slices[tuple[pos]].push_back({idx_lower.rank(rest) * W + e.index % W, e.value});
      }
    }
    std::vector<SparseVector::Entry> entries;
    for (std::size_t a = 0; a < n; ++a) {
      if (slices[a].empty()) continue;
      const SparseVector coords = lower.pivot_coordinates(SparseVector(slices[a]));
      for (const auto& c : coords) entries.push_back({a * d_lower + c.index, c.value});
    }
    lifted_vectors.push_back(SparseVector(std::move(entries)));
  }
  return Tableau::make(n, d_lower, SubspaceBasis::span(n * d_lower, lifted_vectors));
}

Prolongation prolong(const Tableau& t) {
  SymbolTower tower(t, 1);
  return {tower.level(1), tower.lifted(1)};
}

std::size_t prolongation_dim(const Tableau& t) {
  SymbolTower tower(t, 0);
  return tower.level_dim(1);
}

std::vector<std::size_t> filtration_dims(const Tableau& t, const OrderedBasis& ob) {
  if (ob.dual.rows() != t.dim_V || ob.dual.cols() != t.dim_V) {
    throw std::invalid_argument("filtration_dims: ordering has the wrong size");
  }
  EchelonBuilder builder(t.dim_V * t.dim_W);
  for (const auto& sigma : t.basis.vectors()) builder.add(transform(sigma, t.dim_W, ob.dual));
  std::vector<std::size_t> dims;
  std::size_t pivots = 0;
  for (std::size_t j = 1; j <= t.dim_V; ++j) {
    for (std::size_t c = (j - 1) * t.dim_W; c < j * t.dim_W; ++c) {
      if (builder.is_pivot(c)) ++pivots;
    }
    dims.push_back(t.dim() - pivots);
  }
  return dims;
}

std::vector<std::size_t> characters_from_filtration(std::size_t dim_A,
                                                    const std::vector<std::size_t>& filtration) {
  std::vector<std::size_t> chars;
  std::size_t prev = dim_A;
  for (std::size_t d : filtration) {
    if (d > prev) throw std::logic_error("characters_from_filtration: filtration not decreasing");
    chars.push_back(prev - d);
    prev = d;
  }
  return chars;
}

namespace {

CartanReport assemble(const Tableau& t, const OrderedBasis& ob, std::size_t dim_prolongation) {
  CartanReport r;
  r.dim_A = t.dim();
  r.filtration_dims = filtration_dims(t, ob);
  r.characters = characters_from_filtration(r.dim_A, r.filtration_dims);
  for (std::size_t k = 0; k < r.characters.size(); ++k) r.rhs += (k + 1) * r.characters[k];
  r.dim_prolongation = dim_prolongation;
  if (r.dim_prolongation > r.rhs) throw std::logic_error("cartan_test: Cartan bound violated");
  r.involutive = r.dim_prolongation == r.rhs;
  r.ordering_label = ob.label;
  return r;
}

}  // namespace

CartanReport cartan_test(const Tableau& t, const OrderedBasis& ob) {
  return assemble(t, ob, prolongation_dim(t));
}

CartanReport cartan_test(const SymbolTower& tower, std::size_t level, const OrderedBasis& ob) {
  return assemble(tower.lifted(level), ob, tower.level_dim(level + 1));
}

OrderingStrategy OrderingStrategy::given(std::optional<OrderedBasis> ob) {
  OrderingStrategy s;
  s.kind = Kind::given;
  s.supplied = std::move(ob);
  return s;
}

OrderingStrategy OrderingStrategy::greedy() {
  return {};
}

OrderingStrategy OrderingStrategy::random(std::uint64_t seed) {
  OrderingStrategy s;
  s.kind = Kind::random;
  s.seed = seed;
  return s;
}

ExactMatrix random_change_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  for (;;) {
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m.set(r, c, static_cast<std::int64_t>(engine() % 7) - 3);
      }
    }
    if (rank(m) == n) return m;
  }
}

OrderedBasis search_ordering(const Tableau& t, const OrderingStrategy& strategy) {
  switch (strategy.kind) {
    case OrderingStrategy::Kind::given:
      if (strategy.supplied) return *strategy.supplied;
      return OrderedBasis::identity(t.dim_V);
    case OrderingStrategy::Kind::random:
      return OrderedBasis::from_dual_vectors(random_change_matrix(t.dim_V, strategy.seed),
                                       "random:" + std::to_string(strategy.seed));
    case OrderingStrategy::Kind::greedy:
      break;
  }
  return greedy_ordering(t);
}

std::size_t h02_dim(const Tableau& t) {
  const std::size_t n = t.dim_V;
  const std::size_t W = t.dim_W;
  const std::size_t pairs = n * (n - 1) / 2;
  EchelonBuilder builder(pairs * W);
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& sigma : t.basis.vectors()) {
      std::vector<SparseVector::Entry> entries;
      for (const auto& e : sigma) {
        const std::size_t b = e.index / W;
        const std::size_t w = e.index % W;
        if (a == b) continue;
        if (a < b) {
          entries.push_back({pair_index(n, a, b) * W + w, e.value});
        } else {
          entries.push_back({pair_index(n, b, a) * W + w, -e.value});
        }
      }
      builder.add(SparseVector(std::move(entries)));
    }
  }
  return pairs * W - builder.rank();
}

}  // namespace kdirac
