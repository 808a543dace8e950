#include "kdirac/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace kdirac {

EchelonBuilder::EchelonBuilder(std::size_t cols)
    : cols_(cols), pivot_row_(cols, -1), acc_(cols), touched_(cols, 0) {}

SparseVector EchelonBuilder::reduce_(const SparseVector& row) {
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
  for (const auto& e : row) {
    if (e.index >= cols_) throw std::out_of_range("EchelonBuilder: column out of range");
    acc_[e.index] = e.value;
    touched_[e.index] = 1;
    heap.push(e.index);
  }
  SparseVector out;
  // Pivot row p only has entries in columns >= p, so columns are final once
  // popped and each column enters the heap at most once.
  while (!heap.empty()) {
    std::size_t c = heap.top();
    heap.pop();
    touched_[c] = 0;
    GaussRational value = std::move(acc_[c]);
    acc_[c] = GaussRational{};
    if (value.is_zero()) continue;
    long p = pivot_row_[c];
    if (p < 0) {
      out.push_back(c, std::move(value));
      continue;
    }
    const SparseVector& prow = rows_[static_cast<std::size_t>(p)];
    for (const auto& e : prow) {
      if (e.index == c) continue;
      acc_[e.index] -= value * e.value;
      if (!touched_[e.index]) {
        touched_[e.index] = 1;
        heap.push(e.index);
      }
    }
  }
  return out;
}

bool EchelonBuilder::add(const SparseVector& row) {
  SparseVector reduced = reduce_(row);
  if (reduced.empty()) return false;
  std::size_t pivot = reduced.entries().front().index;
  GaussRational inv = reduced.entries().front().value.inverse();
  SparseVector normalized = reduced.scaled(inv);
  pivot_row_[pivot] = static_cast<long>(rows_.size());
  pivot_of_row_.push_back(pivot);
  rows_.push_back(std::move(normalized));
  return true;
}

EchelonBuilder::Reduced EchelonBuilder::finish() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] < pivot_of_row_[b]; });

  Reduced out;
  out.rows.resize(rows_.size());
  out.pivots.resize(rows_.size());
  std::vector<long> slot_of_pivot(cols_, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.pivots[k] = pivot_of_row_[order[k]];
    slot_of_pivot[out.pivots[k]] = static_cast<long>(k);
  }

  // Rows with larger pivots are fully reduced first; each one then only has
  // entries at its own pivot and at non-pivot columns, so a single pass of
  // subtractions clears every later pivot column of the current row.
  std::vector<GaussRational> acc(cols_);
  for (std::size_t k = order.size(); k-- > 0;) {
    const SparseVector& src = rows_[order[k]];
    bool needs_work = std::any_of(src.begin(), src.end(), [&](const auto& e) {
      return e.index != out.pivots[k] && slot_of_pivot[e.index] >= 0;
    });
    if (!needs_work) {
      out.rows[k] = src;
      continue;
    }
    std::vector<std::size_t> support;
    for (const auto& e : src) {
      acc[e.index] = e.value;
      support.push_back(e.index);
    }
    for (const auto& e : src) {
      if (e.index == out.pivots[k]) continue;
      long slot = slot_of_pivot[e.index];
      if (slot < 0) continue;
      GaussRational factor = acc[e.index];
      if (factor.is_zero()) continue;
      for (const auto& f : out.rows[static_cast<std::size_t>(slot)]) {
        if (acc[f.index].is_zero()) support.push_back(f.index);
        acc[f.index] -= factor * f.value;
      }
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    SparseVector row;
    for (std::size_t c : support) {
      row.push_back(c, acc[c]);
      acc[c] = GaussRational{};
    }
    out.rows[k] = std::move(row);
  }
  return out;
}

RrefResult rref(const ExactMatrix& m) {
  EchelonBuilder builder(m.cols());
  for (const auto& row : m.row_data()) builder.add(row);
  auto reduced = builder.finish();
  RrefResult out;
  out.rank = reduced.rows.size();
  out.pivot_cols = std::move(reduced.pivots);
  std::vector<SparseVector> rows = std::move(reduced.rows);
  rows.resize(m.rows());
  out.reduced = ExactMatrix(m.cols(), std::move(rows));
  return out;
}

std::size_t rank(std::size_t cols, std::span<const SparseVector> rows) {
  EchelonBuilder builder(cols);
  for (const auto& row : rows) builder.add(row);
  return builder.rank();
}

std::size_t rank(const ExactMatrix& m) { return rank(m.cols(), m.row_data()); }

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, std::span<const SparseVector> vectors) {
  EchelonBuilder builder(ambient_dim);
  for (const auto& v : vectors) builder.add(v);
  auto reduced = builder.finish();
  SubspaceBasis out(ambient_dim);
  out.vectors_ = std::move(reduced.rows);
  out.pivots_ = std::move(reduced.pivots);
  return out;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  SubspaceBasis out(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    out.vectors_.push_back(SparseVector::unit(i));
    out.pivots_.push_back(i);
  }
  return out;
}

SparseVector SubspaceBasis::pivot_coordinates(const SparseVector& v) const {
  SparseVector out;
  for (std::size_t i = 0; i < pivots_.size(); ++i) out.push_back(i, v.at(pivots_[i]));
  return out;
}

std::optional<std::vector<GaussRational>> SubspaceBasis::coordinates(const SparseVector& v) const {
  SparseVector coords = pivot_coordinates(v);
  SparseVector rebuilt;
  for (const auto& e : coords) rebuilt = rebuilt + vectors_[e.index].scaled(e.value);
  if (!(rebuilt == v)) return std::nullopt;
  return coords.to_dense(dim());
}

bool SubspaceBasis::contains(const SparseVector& v) const { return coordinates(v).has_value(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [&](const auto& v) { return contains(v); });
}

namespace {

std::vector<SparseVector> kernel_vectors(const ExactMatrix& m) {
  auto reduced = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : reduced.pivot_cols) is_pivot[p] = 1;
  std::vector<std::vector<SparseVector::Entry>> entries(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) entries[c].push_back({c, 1});
  }
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    std::size_t p = reduced.pivot_cols[r];
    for (const auto& e : reduced.reduced.row(r)) {
      if (e.index != p) entries[e.index].push_back({p, -e.value});
    }
  }
  std::vector<SparseVector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) out.emplace_back(std::move(entries[c]));
  }
  return out;
}

}  // namespace

SubspaceBasis kernel(const ExactMatrix& m) {
  auto vectors = kernel_vectors(m);
  return SubspaceBasis::span(m.cols(), vectors);
}

std::size_t kernel_dim(const ExactMatrix& m) { return m.cols() - rank(m); }

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  }
  // Relations sum_i c_i a_i - sum_j d_j b_j = 0; the a-part of each relation
  // is a vector of the intersection.
  std::vector<SparseVector> generators;
  generators.reserve(a.dim() + b.dim());
  for (const auto& v : a.vectors()) generators.push_back(v);
  for (const auto& v : b.vectors()) generators.push_back(v.scaled(-1));
  ExactMatrix relations = ExactMatrix(a.ambient_dim(), std::move(generators)).transpose();
  std::vector<SparseVector> meet;
  for (const auto& rel : kernel_vectors(relations)) {
    SparseVector v;
    for (const auto& e : rel) {
      if (e.index >= a.dim()) break;
      v = v + a.vectors()[e.index].scaled(e.value);
    }
    meet.push_back(std::move(v));
  }
  return SubspaceBasis::span(a.ambient_dim(), meet);
}

SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("sum: ambient dimension mismatch");
  }
  std::vector<SparseVector> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::span(a.ambient_dim(), all);
}

SubspaceBasis annihilator(const SubspaceBasis& s) { return kernel(s.as_matrix()); }

std::vector<std::optional<SparseVector>> solve_many(const ExactMatrix& m,
                                                    std::span<const SparseVector> rhs) {
  const std::size_t n = m.cols();
  std::vector<std::vector<SparseVector::Entry>> extra(m.rows());
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    for (const auto& e : rhs[j]) {
      if (e.index >= m.rows()) throw std::invalid_argument("solve_many: rhs length mismatch");
      extra[e.index].push_back({n + j, e.value});
    }
  }
  EchelonBuilder builder(n + rhs.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<SparseVector::Entry> entries = m.row(r).entries();
    entries.insert(entries.end(), extra[r].begin(), extra[r].end());
    builder.add(SparseVector(std::move(entries)));
  }
  auto reduced = builder.finish();

  std::vector<char> consistent(rhs.size(), 1);
  std::vector<std::vector<SparseVector::Entry>> solutions(rhs.size());
  for (std::size_t k = 0; k < reduced.rows.size(); ++k) {
    const auto& row = reduced.rows[k];
    if (reduced.pivots[k] >= n) {
      for (const auto& e : row) consistent[e.index - n] = 0;
      continue;
    }
    for (const auto& e : row) {
      if (e.index >= n) solutions[e.index - n].push_back({reduced.pivots[k], e.value});
    }
  }
  std::vector<std::optional<SparseVector>> out(rhs.size());
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    if (consistent[j]) out[j] = SparseVector(std::move(solutions[j]));
  }
  return out;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  if (rank(m) != m.cols()) throw std::domain_error("inverse: singular matrix");
  std::vector<SparseVector> units;
  for (std::size_t i = 0; i < m.rows(); ++i) units.push_back(SparseVector::unit(i));
  auto columns = solve_many(m, units);
  std::vector<SparseVector> cols;
  for (auto& c : columns) cols.push_back(std::move(*c));
  return ExactMatrix(m.rows(), std::move(cols)).transpose();
}

}  // namespace kdirac
