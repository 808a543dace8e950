#include "kdirac/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdirac {

SparseVector::SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().index == e.index) {
      merged.back().value += e.value;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.value.is_zero(); });
  entries_ = std::move(merged);
}

SparseVector SparseVector::from_dense(std::span<const GaussRational> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) v.push_back(i, dense[i]);
  return v;
}

SparseVector SparseVector::unit(std::size_t index, GaussRational value) {
  SparseVector v;
  v.push_back(index, std::move(value));
  return v;
}

std::vector<GaussRational> SparseVector::to_dense(std::size_t size) const {
  std::vector<GaussRational> out(size);
  for (const auto& e : entries_) out.at(e.index) = e.value;
  return out;
}

GaussRational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return {};
}

void SparseVector::push_back(std::size_t index, GaussRational value) {
  if (value.is_zero()) return;
  if (!entries_.empty() && entries_.back().index >= index) {
    throw std::invalid_argument("SparseVector::push_back: indices must increase");
  }
  entries_.push_back({index, std::move(value)});
}

SparseVector SparseVector::scaled(const GaussRational& factor) const {
  SparseVector out;
  if (factor.is_zero()) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({e.index, e.value * factor});
  return out;
}

namespace {

SparseVector combine(const SparseVector& a, const SparseVector& b, bool subtract) {
  SparseVector out;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->index < ib->index)) {
      out.push_back(ia->index, ia->value);
      ++ia;
    } else if (ia == a.end() || ib->index < ia->index) {
      out.push_back(ib->index, subtract ? -ib->value : ib->value);
      ++ib;
    } else {
      out.push_back(ia->index, subtract ? ia->value - ib->value : ia->value + ib->value);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

SparseVector operator+(const SparseVector& a, const SparseVector& b) { return combine(a, b, false); }
SparseVector operator-(const SparseVector& a, const SparseVector& b) { return combine(a, b, true); }

GaussRational dot(const SparseVector& a, const SparseVector& b) {
  GaussRational sum;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->index < ib->index) {
      ++ia;
    } else if (ib->index < ia->index) {
      ++ib;
    } else {
      sum += ia->value * ib->value;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

ExactMatrix::ExactMatrix(std::size_t cols, std::vector<SparseVector> rows)
    : cols_(cols), data_(std::move(rows)) {
  for (const auto& r : data_) check_row_(r);
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back(i, 1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(
    std::initializer_list<std::initializer_list<GaussRational>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<SparseVector> data;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
    data.push_back(SparseVector::from_dense(std::span<const GaussRational>(r.begin(), r.size())));
  }
  return ExactMatrix(cols, std::move(data));
}

void ExactMatrix::check_row_(const SparseVector& row) const {
  if (!row.empty() && row.entries().back().index >= cols_) {
    throw std::out_of_range("ExactMatrix: column index out of range");
  }
}

GaussRational ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("ExactMatrix::at: column out of range");
  return data_.at(r).at(c);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const GaussRational& value) {
  if (c >= cols_) throw std::out_of_range("ExactMatrix::set: column out of range");
  auto& row = data_.at(r);
  std::vector<SparseVector::Entry> entries = row.entries();
  std::erase_if(entries, [c](const auto& e) { return e.index == c; });
  entries.push_back({c, value});
  row = SparseVector(std::move(entries));
}

void ExactMatrix::set_row(std::size_t r, SparseVector row) {
  check_row_(row);
  data_.at(r) = std::move(row);
}

void ExactMatrix::append_row(SparseVector row) {
  check_row_(row);
  data_.push_back(std::move(row));
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& r) { return r.empty(); });
}

ExactMatrix ExactMatrix::transpose() const {
  std::vector<std::vector<SparseVector::Entry>> cols(cols_);
  for (std::size_t r = 0; r < data_.size(); ++r) {
    for (const auto& e : data_[r]) cols[e.index].push_back({r, e.value});
  }
  std::vector<SparseVector> rows;
  rows.reserve(cols_);
  for (auto& c : cols) rows.emplace_back(std::move(c));
  return ExactMatrix(data_.size(), std::move(rows));
}

SparseVector ExactMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (std::size_t r = 0; r < data_.size(); ++r) out.push_back(r, dot(data_[r], v));
  return out;
}

std::vector<GaussRational> ExactMatrix::apply(std::span<const GaussRational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: size mismatch");
  std::vector<GaussRational> out(data_.size());
  for (std::size_t r = 0; r < data_.size(); ++r) {
    for (const auto& e : data_[r]) out[r] += e.value * v[e.index];
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows()) throw std::invalid_argument("ExactMatrix: product shape mismatch");
  ExactMatrix out(a.rows(), b.cols_);
  std::vector<GaussRational> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), GaussRational{});
    for (const auto& e : a.data_[r]) {
      for (const auto& f : b.data_[e.index]) acc[f.index] += e.value * f.value;
    }
    out.data_[r] = SparseVector::from_dense(acc);
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols_ != b.cols_) {
    throw std::invalid_argument("ExactMatrix: sum shape mismatch");
  }
  ExactMatrix out(a.rows(), a.cols_);
  for (std::size_t r = 0; r < a.rows(); ++r) out.data_[r] = a.data_[r] + b.data_[r];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  return a + GaussRational{-1} * b;
}

ExactMatrix operator*(const GaussRational& factor, const ExactMatrix& m) {
  ExactMatrix out(m.rows(), m.cols_);
  for (std::size_t r = 0; r < m.rows(); ++r) out.data_[r] = m.data_[r].scaled(factor);
  return out;
}

}  // namespace kdirac
