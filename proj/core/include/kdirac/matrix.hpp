#ifndef KDIRAC_MATRIX_HPP
#define KDIRAC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "kdirac/gauss_rational.hpp"

namespace kdirac {

/// Sparse coordinate vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  struct Entry {
    std::size_t index;
    GaussRational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVector() = default;
  explicit SparseVector(std::vector<Entry> entries);

  static SparseVector from_dense(std::span<const GaussRational> dense);
  static SparseVector unit(std::size_t index, GaussRational value = 1);

  [[nodiscard]] std::vector<GaussRational> to_dense(std::size_t size) const;

  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t nnz() const noexcept { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
  [[nodiscard]] auto end() const noexcept { return entries_.end(); }

  /// Value at `index` (zero when absent).
  [[nodiscard]] GaussRational at(std::size_t index) const;

  /// Appends an entry past the current last index; zero values are dropped.
  void push_back(std::size_t index, GaussRational value);

  [[nodiscard]] SparseVector scaled(const GaussRational& factor) const;

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Bilinear pairing sum_i a_i b_i (no conjugation).
GaussRational dot(const SparseVector& a, const SparseVector& b);

/// Row-sparse exact matrix. Absent entries are zero and no zero is stored.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t cols, std::vector<SparseVector> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<GaussRational>> rows);

  [[nodiscard]] std::size_t rows() const noexcept { return data_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] GaussRational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const GaussRational& value);
  [[nodiscard]] const SparseVector& row(std::size_t r) const { return data_.at(r); }
  void set_row(std::size_t r, SparseVector row);
  void append_row(SparseVector row);
  [[nodiscard]] const std::vector<SparseVector>& row_data() const noexcept { return data_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] ExactMatrix transpose() const;
  [[nodiscard]] SparseVector apply(const SparseVector& v) const;
  [[nodiscard]] std::vector<GaussRational> apply(std::span<const GaussRational> v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussRational& factor, const ExactMatrix& m);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  void check_row_(const SparseVector& row) const;

  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

}  // namespace kdirac

#endif  // KDIRAC_MATRIX_HPP
