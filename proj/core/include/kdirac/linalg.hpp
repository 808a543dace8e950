#ifndef KDIRAC_LINALG_HPP
#define KDIRAC_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kdirac/matrix.hpp"

namespace kdirac {

/// Incremental exact row reduction over Gaussian rationals.
///
/// Rows are reduced against the current pivot set as they arrive (sparse
/// scatter/gather with a column heap), so rank queries are available at any
/// time. `finish()` back-substitutes into the unique reduced row-echelon form.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols);

  /// Reduces `row` against the current pivots; returns true if it was
  /// independent (and has become a new pivot row).
  bool add(const SparseVector& row);

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

  struct Reduced {
    std::vector<SparseVector> rows;  // sorted by pivot column
    std::vector<std::size_t> pivots;
  };
  /// Reduced row-echelon form of everything added so far.
  [[nodiscard]] Reduced finish() const;

 private:
  SparseVector reduce_(const SparseVector& row);

  std::size_t cols_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<long> pivot_row_;
  std::vector<GaussRational> acc_;
  std::vector<char> touched_;
};

struct RrefResult {
  std::size_t rank = 0;
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
std::size_t rank(std::size_t cols, std::span<const SparseVector> rows);

/// A subspace of an ambient coordinate space, held in canonical form: the
/// nonzero rows of the reduced row-echelon form of any spanning set, pivot
/// columns ascending. Equal subspaces therefore have identical bases.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  /// Canonical basis of the span of `vectors` (dependent input is fine).
  static SubspaceBasis span(std::size_t ambient_dim, std::span<const SparseVector> vectors);
  static SubspaceBasis full(std::size_t ambient_dim);

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const noexcept { return vectors_.size(); }
  [[nodiscard]] const std::vector<SparseVector>& vectors() const noexcept { return vectors_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  [[nodiscard]] bool contains(const SparseVector& v) const;
  [[nodiscard]] bool contains(const SubspaceBasis& other) const;

  /// Coordinates of `v` in this basis; std::nullopt if v is not in the span.
  [[nodiscard]] std::optional<std::vector<GaussRational>> coordinates(const SparseVector& v) const;

  /// Coordinates read off the pivot columns, without a membership check.
  [[nodiscard]] SparseVector pivot_coordinates(const SparseVector& v) const;

  [[nodiscard]] ExactMatrix as_matrix() const { return ExactMatrix(ambient_dim_, vectors_); }

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<SparseVector> vectors_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}.
SubspaceBasis kernel(const ExactMatrix& m);

/// Dimension of the kernel without building a basis.
std::size_t kernel_dim(const ExactMatrix& m);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);

/// Covectors vanishing on `s`, as a subspace of the dual coordinate space.
SubspaceBasis annihilator(const SubspaceBasis& s);

/// Solves m x = b for every right-hand side with a single elimination.
/// Each result is the particular solution with all free variables zero, or
/// std::nullopt when that system is inconsistent.
std::vector<std::optional<SparseVector>> solve_many(const ExactMatrix& m,
                                                    std::span<const SparseVector> rhs);

/// Inverse of a square matrix; throws std::domain_error if singular.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace kdirac

#endif  // KDIRAC_LINALG_HPP
