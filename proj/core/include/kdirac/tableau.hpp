#ifndef KDIRAC_TABLEAU_HPP
#define KDIRAC_TABLEAU_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdirac/linalg.hpp"

namespace kdirac {

/// A tableau A inside V* (x) W, given by a canonical basis. Coordinates are
/// V*-index major, W-index minor: (a, w) -> a * dim_W + w.
struct Tableau {
  std::size_t dim_V = 0;
  std::size_t dim_W = 0;
  SubspaceBasis basis;

  static Tableau make(std::size_t dim_V, std::size_t dim_W, SubspaceBasis basis);
  static Tableau full(std::size_t dim_V, std::size_t dim_W);
  static Tableau zero(std::size_t dim_V, std::size_t dim_W);

  [[nodiscard]] std::size_t dim() const noexcept { return basis.dim(); }
};

/// A basis u^1..u^n of V*, stored as the rows of `change` (in the original
/// coordinates), together with the dual basis of V as the columns of `dual`.
struct OrderedBasis {
  ExactMatrix change;
  ExactMatrix dual;
  std::string label;

  static OrderedBasis identity(std::size_t n, std::string label = "identity");
  /// Throws std::domain_error if `change` is singular.
  static OrderedBasis from_change(ExactMatrix change, std::string label);
  /// Builds the ordering whose dual basis vectors are the columns of `dual`.
  static OrderedBasis from_dual_vectors(ExactMatrix dual, std::string label);
};

struct CartanReport {
  std::size_t dim_A = 0;
  std::vector<std::size_t> filtration_dims;  // dim A_k, k = 1..dim_V
  std::vector<std::size_t> characters;       // s_1..s_{dim_V}
  std::size_t rhs = 0;                       // sum k s_k
  std::size_t dim_prolongation = 0;
  bool involutive = false;
  std::string ordering_label;
};

/// Multisets of size `degree` drawn from `n` indices, ranked in the
/// lexicographic order of their sorted tuples. Coordinates of the symmetric
/// power S^degree V* (x) W are (rank, w) -> rank * dim_W + w.
class SymmetricIndex {
 public:
  SymmetricIndex(std::size_t n, std::size_t degree);

  [[nodiscard]] std::size_t size() const noexcept { return tuples_.size(); }
  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] const std::vector<std::size_t>& tuple(std::size_t rank) const { return tuples_.at(rank); }
  /// Rank of the multiset of `indices` (any order).
  [[nodiscard]] std::size_t rank(std::span<const std::size_t> indices) const;

 private:
  std::size_t n_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> tuples_;
  std::vector<std::size_t> lookup_;  // dense n^degree table
};

/// The prolongations A^(0) = A, A^(1), ..., A^(levels) of a tableau, each as
/// a subspace of S^(l+1) V* (x) W, plus the dimension of A^(levels+1).
///
/// A^(l) = S^(l+1) V* (x) W  intersected with  S^l V* (x) A, computed as the
/// kernel of the annihilator of A applied in the last slot.
class SymbolTower {
 public:
  SymbolTower(Tableau base, std::size_t levels);

  [[nodiscard]] const Tableau& base() const noexcept { return base_; }
  [[nodiscard]] std::size_t levels() const noexcept { return levels_.size() - 1; }
  [[nodiscard]] const SubspaceBasis& level(std::size_t l) const { return levels_.at(l); }
  [[nodiscard]] std::size_t level_dim(std::size_t l) const;
  [[nodiscard]] const SymmetricIndex& index(std::size_t l) const { return indices_.at(l); }

  /// A^(l) presented as a tableau in V* (x) A^(l-1) (l >= 1); A itself for l = 0.
  [[nodiscard]] Tableau lifted(std::size_t l) const;

  /// Constraint matrix whose kernel is A^(l), l >= 1.
  [[nodiscard]] ExactMatrix constraints(std::size_t l) const;

 private:
  Tableau base_;
  SubspaceBasis annihilator_;
  std::vector<SymmetricIndex> indices_;
  std::vector<SubspaceBasis> levels_;
  std::size_t top_dim_ = 0;
};

struct Prolongation {
  SubspaceBasis raw;  // inside S^2 V* (x) W, SymmetricIndex(dim_V, 2) coordinates
  Tableau lifted;     // inside V* (x) A
};

Prolongation prolong(const Tableau& t);

/// dim A^(1) without materializing a basis.
std::size_t prolongation_dim(const Tableau& t);

/// dim A_k = dim (A intersected with <u^(k+1), ..., u^n> (x) W), k = 1..n.
std::vector<std::size_t> filtration_dims(const Tableau& t, const OrderedBasis& ob);

/// Characters from dim A and the filtration.
std::vector<std::size_t> characters_from_filtration(std::size_t dim_A,
                                                    const std::vector<std::size_t>& filtration);

/// Runs Cartan's test. Throws std::logic_error if the Cartan bound
/// dim A^(1) <= sum k s_k is violated.
CartanReport cartan_test(const Tableau& t, const OrderedBasis& ob);

/// Cartan's test for the tableau at `level` of a tower; the prolongation is
/// read off the next level of the tower.
CartanReport cartan_test(const SymbolTower& tower, std::size_t level, const OrderedBasis& ob);

struct OrderingStrategy {
  enum class Kind { given, greedy, random };
  Kind kind = Kind::greedy;
  std::uint64_t seed = 0;
  std::optional<OrderedBasis> supplied;

  static OrderingStrategy given(std::optional<OrderedBasis> ob = std::nullopt);
  static OrderingStrategy greedy();
  static OrderingStrategy random(std::uint64_t seed);
};

OrderedBasis search_ordering(const Tableau& t, const OrderingStrategy& strategy);

/// Deterministic invertible matrix with entries in [-3, 3].
ExactMatrix random_change_matrix(std::size_t n, std::uint64_t seed);

/// dim H^{0,2}(A) = dim Lambda^2 V* (x) W - dim delta(V* (x) A).
std::size_t h02_dim(const Tableau& t);

}  // namespace kdirac

#endif  // KDIRAC_TABLEAU_HPP
