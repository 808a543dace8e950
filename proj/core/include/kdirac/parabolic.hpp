#ifndef KDIRAC_PARABOLIC_HPP
#define KDIRAC_PARABOLIC_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kdirac/euclidean.hpp"

namespace kdirac {

/// The parabolic k-Dirac system on M(n, k) x A(k). Variables are the nk
/// matrix entries x_{alpha i} (weight 1, row major) followed by y_{rs}, r < s
/// (weight 2, lexicographic).
///
/// L_{alpha i} = d/dx_{alpha i} - 1/2 sum_j x_{alpha j} d_{ij}, with
/// d_{rs} = d/dy_{rs} for r < s and d_{rs} = -d_{sr}, so that
/// [L_{alpha i}, L_{beta j}] = delta_{alpha beta} d_{ij}.
struct ParabolicSystem {
  RepParams params;
  CliffordRep rep;
  VarsPtr vars;
  std::vector<DiffOp> lfields;      // index (alpha - 1) k + (i - 1)
  std::vector<DiffOp> ops;          // D_i = sum_alpha gamma_alpha L_{alpha i}
  std::vector<DiffOp> euclid_ops;   // the flat operators in the same variables

  [[nodiscard]] std::size_t x_index(std::size_t alpha, std::size_t i) const;
  [[nodiscard]] std::size_t y_index(std::size_t r, std::size_t s) const;
  [[nodiscard]] std::size_t num_x() const noexcept { return params.n * params.k; }
  [[nodiscard]] std::size_t num_y() const noexcept { return params.k * (params.k - 1) / 2; }
  /// Indices of the y variables.
  [[nodiscard]] std::vector<std::size_t> y_vars() const;
};

ParabolicSystem build_parabolic(std::size_t n, std::size_t k);

/// d_{ij} as an operator with identity spinor matrix (empty for i = j).
DiffOp y_derivative(const ParabolicSystem& sys, std::size_t i, std::size_t j);

/// Checks [L_a, L_b] = delta d_{ij} on every monomial of weighted degree <= max_degree.
bool bracket_identity_holds(const ParabolicSystem& sys, unsigned max_degree);

Tableau parabolic_tableau(const ParabolicSystem& sys);

/// x rows 1..n-1, then the y directions, then the last row.
PaperOrdering parabolic_level0_ordering(const ParabolicSystem& sys);

/// e_1 ^ e_2 first, then the Euclidean t-chart. k = 2 only.
PaperOrdering parabolic_level1_ordering(const ParabolicSystem& sys);

/// dim of the subspace of `basis` (in S^d V* (x) W coordinates of `index`)
/// living on multisets with exactly `y_count` y directions, for each y_count.
std::vector<std::size_t> graded_dims(const SubspaceBasis& basis, const SymmetricIndex& index,
                                     std::size_t dim_W, std::size_t num_x);

struct ParabolicDecomposition {
  std::vector<std::size_t> level1;  // by number of y directions: 0, 1, 2
  std::vector<std::size_t> level2;  // 0, 1, 2, 3
};

/// Grading of A^(1) and A^(2) by y directions. k = 2 only.
ParabolicDecomposition parabolic_prolongation_decomposition(const ParabolicSystem& sys);

SubspaceBasis weighted_monogenic_space(const ParabolicSystem& sys, unsigned r);

/// dim of the y-independent part of a weighted-degree-r solution space.
std::size_t y_independent_dim(const ParabolicSystem& sys, const SubspaceBasis& space, unsigned r);

/// For each Euclidean monogenic psi (in the Euclidean or the parabolic
/// variables) returns Psi = g psi + h with D Psi = 0, where h has y-degree
/// below deg g. Throws std::invalid_argument on bad input and
/// std::logic_error if some lift does not exist.
std::vector<SpinorPoly> lift_many(const ParabolicSystem& sys, std::span<const SpinorPoly> psis, const Poly& g);

SpinorPoly lift_check(const ParabolicSystem& sys, const SpinorPoly& psi, const Poly& g);

struct ParabolicCartan {
  CartanReport level0;
  CartanReport level1;
};

/// Cartan's test on the tableau and on its first prolongation. A `given`
/// strategy without a supplied basis selects the paper orderings (greedy
/// at level 1 when k != 2).
ParabolicCartan parabolic_cartan_suite(const ParabolicSystem& sys, const OrderingStrategy& strategy);

}  // namespace kdirac

#endif  // KDIRAC_PARABOLIC_HPP
