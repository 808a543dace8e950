#ifndef KDIRAC_EUCLIDEAN_HPP
#define KDIRAC_EUCLIDEAN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kdirac/clifford.hpp"
#include "kdirac/poly.hpp"
#include "kdirac/tableau.hpp"

namespace kdirac {

/// The k-Dirac system d_i = sum_alpha gamma_alpha d/dx_{alpha i} on spinor-valued
/// functions of an n x k matrix variable. Variables are row major:
/// x_{alpha i} has index (alpha - 1) k + (i - 1).
struct EuclideanSystem {
  RepParams params;
  CliffordRep rep;
  VarsPtr vars;
  std::vector<DiffOp> ops;

  /// Index of x_{alpha i}, both 1-based.
  [[nodiscard]] std::size_t var(std::size_t alpha, std::size_t i) const;
};

EuclideanSystem build_euclidean(std::size_t n, std::size_t k);

/// Name of the matrix variable x_{alpha i}.
std::string matrix_var_name(char letter, std::size_t row, std::size_t col);

/// First-order symbol at the origin: {sigma in V* (x) W : sum_t M_t sigma(var_t) = 0 per op},
/// using the constant parts of the coefficients.
Tableau symbol_tableau(std::span<const DiffOp> ops, std::size_t num_vars, std::size_t s);

Tableau euclidean_tableau(const EuclideanSystem& sys);

/// A named basis b_1..b_N of V (the columns of `vectors`); the induced
/// ordering of V* is its dual basis.
struct PaperOrdering {
  std::string label;
  ExactMatrix vectors;

  [[nodiscard]] OrderedBasis ordered_basis() const;
};

/// Row-major coordinate ordering, last row last.
PaperOrdering euclidean_level0_ordering(const EuclideanSystem& sys);

/// The t-chart ordering for k = 2. Throws std::invalid_argument otherwise.
PaperOrdering euclidean_level1_ordering(const EuclideanSystem& sys);

struct ComponentDims {
  std::size_t sym = 0;
  std::size_t skew = 0;
};

/// Dimensions of A^(1) intersected with S^2E (x) S^2F (x) Sp and with
/// Lambda^2E (x) Lambda^2F (x) Sp.
ComponentDims quadratic_component_dims(const EuclideanSystem& sys);

/// s [C(r+2n-4, 2n-4) + C(r+2n-5, 2n-4)]; k must be 2 and r >= 2.
std::uint64_t initial_dim_formula(std::size_t n, std::size_t k, std::size_t r);

std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Linear chart x = B t for k = 2, with the operators rewritten in t.
struct TChart {
  VarsPtr t_vars;
  ExactMatrix basis;    // B: x-index by t-index
  ExactMatrix inverse;  // B^{-1}: t-index by x-index
  std::vector<DiffOp> ops;
};

TChart t_chart(const EuclideanSystem& sys);

/// The unique monogenic Psi = g1 + t_{2n-2} g2 + g in t-coordinates, where no
/// monomial of g has the form m or t_{2n-2} m with m in t_1 .. t_{2n-3} only:
/// each has degree >= 2 in t_{2n-2}, t_{2n-1}, t_{2n}, or contains t_{2n-1} or t_{2n}. Throws
/// std::invalid_argument on malformed data and std::logic_error if the
/// extension is not unique or does not exist.
SpinorPoly extend_from_initial_data(const EuclideanSystem& sys, const TChart& chart, const SpinorPoly& g1,
                                    const SpinorPoly& g2);

/// Restricts psi to x_{1i} = 0 and checks [d~_i, d~_j] psi = 0 for all i < j,
/// with d~_i = sum_{alpha >= 2} gamma_alpha d/dx_{alpha i}. Throws
/// std::invalid_argument if psi is not monogenic.
bool restriction_commutator_check(const EuclideanSystem& sys, const SpinorPoly& psi);

/// True iff every op annihilates p.
bool is_solution(std::span<const DiffOp> ops, const SpinorPoly& p);

}  // namespace kdirac

#endif  // KDIRAC_EUCLIDEAN_HPP
