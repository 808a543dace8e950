#ifndef KDIRAC_CLIFFORD_HPP
#define KDIRAC_CLIFFORD_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "kdirac/matrix.hpp"

namespace kdirac {

/// Dimensions of a k-Dirac problem: n rows (Clifford generators), k slots,
/// m = floor(n/2) and spinor dimension s = 2^m.
struct RepParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t s = 0;

  /// Validates n >= 3 and k >= 2; throws std::invalid_argument otherwise.
  static RepParams make(std::size_t n, std::size_t k);
};

/// Complex spinor module of the Clifford algebra of Euclidean R^n.
///
/// gamma[a] (0-based) satisfies gamma[a] gamma[b] + gamma[b] gamma[a] = -2 delta_ab I.
/// For even n the chirality operator anticommutes with every generator and
/// squares to the identity.
struct CliffordRep {
  std::size_t n = 0;
  std::size_t s = 0;
  std::vector<ExactMatrix> gamma;
  std::optional<ExactMatrix> chirality;
};

/// Deterministic tensor-product construction with entries in {0, ±1, ±i}.
CliffordRep build_spinor_rep(std::size_t n);

/// gamma[alpha] v with a 1-based generator index.
std::vector<GaussRational> clifford_apply(const CliffordRep& rep, std::size_t alpha,
                                          const std::vector<GaussRational>& v);

/// True iff every pair satisfies the defining anticommutation relation.
bool satisfies_clifford_relation(const CliffordRep& rep);

/// Dimensions of the +1 and -1 eigenspaces of the chirality operator.
struct ChiralSplit {
  std::size_t plus = 0;
  std::size_t minus = 0;
};
ChiralSplit chirality_split(const CliffordRep& rep);

}  // namespace kdirac

#endif  // KDIRAC_CLIFFORD_HPP
