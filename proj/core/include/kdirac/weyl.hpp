#ifndef KDIRAC_WEYL_HPP
#define KDIRAC_WEYL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kdirac/rational.hpp"

namespace kdirac {

using Weight = std::vector<Rational>;

/// Root systems in the standard orthonormal coordinates: A_r lives in
/// R^(r+1), B_m and D_m in R^m.
struct RootSystem {
  enum class Family { A, B, D };
  Family family = Family::A;
  std::size_t rank = 0;
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;

  static RootSystem make(Family family, std::size_t rank);
  [[nodiscard]] std::size_t ambient_dim() const;
  /// Half the sum of the positive roots.
  [[nodiscard]] Weight rho() const;
};

Rational inner(const Weight& a, const Weight& b);

/// Weyl dimension formula. Throws std::invalid_argument if lambda has the
/// wrong length, is not dominant, or gives a non-integral dimension.
std::uint64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

/// (3 + 1/2, 1/2, ..., 1/2) with the last coordinate negated when `flip`.
Weight spin_weight(std::size_t m, std::vector<std::int64_t> integral_part, bool flip = false);

struct ModuleRow {
  std::string label;
  std::uint64_t dim = 0;
};

/// Irreducible sl(2) + so(n) modules in the cubic monogenic spinors for k = 2.
std::vector<ModuleRow> module_table(std::size_t n);

}  // namespace kdirac

#endif  // KDIRAC_WEYL_HPP
