#include "kdirac/weyl.hpp"

#include <stdexcept>

namespace kdirac {
namespace {

Weight unit_combo(std::size_t dim, std::size_t i, std::int64_t ci, std::size_t j, std::int64_t cj) {
  Weight w(dim);
  w[i] = w[i] + Rational(ci);
  if (cj != 0) w[j] = w[j] + Rational(cj);
  return w;
}

std::uint64_t sl2_dim(std::int64_t highest) {
  return weyl_dim(RootSystem::make(RootSystem::Family::A, 1), Weight{Rational(highest), Rational(0)});
}

// Sum over the so(n) irreducibles with the given highest weight tensored
// with the full spinor module.
std::uint64_t so_with_spinor(std::size_t n, std::vector<std::int64_t> integral_part) {
  const std::size_t m = n / 2;
  if (n % 2 == 1) {
    return weyl_dim(RootSystem::make(RootSystem::Family::B, m), spin_weight(m, integral_part));
  }
  const RootSystem d = RootSystem::make(RootSystem::Family::D, m);
  return weyl_dim(d, spin_weight(m, integral_part)) + weyl_dim(d, spin_weight(m, integral_part, true));
}

}  // namespace

RootSystem RootSystem::make(Family family, std::size_t rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  switch (family) {
    case Family::A: {
      if (rank < 1) throw std::invalid_argument("RootSystem: A_r needs r >= 1");
      const std::size_t dim = rank + 1;
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) rs.positive_roots.push_back(unit_combo(dim, i, 1, j, -1));
      }
      for (std::size_t i = 0; i + 1 < dim; ++i) rs.simple_roots.push_back(unit_combo(dim, i, 1, i + 1, -1));
      break;
    }
    case Family::B:
    case Family::D: {
      const std::size_t m = rank;
      if (m < 1 || (family == Family::D && m < 2)) throw std::invalid_argument("RootSystem: rank too small");
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          rs.positive_roots.push_back(unit_combo(m, i, 1, j, -1));
          rs.positive_roots.push_back(unit_combo(m, i, 1, j, 1));
        }
        if (family == Family::B) rs.positive_roots.push_back(unit_combo(m, i, 1, i, 0));
      }
      for (std::size_t i = 0; i + 1 < m; ++i) rs.simple_roots.push_back(unit_combo(m, i, 1, i + 1, -1));
      if (family == Family::B) {
        rs.simple_roots.push_back(unit_combo(m, m - 1, 1, m - 1, 0));
      } else {
        rs.simple_roots.push_back(unit_combo(m, m - 2, 1, m - 1, 1));
      }
      break;
    }
  }
  return rs;
}

std::size_t RootSystem::ambient_dim() const {
  return family == Family::A ? rank + 1 : rank;
}

Weight RootSystem::rho() const {
  Weight r(ambient_dim());
  for (const auto& a : positive_roots) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + a[i] * Rational(1, 2);
  }
  return r;
}

Rational inner(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: length mismatch");
  Rational out;
  for (std::size_t i = 0; i < a.size(); ++i) out = out + a[i] * b[i];
  return out;
}

std::uint64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.ambient_dim()) throw std::invalid_argument("weyl_dim: weight has the wrong length");
  for (const auto& a : rs.simple_roots) {
    if (inner(lambda, a) < Rational(0)) throw std::invalid_argument("weyl_dim: weight is not dominant");
  }
  const Weight rho = rs.rho();
  Weight shifted(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) shifted[i] = lambda[i] + rho[i];
  Rational ratio(1);
  for (const auto& a : rs.positive_roots) ratio = ratio * inner(shifted, a) / inner(rho, a);
  if (ratio.den() != 1 || ratio.num() <= 0) throw std::invalid_argument("weyl_dim: weight is not integral");
  return static_cast<std::uint64_t>(ratio.num());
}

Weight spin_weight(std::size_t m, std::vector<std::int64_t> integral_part, bool flip) {
  if (integral_part.size() > m) throw std::invalid_argument("spin_weight: too many coordinates");
  Weight w(m, Rational(1, 2));
  for (std::size_t i = 0; i < integral_part.size(); ++i) w[i] = w[i] + Rational(integral_part[i]);
  if (flip) w[m - 1] = -w[m - 1];
  return w;
}

std::vector<ModuleRow> module_table(std::size_t n) {
  if (n < 3) throw std::invalid_argument("module_table: n must be at least 3");
  const std::uint64_t s3e = sl2_dim(3);
  const std::uint64_t e = sl2_dim(1);  // E [x] Lambda^2 E for k = 2
  std::vector<ModuleRow> rows;
  rows.push_back({"S3E (x) S3_0F [x] Sp", s3e * so_with_spinor(n, {3})});
  if (n == 4) {
    const std::uint64_t self_dual = sl2_dim(1) * sl2_dim(4) + sl2_dim(4) * sl2_dim(1);
    rows.push_back({"E [x] L2E (x) (C2 (x) S4C2 + S4C2 (x) C2)", e * self_dual});
  } else if (n >= 5) {
    rows.push_back({"E [x] L2E (x) L2F [x] F [x] Sp", e * so_with_spinor(n, {2, 1})});
  }
  return rows;
}

}  // namespace kdirac
