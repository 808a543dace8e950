#include "kdirac/clifford.hpp"

#include <stdexcept>

#include "kdirac/linalg.hpp"

namespace kdirac {
namespace {

ExactMatrix pauli(int which) {
  const GaussRational i = GaussRational::i();
  switch (which) {
    case 1:
      return ExactMatrix::from_rows({{0, 1}, {1, 0}});
    case 2:
      return ExactMatrix::from_rows({{0, -i}, {i, 0}});
    default:
      return ExactMatrix::from_rows({{1, 0}, {0, -1}});
  }
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t rb = 0; rb < b.rows(); ++rb) {
      SparseVector row;
      for (const auto& ea : a.row(ra)) {
        for (const auto& eb : b.row(rb)) row.push_back(ea.index * b.cols() + eb.index, ea.value * eb.value);
      }
      out.set_row(ra * b.rows() + rb, std::move(row));
    }
  }
  return out;
}

// sigma3 x ... x sigma3 (j copies) x middle x I x ... x I, m factors in total.
ExactMatrix chain(std::size_t m, std::size_t j, const ExactMatrix& middle) {
  ExactMatrix out = ExactMatrix::identity(1);
  for (std::size_t f = 0; f < m; ++f) {
    if (f < j) {
      out = kron(out, pauli(3));
    } else if (f == j) {
      out = kron(out, middle);
    } else {
      out = kron(out, ExactMatrix::identity(2));
    }
  }
  return out;
}

}  // namespace

RepParams RepParams::make(std::size_t n, std::size_t k) {
  if (n < 3) throw std::invalid_argument("RepParams: n must be at least 3");
  if (k < 2) throw std::invalid_argument("RepParams: k must be at least 2");
  RepParams p;
  p.n = n;
  p.k = k;
  p.m = n / 2;
  p.s = std::size_t{1} << p.m;
  return p;
}

CliffordRep build_spinor_rep(std::size_t n) {
  if (n < 3) throw std::invalid_argument("build_spinor_rep: n must be at least 3");
  const std::size_t m = n / 2;
  CliffordRep rep;
  rep.n = n;
  rep.s = std::size_t{1} << m;
  const GaussRational i = GaussRational::i();
  // Hermitian generators squaring to +I, then multiplied by i.
  for (std::size_t j = 0; j < m; ++j) {
    rep.gamma.push_back(i * chain(m, j, pauli(1)));
    rep.gamma.push_back(i * chain(m, j, pauli(2)));
  }
  if (n % 2 == 1) {
    ExactMatrix last = ExactMatrix::identity(1);
    for (std::size_t f = 0; f < m; ++f) last = kron(last, pauli(3));
    rep.gamma.push_back(i * last);
  } else {
    // i^m gamma_1 ... gamma_n squares to the identity.
    ExactMatrix product = ExactMatrix::identity(rep.s);
    for (const auto& g : rep.gamma) product = product * g;
    GaussRational phase = 1;
    for (std::size_t f = 0; f < m; ++f) phase *= i;
    rep.chirality = phase * product;
  }
  return rep;
}

std::vector<GaussRational> clifford_apply(const CliffordRep& rep, std::size_t alpha,
                                          const std::vector<GaussRational>& v) {
  if (alpha < 1 || alpha > rep.n) throw std::out_of_range("clifford_apply: generator index out of range");
  if (v.size() != rep.s) throw std::invalid_argument("clifford_apply: spinor length mismatch");
  return rep.gamma[alpha - 1].apply(v);
}

bool satisfies_clifford_relation(const CliffordRep& rep) {
  const ExactMatrix id = ExactMatrix::identity(rep.s);
  for (std::size_t a = 0; a < rep.n; ++a) {
    for (std::size_t b = a; b < rep.n; ++b) {
      ExactMatrix anti = rep.gamma[a] * rep.gamma[b] + rep.gamma[b] * rep.gamma[a];
      ExactMatrix expected = a == b ? GaussRational{-2} * id : ExactMatrix(rep.s, rep.s);
      if (!(anti == expected)) return false;
    }
  }
  return true;
}

ChiralSplit chirality_split(const CliffordRep& rep) {
  if (!rep.chirality) throw std::invalid_argument("chirality_split: n is odd");
  const ExactMatrix id = ExactMatrix::identity(rep.s);
  ChiralSplit out;
  out.plus = kernel_dim(*rep.chirality - id);
  out.minus = kernel_dim(*rep.chirality + id);
  return out;
}

}  // namespace kdirac
