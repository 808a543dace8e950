#ifndef KDIRAC_POLY_HPP
#define KDIRAC_POLY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdirac/linalg.hpp"
#include "kdirac/matrix.hpp"

namespace kdirac {

using Exponents = std::vector<unsigned>;

/// Ordered polynomial variables with positive weights (the weighted degree
/// of a monomial is sum e_i * weight_i).
struct VariableSet {
  std::vector<std::string> names;
  std::vector<unsigned> weights;

  static std::shared_ptr<const VariableSet> uniform(std::vector<std::string> names);
  static std::shared_ptr<const VariableSet> weighted(std::vector<std::string> names,
                                                     std::vector<unsigned> weights);

  [[nodiscard]] std::size_t size() const noexcept { return names.size(); }
  [[nodiscard]] std::size_t index_of(const std::string& name) const;
  [[nodiscard]] unsigned weighted_degree(const Exponents& e) const;
  [[nodiscard]] Exponents unit(std::size_t var, unsigned power = 1) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

/// All exponent vectors of the given weighted degree, in lexicographically
/// descending order (x1^2 before x1 x2 before x2^2).
std::vector<Exponents> monomial_basis(const VariableSet& vars, unsigned weighted_degree);

/// Scalar polynomial; used for operator coefficients and y-polynomials.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}

  static Poly constant(VarsPtr vars, GaussRational c);
  static Poly monomial(VarsPtr vars, Exponents e, GaussRational c = 1);

  [[nodiscard]] const VarsPtr& vars() const noexcept { return vars_; }
  [[nodiscard]] const std::map<Exponents, GaussRational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& e, const GaussRational& c);
  /// Weighted degree if homogeneous, -1 for the zero polynomial, -2 otherwise.
  [[nodiscard]] long weighted_degree() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  VarsPtr vars_;
  std::map<Exponents, GaussRational> terms_;
};

/// Spinor-valued polynomial: coefficient per (monomial, spinor component).
class SpinorPoly {
 public:
  struct Key {
    Exponents exps;
    std::size_t comp;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  SpinorPoly() = default;
  SpinorPoly(VarsPtr vars, std::size_t spinor_dim) : vars_(std::move(vars)), spinor_dim_(spinor_dim) {}

  /// Monomial times a constant spinor.
  static SpinorPoly monomial(VarsPtr vars, std::size_t spinor_dim, const Exponents& e,
                             std::span<const GaussRational> spinor);

  [[nodiscard]] const VarsPtr& vars() const noexcept { return vars_; }
  [[nodiscard]] std::size_t spinor_dim() const noexcept { return spinor_dim_; }
  [[nodiscard]] const std::map<Key, GaussRational>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& e, std::size_t comp, const GaussRational& c);
  [[nodiscard]] GaussRational coeff(const Exponents& e, std::size_t comp) const;

  /// True iff every stored monomial has this weighted degree.
  [[nodiscard]] bool is_weighted_homogeneous(unsigned degree) const;
  /// Largest total exponent over the listed variables among stored monomials.
  [[nodiscard]] unsigned max_degree_in(std::span<const std::size_t> vars) const;

  [[nodiscard]] SpinorPoly derivative(std::size_t var) const;
  [[nodiscard]] SpinorPoly times(const Poly& scalar) const;
  [[nodiscard]] SpinorPoly apply_matrix(const ExactMatrix& m) const;
  /// Sets the listed variables to zero.
  [[nodiscard]] SpinorPoly restrict_to_zero(std::span<const std::size_t> vars) const;
  /// Substitutes old variable i by sum_j forms(i, j) * new_j.
  [[nodiscard]] SpinorPoly substitute_linear(VarsPtr new_vars, const ExactMatrix& forms) const;
  /// Same polynomial over a larger variable set whose first variables are ours.
  [[nodiscard]] SpinorPoly embed(VarsPtr bigger) const;

  friend SpinorPoly operator+(const SpinorPoly& a, const SpinorPoly& b);
  friend SpinorPoly operator-(const SpinorPoly& a, const SpinorPoly& b);
  friend SpinorPoly operator*(const GaussRational& c, const SpinorPoly& p);
  friend bool operator==(const SpinorPoly& a, const SpinorPoly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string() const;

 private:
  void check_compatible_(const SpinorPoly& other) const;

  VarsPtr vars_;
  std::size_t spinor_dim_ = 0;
  std::map<Key, GaussRational> terms_;
};

/// First-order operator sum_t matrix_t o (coeff_t * d/d var_t) acting on
/// spinor-valued polynomials.
struct DiffOp {
  struct Term {
    Poly coeff;
    std::size_t var;
    ExactMatrix matrix;
  };
  std::vector<Term> terms;

  /// Appends a term; zero matrices and zero coefficients are dropped.
  void add(Poly coeff, std::size_t var, ExactMatrix matrix);
};

SpinorPoly apply_op(const DiffOp& op, const SpinorPoly& p);

/// Change in weighted degree produced by the operator, if every term shifts
/// the degree by the same amount; std::nullopt otherwise.
std::optional<long> weighted_shift(const DiffOp& op, const VariableSet& vars);

/// Matrix of the stacked operators on weighted-degree-d polynomials.
/// Rows are (op, target monomial, spinor component); columns are
/// (source monomial, spinor component), monomials in monomial_basis order.
ExactMatrix constraint_matrix(std::span<const DiffOp> ops, const VariableSet& vars, std::size_t s,
                              unsigned weighted_degree);

/// Canonical basis of weighted-homogeneous polynomial solutions of all ops.
/// Throws std::invalid_argument if some op does not lower the weighted degree
/// uniformly.
SubspaceBasis solution_space(std::span<const DiffOp> ops, const VariableSet& vars, std::size_t s,
                             unsigned weighted_degree);

/// Reads a coordinate vector of solution_space back as a polynomial.
SpinorPoly to_spinor_poly(VarsPtr vars, std::size_t s, unsigned weighted_degree,
                          const SparseVector& coords);

/// Coordinate vector of a weighted-homogeneous polynomial in the
/// (monomial, component) layout of solution_space.
SparseVector to_coordinates(const SpinorPoly& p, unsigned weighted_degree);

}  // namespace kdirac

#endif  // KDIRAC_POLY_HPP
