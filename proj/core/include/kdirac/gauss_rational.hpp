#ifndef KDIRAC_GAUSS_RATIONAL_HPP
#define KDIRAC_GAUSS_RATIONAL_HPP

#include <iosfwd>
#include <string>

#include "kdirac/rational.hpp"

namespace kdirac {

/// Exact scalar re + im*i with rational parts. The field for every matrix in
/// the library; spinor generators only ever need entries in {0, ±1, ±i}.
class GaussRational {
 public:
  constexpr GaussRational() noexcept = default;
  constexpr GaussRational(std::int64_t re) noexcept : re_(re) {}  // NOLINT
  GaussRational(Rational re) noexcept : re_(re) {}                 // NOLINT
  GaussRational(Rational re, Rational im) noexcept : re_(re), im_(im) {}

  static GaussRational i() { return {Rational{0}, Rational{1}}; }

  [[nodiscard]] const Rational& re() const noexcept { return re_; }
  [[nodiscard]] const Rational& im() const noexcept { return im_; }

  [[nodiscard]] bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const noexcept { return im_.is_zero(); }

  [[nodiscard]] GaussRational conj() const { return {re_, -im_}; }
  [[nodiscard]] GaussRational inverse() const;
  [[nodiscard]] std::string to_string() const;

  GaussRational& operator+=(const GaussRational& rhs);
  GaussRational& operator-=(const GaussRational& rhs);
  GaussRational& operator*=(const GaussRational& rhs);
  GaussRational& operator/=(const GaussRational& rhs) { return *this *= rhs.inverse(); }

  friend GaussRational operator+(GaussRational lhs, const GaussRational& rhs) { return lhs += rhs; }
  friend GaussRational operator-(GaussRational lhs, const GaussRational& rhs) { return lhs -= rhs; }
  friend GaussRational operator*(GaussRational lhs, const GaussRational& rhs) { return lhs *= rhs; }
  friend GaussRational operator/(GaussRational lhs, const GaussRational& rhs) { return lhs /= rhs; }
  friend GaussRational operator-(const GaussRational& v) { return {-v.re_, -v.im_}; }

  friend bool operator==(const GaussRational&, const GaussRational&) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& value);

 private:
  Rational re_;
  Rational im_;
};

}  // namespace kdirac

#endif  // KDIRAC_GAUSS_RATIONAL_HPP
