#ifndef KDIRAC_RATIONAL_HPP
#define KDIRAC_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace kdirac {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are stored
/// inline and combined in 128-bit arithmetic; anything larger is promoted to
/// an immutable GMP rational and demoted again as soon as it fits. The
/// representation is canonical (positive denominator, gcd 1, inline whenever
/// possible), so equality never needs cross-multiplication.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  /// Inline numerator and denominator; throw std::overflow_error for big values.
  [[nodiscard]] std::int64_t num() const;
  [[nodiscard]] std::int64_t den() const;

  [[nodiscard]] bool is_big() const noexcept { return big_ != nullptr; }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] int sign() const noexcept { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  [[nodiscard]] mpq_class to_mpq() const;

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
  friend bool operator<(const Rational& lhs, const Rational& rhs) noexcept;
  friend bool operator>(const Rational& lhs, const Rational& rhs) noexcept { return rhs < lhs; }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) noexcept { return !(rhs < lhs); }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) noexcept { return !(lhs < rhs); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& value);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace kdirac

#endif  // KDIRAC_RATIONAL_HPP
