#include "kdirac/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace kdirac {
namespace {

using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  // Inline values are never INT64_MIN.
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide v) {
  return v > static_cast<wide>(std::numeric_limits<std::int64_t>::min()) &&
         v <= static_cast<wide>(std::numeric_limits<std::int64_t>::max());
}

mpz_class to_mpz(wide v) {
  const bool negative = v < 0;
  const unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class out(static_cast<unsigned long>(mag >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL);
  return negative ? mpz_class(-out) : out;
}

bool fits_inline(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z.get_si() != std::numeric_limits<std::int64_t>::min();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational{};
  wide g = wide_gcd(num, den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) return from_mpq(mpq_class(to_mpz(num), to_mpz(den)));
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  if (fits_inline(value.get_num()) && fits_inline(value.get_den())) {
    r.num_ = value.get_num().get_si();
    r.den_ = value.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(value));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::int64_t Rational::num() const {
  if (big_) throw std::overflow_error("Rational::num: value exceeds 64 bits");
  return num_;
}

std::int64_t Rational::den() const {
  if (big_) throw std::overflow_error("Rational::den: value exceeds 64 bits");
  return den_;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  Rational r;
  if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (big_ || rhs.big_) return *this = from_mpq(to_mpq() + rhs.to_mpq());
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t out;
    if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<std::int64_t>::min()) {
      num_ = out;
      return *this;
    }
  }
  std::int64_t g = gcd64(den_, rhs.den_);
  wide n = static_cast<wide>(num_) * (rhs.den_ / g) + static_cast<wide>(rhs.num_) * (den_ / g);
  wide d = static_cast<wide>(den_ / g) * rhs.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Rational{};
  if (big_ || rhs.big_) return *this = from_mpq(to_mpq() * rhs.to_mpq());
  if (den_ == 1 && rhs.den_ == 1) {
    std::int64_t out;
    if (!__builtin_mul_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<std::int64_t>::min()) {
      num_ = out;
      return *this;
    }
  }
  std::int64_t g1 = gcd64(num_, rhs.den_);
  std::int64_t g2 = gcd64(rhs.num_, den_);
  wide n = static_cast<wide>(num_ / g1) * (rhs.num_ / g2);
  wide d = static_cast<wide>(den_ / g2) * (rhs.den_ / g1);
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

Rational operator-(const Rational& value) {
  if (value.big_) return Rational::from_mpq(-*value.big_);
  Rational r;
  r.num_ = -value.num_;
  r.den_ = value.den_;
  return r;
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
  if (lhs.big_ || rhs.big_) return lhs.big_ && rhs.big_ && *lhs.big_ == *rhs.big_;
  return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
}

bool operator<(const Rational& lhs, const Rational& rhs) noexcept {
  if (lhs.big_ || rhs.big_) return lhs.to_mpq() < rhs.to_mpq();
  return static_cast<wide>(lhs.num_) * rhs.den_ < static_cast<wide>(rhs.num_) * lhs.den_;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace kdirac
