#include "kdirac/gauss_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace kdirac {

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
  // Most entries are purely real or purely imaginary.
  if (rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    im_ *= rhs.re_;
    return *this;
  }
  if (rhs.re_.is_zero()) {
    Rational re = -(im_ * rhs.im_);
    im_ = re_ * rhs.im_;
    re_ = re;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = re;
  im_ = im;
  return *this;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRational: inverse of zero");
  if (im_.is_zero()) return {re_.inverse(), Rational{}};
  if (re_.is_zero()) return {Rational{}, -im_.inverse()};
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_ == Rational{1}) {
    imag = "i";
  } else if (im_ == Rational{-1}) {
    imag = "-i";
  } else {
    imag = im_.to_string() + "i";
  }
  if (re_.is_zero()) return imag;
  if (im_.sign() > 0) return re_.to_string() + "+" + imag;
  return re_.to_string() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& value) {
  return os << value.to_string();
}

}  // namespace kdirac
