#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace spingeo {

/// Exact rational number on 64-bit numerator/denominator, always normalized
/// (gcd 1, denominator positive). Magnitudes in this project stay tiny, so
/// no arbitrary precision is needed.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_ = 0;
  long long den_ = 1;
};

/// Gaussian rational a + b*i with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(r) {}
  GaussianRational(long long r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(r), im(i) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  /// i^k for any integer k.
  static GaussianRational i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {Rational(1), Rational(0)};
      case 1: return {Rational(0), Rational(1)};
      case 2: return {Rational(-1), Rational(0)};
      default: return {Rational(0), Rational(-1)};
    }
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  std::string str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "i";
    return re.str() + (im.num() < 0 ? "" : "+") + im.str() + "i";
  }
};

}  // namespace spingeo
