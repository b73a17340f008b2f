#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "cyw/integer.hpp"

namespace cyw {

// Exact rational number, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}            // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v) {}           // NOLINT
  Rational(long long v) : num_(v) {}      // NOLINT
  Rational(Integer v) : num_(std::move(v)) {}  // NOLINT
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_.is_one(); }

  Rational operator-() const { return Rational(-num_, den_, kReduced); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  // "p/q", or "p" when integral.
  std::string to_string() const;

 private:
  struct ReducedTag {};
  static constexpr ReducedTag kReduced{};
  Rational(Integer num, Integer den, ReducedTag) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace cyw
