#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyw {

// Arbitrary-precision integer with an inline int64 representation.
// Values in (INT64_MIN, INT64_MAX] are kept small; anything else lives in a
// heap-allocated mpz. Arithmetic on two small values uses checked builtins and
// promotes on overflow, so results are always exact.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(long v) { assign(static_cast<int64_t>(v)); }  // NOLINT
  Integer(long long v) { assign(static_cast<int64_t>(v)); }  // NOLINT
  Integer(unsigned long v);   // NOLINT
  Integer(unsigned v) noexcept : small_(v) {}  // NOLINT
  explicit Integer(const mpz_class& v) { assign(v); }
  explicit Integer(std::string_view decimal);

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = new mpz_class(*o.big_);
  }
  Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) {
    o.big_ = nullptr;
    o.small_ = 0;
  }
  Integer& operator=(const Integer& o) {
    if (this == &o) return *this;
    if (o.big_) {
      if (big_)
        *big_ = *o.big_;
      else
        big_ = new mpz_class(*o.big_);
    } else {
      release();
      small_ = o.small_;
    }
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    if (this == &o) return *this;
    release();
    small_ = o.small_;
    big_ = o.big_;
    o.big_ = nullptr;
    o.small_ = 0;
    return *this;
  }
  ~Integer() { release(); }

  bool is_small() const noexcept { return big_ == nullptr; }
  bool fits_int64() const noexcept { return big_ == nullptr; }
  // Precondition: fits_int64().
  int64_t to_int64() const noexcept { return small_; }
  int64_t to_int64_checked() const;
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }

  int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
  }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return compare_slow(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = compare_slow(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // Division rounding toward zero; b != 0.
  static Integer tdiv(const Integer& a, const Integer& b);
  // Division rounding toward -infinity; b != 0.
  static Integer fdiv(const Integer& a, const Integer& b);
  // Division that is known to be exact; b != 0.
  static Integer divexact(const Integer& a, const Integer& b);
  // Remainder with the sign of b (floor convention); b != 0.
  static Integer fmod(const Integer& a, const Integer& b);
  static Integer gcd(const Integer& a, const Integer& b);
  static Integer lcm(const Integer& a, const Integer& b);
  Integer abs() const { return sign() < 0 ? -*this : *this; }

  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  void assign(int64_t v) {
    if (v == std::numeric_limits<int64_t>::min()) {
      big_ = new mpz_class(static_cast<long>(v));
    } else {
      small_ = v;
    }
  }
  void assign(const mpz_class& v);
  void release() noexcept {
    delete big_;
    big_ = nullptr;
  }
  static int compare_slow(const Integer& a, const Integer& b) noexcept;

  int64_t small_ = 0;
  mpz_class* big_ = nullptr;
};

inline Integer Integer::operator-() const {
  if (!big_) return Integer(static_cast<long long>(-small_));  // small_ != INT64_MIN
  Integer r;
  r.assign(mpz_class(-*big_));
  return r;
}

inline Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r) && r != std::numeric_limits<int64_t>::min()) {
      small_ = r;
      return *this;
    }
  }
  mpz_class r = to_mpz() + o.to_mpz();
  release();
  assign(r);
  return *this;
}

inline Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r) && r != std::numeric_limits<int64_t>::min()) {
      small_ = r;
      return *this;
    }
  }
  mpz_class r = to_mpz() - o.to_mpz();
  release();
  assign(r);
  return *this;
}

inline Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r) && r != std::numeric_limits<int64_t>::min()) {
      small_ = r;
      return *this;
    }
  }
  mpz_class r = to_mpz() * o.to_mpz();
  release();
  assign(r);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace cyw

template <>
struct std::hash<cyw::Integer> {
  std::size_t operator()(const cyw::Integer& v) const noexcept { return v.hash(); }
};
