#include "cyw/integer.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cyw {

namespace {

bool mpz_fits_small(const mpz_class& v) {
  if (!v.fits_slong_p()) return false;
  return v.get_si() != std::numeric_limits<int64_t>::min();
}

}  // namespace

Integer::Integer(unsigned long v) {
  if (v <= static_cast<unsigned long>(std::numeric_limits<int64_t>::max())) {
    small_ = static_cast<int64_t>(v);
  } else {
    big_ = new mpz_class(v);
  }
}

Integer::Integer(std::string_view decimal) {
  mpz_class v;
  if (v.set_str(std::string(decimal), 10) != 0) {
    throw std::invalid_argument("Integer: not a decimal integer: " + std::string(decimal));
  }
  assign(v);
}

void Integer::assign(const mpz_class& v) {
  if (mpz_fits_small(v)) {
    release();
    small_ = v.get_si();
  } else if (big_) {
    *big_ = v;
  } else {
    big_ = new mpz_class(v);
  }
}

int Integer::compare_slow(const Integer& a, const Integer& b) noexcept {
  if (a.big_ && b.big_) return cmp(*a.big_, *b.big_);
  if (a.big_) return cmp(*a.big_, static_cast<long>(b.small_));
  return -cmp(*b.big_, static_cast<long>(a.small_));
}

int64_t Integer::to_int64_checked() const {
  if (big_) throw std::overflow_error("Integer does not fit in 64 bits: " + to_string());
  return small_;
}

Integer Integer::tdiv(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer division by zero");
  if (a.is_small() && b.is_small()) return Integer(static_cast<long long>(a.small_ / b.small_));
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer Integer::fdiv(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer division by zero");
  if (a.is_small() && b.is_small()) {
    int64_t q = a.small_ / b.small_;
    int64_t r = a.small_ % b.small_;
    if (r != 0 && ((r < 0) != (b.small_ < 0))) --q;
    return Integer(static_cast<long long>(q));
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("Integer division by zero");
  if (a.is_small() && b.is_small()) return Integer(static_cast<long long>(a.small_ / b.small_));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer Integer::fmod(const Integer& a, const Integer& b) {
  return a - fdiv(a, b) * b;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    // |small_| <= INT64_MAX, so std::gcd cannot overflow.
    return Integer(static_cast<long long>(std::gcd(a.small_, b.small_)));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer Integer::lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return (divexact(a, gcd(a, b)) * b).abs();
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str(10);
  return std::to_string(small_);
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<int64_t>{}(small_);
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  const mpz_srcptr p = big_->get_mpz_t();
  const int n = std::abs(p->_mp_size);
  for (int i = 0; i < n; ++i) h ^= std::hash<mp_limb_t>{}(p->_mp_d[i]) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(p->_mp_size < 0);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace cyw
