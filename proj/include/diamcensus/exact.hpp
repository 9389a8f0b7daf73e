#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "diamcensus/errors.hpp"

namespace diamcensus {

// Exact nonnegative integer count.
//
// Thin strong type over a GMP integer: construction and subtraction enforce
// non-negativity, serialization is always a plain decimal string (counts are
// far beyond 64 bits in normal use and must never round-trip through floats
// or JSON numbers).
class BigCount {
 public:
  BigCount() : v_(0) {}
  BigCount(unsigned long v) : v_(v) {}
  explicit BigCount(mpz_class v) : v_(std::move(v)) {
    if (v_ < 0) throw domain_error("BigCount: negative value");
  }

  static BigCount from_decimal(const std::string& s);

  const mpz_class& raw() const { return v_; }
  std::string to_decimal() const { return v_.get_str(); }

  bool is_zero() const { return v_ == 0; }
  bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }

  // Throws if the value does not fit.
  std::uint64_t to_u64() const;

  BigCount& operator+=(const BigCount& o) {
    v_ += o.v_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    v_ *= o.v_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  // Subtraction is checked: counts never go negative.
  friend BigCount operator-(const BigCount& a, const BigCount& b) {
    if (a.v_ < b.v_) throw domain_error("BigCount: subtraction underflow");
    return BigCount(mpz_class(a.v_ - b.v_));
  }

  // Exact division: d must divide the value.
  BigCount div_exact(const BigCount& d) const;

  friend bool operator==(const BigCount& a, const BigCount& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigCount& a, const BigCount& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigCount& a, const BigCount& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigCount& a, const BigCount& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigCount& a, const BigCount& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigCount& a, const BigCount& b) { return a.v_ >= b.v_; }

 private:
  mpz_class v_;
};

// Exact rational, always kept in lowest terms with positive denominator.
class BigRatio {
 public:
  BigRatio() : v_(0) {}
  BigRatio(long v) : v_(v) {}
  BigRatio(const BigCount& c) : v_(c.raw()) {}
  BigRatio(const BigCount& num, const BigCount& den);
  explicit BigRatio(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_negative() const { return v_ < 0; }

  // Requires an integral, nonnegative value.
  BigCount to_count() const;

  // Decimal rendering with `significant` digits, round half away from zero.
  // For reports only; exact values travel as num/den decimal strings.
  std::string to_decimal(int significant = 12) const;

  std::string to_fraction_string() const { return v_.get_str(); }

  BigRatio& operator+=(const BigRatio& o) {
    v_ += o.v_;
    return *this;
  }
  BigRatio& operator-=(const BigRatio& o) {
    v_ -= o.v_;
    return *this;
  }
  BigRatio& operator*=(const BigRatio& o) {
    v_ *= o.v_;
    return *this;
  }
  BigRatio& operator/=(const BigRatio& o);

  friend BigRatio operator+(BigRatio a, const BigRatio& b) { return a += b; }
  friend BigRatio operator-(BigRatio a, const BigRatio& b) { return a -= b; }
  friend BigRatio operator*(BigRatio a, const BigRatio& b) { return a *= b; }
  friend BigRatio operator/(BigRatio a, const BigRatio& b) { return a /= b; }

  friend bool operator==(const BigRatio& a, const BigRatio& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRatio& a, const BigRatio& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRatio& a, const BigRatio& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRatio& a, const BigRatio& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRatio& a, const BigRatio& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRatio& a, const BigRatio& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

// n! as an exact count.
BigCount factorial(unsigned long n);

// n * (n-1) * ... * (n-k+1), the product of k descending factors.
// k == n+1 is permitted (the last factor is zero); k > n+1 would introduce
// negative factors and is rejected with a domain error.
BigCount falling_factorial(unsigned long n, unsigned long k);

// C(n, k); zero when k > n.
BigCount binomial(unsigned long n, unsigned long k);

// n! / (parts[0]! * parts[1]! * ...); parts must sum to n.
BigCount multinomial(unsigned long n, const std::vector<unsigned long>& parts);

// 2^e.
BigCount pow2(unsigned long e);

// 2^C(n,2), the number of graphs on n labeled vertices.
BigCount pow2_choose2(unsigned long n);

// base^e.
BigCount pow_count(const BigCount& base, unsigned long e);
BigRatio pow_ratio(const BigRatio& base, unsigned long e);

}  // namespace diamcensus
