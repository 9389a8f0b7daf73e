#include "diamcensus/formulas.hpp"

#include <string>

namespace diamcensus {

namespace {

// s = n-d-1 extras, t = 2d-3-n free slots for the doubleton layers.
void check_snake_window(unsigned long n, unsigned long d) {
  if (d + 1 > n)
    throw domain_error("snake counts: need d <= n-1, got n=" + std::to_string(n) +
                       " d=" + std::to_string(d));
  if (2 * d < 3 + n)
    throw domain_error("snake counts: need 2d-3-n >= 0, got n=" + std::to_string(n) +
                       " d=" + std::to_string(d));
}

}  // namespace

BigCount h1_count(unsigned long n, unsigned long d) {
  if (d < 3 || d >= n)
    throw domain_error("h1_count: need 3 <= d < n, got n=" + std::to_string(n) +
                       " d=" + std::to_string(d));
  const unsigned long sigma = n - d + 1;  // block size, >= 2
  BigCount product = BigCount(d - 2) * falling_factorial(n, d - 1) *
                     pow_count(3, sigma) * pow2_choose2(sigma);
  // C(sigma,2) >= 1 makes the 2^C factor even, so halving is exact even for
  // odd d.
  return product.div_exact(2);
}

BigCount h2_count(unsigned long n, unsigned long d) {
  if (3 * d <= 2 * n || d >= n)
    throw domain_error("h2_count: need 2n/3 < d < n, got n=" + std::to_string(n) +
                       " d=" + std::to_string(d));
  const unsigned long s = n - d - 1;
  BigCount product =
      falling_factorial(n, d + 1) * pow_count(d, s) * pow_count(3, s);
  // n_(d+1) has d+1 >= 2 consecutive factors, hence is even.
  return product.div_exact(2);
}

BigCount snake_procedure_count(unsigned long n, unsigned long d) {
  check_snake_window(n, d);
  const unsigned long s = n - d - 1;
  const unsigned long t = 2 * d - 3 - n;
  // (t)_(s) carries a zero factor as soon as s exceeds t.
  if (s > t) return 0;
  return falling_factorial(n, d + 1) * falling_factorial(t, s) * pow_count(3, s);
}

BigCount snake_partition_count(unsigned long n, unsigned long d) {
  check_snake_window(n, d);
  const unsigned long s = n - d - 1;
  const unsigned long t = 2 * d - 3 - n;
  BigCount pair_picks = 1;
  for (unsigned long j = 0; j < s; ++j) pair_picks *= binomial(n - 2 * j, 2);
  return pair_picks * factorial(n - 2 * s) * binomial(t, s);
}

BoundPair block_bound(unsigned long s) {
  if (s < 2) throw domain_error("block_bound: need s >= 2, got " + std::to_string(s));
  BoundPair b;
  b.upper = pow_count(3, s) * pow2_choose2(s);
  b.lower_factor = std::nullopt;
  b.lower_note =
      "lower bound has shape upper * (1 - c*(9/10)^s) for an absolute "
      "constant c that is not computable from the statement";
  return b;
}

DiagnosticRatio error_ratio(unsigned long n, unsigned long d, Scheme which) {
  if (d >= n)
    throw domain_error("error_ratio: need d < n, got n=" + std::to_string(n) +
                       " d=" + std::to_string(d));
  const unsigned long s = n - d - 1;
  BigRatio value;
  switch (which) {
    case Scheme::thm1: {
      if (d < 3) throw domain_error("error_ratio: thm1 scheme needs d >= 3");
      // d^2 * s^4 * (11/12)^s
      value = BigRatio(BigCount(d) * BigCount(d)) *
              BigRatio(pow_count(s, 4)) * pow_ratio(BigRatio(11, 12), s);
      break;
    }
    case Scheme::thm2: {
      if (d < 1) throw domain_error("error_ratio: thm2 scheme needs d >= 1");
      // s^2 * (64/3)^s / d
      value = BigRatio(BigCount(s) * BigCount(s)) *
              pow_ratio(BigRatio(64, 3), s) / BigRatio(BigCount(d));
      break;
    }
  }
  return DiagnosticRatio{value, value.to_decimal()};
}

}  // namespace diamcensus
