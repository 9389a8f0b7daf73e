#include "diamcensus/lemma.hpp"

namespace diamcensus {

BigRatio f_quadratic(const std::vector<BigRatio>& x) {
  const std::size_t d = x.size();
  if (d == 0) throw domain_error("f_quadratic: empty vector");
  const BigRatio half(1, 2);
  BigRatio f;
  for (std::size_t i = 0; i < d; ++i) f += half * x[i] * x[i];
  for (std::size_t i = 0; i + 1 < d; ++i) f += x[i] * x[i + 1];
  return f;
}

Lemma1Report check_lemma1(const std::vector<BigRatio>& x) {
  const std::size_t d = x.size();
  if (d < 3)
    throw domain_error("check_lemma1: need d >= 3 entries, got " +
                       std::to_string(d));
  for (const BigRatio& xi : x)
    if (xi.is_negative()) throw domain_error("check_lemma1: negative entry");

  Lemma1Report r;
  for (const BigRatio& xi : x) r.s += xi;
  // m over interior centers i with 1 < i < d (1-based), i.e. windows
  // (x[i-1], x[i], x[i+1]) in 0-based index range [0, d-3] start.
  bool first = true;
  for (std::size_t i = 1; i + 1 < d; ++i) {
    BigRatio window = x[i - 1] + x[i] + x[i + 1];
    if (first || window > r.m) r.m = window;
    first = false;
  }
  r.f = f_quadratic(x);
  const BigRatio half(1, 2);
  const BigRatio sm = r.s - r.m;
  r.bound_split = half * r.m * r.m + half * sm * sm;
  r.bound_product = BigRatio(3, 4) * r.m * r.s;
  r.holds_split = r.f <= r.bound_split;
  r.holds_product = r.f <= r.bound_product;
  r.holds = r.holds_split && r.holds_product;
  return r;
}

ExponentIdentityReport check_exponent_identity(const LayerProfile& p) {
  p.validate();
  const int d = p.depth();
  ExponentIdentityReport r;
  // Left side in integer terms, via binomial on each layer size.
  BigCount lhs_bins;
  for (int size : p.sizes)
    lhs_bins += binomial(static_cast<unsigned long>(size), 2);
  BigRatio lhs(lhs_bins);
  for (int i = 0; i + 1 < d; ++i)
    lhs += BigRatio(static_cast<long>(p.sizes[static_cast<std::size_t>(i)]) *
                        p.sizes[static_cast<std::size_t>(i + 1)] -
                    1);
  r.lhs = lhs;

  std::vector<BigRatio> x;
  x.reserve(static_cast<std::size_t>(d));
  for (int size : p.sizes) x.emplace_back(static_cast<long>(size - 1));
  BigRatio s;
  for (const BigRatio& xi : x) s += xi;
  // For d = 1 the two end corrections hit the same coordinate and are both
  // subtracted.
  r.rhs = f_quadratic(x) + BigRatio(5, 2) * s - x.front() - x.back();
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace diamcensus
