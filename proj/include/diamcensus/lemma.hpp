#pragma once

#include <string>
#include <vector>

#include "diamcensus/exact.hpp"
#include "diamcensus/profile.hpp"

namespace diamcensus {

// The interaction functional on extras vectors x = (x_1, ..., x_d):
//   f(x) = sum_i x_i^2 / 2 + sum_{i<d} x_i * x_{i+1}.
// Computed exactly over the rationals so the bound checks below are exact.
BigRatio f_quadratic(const std::vector<BigRatio>& x);

// Report for the two quadratic bounds on f.  With s = sum x_i and
// m = max over adjacent windows (x_{i-1} + x_i + x_{i+1}, clipped at the
// ends), both of these hold for nonnegative entries:
//   split:   f <= m^2 / 2 + (s - m)^2 / 2
//   product: f <= (3/4) * m * s
struct Lemma1Report {
  BigRatio s;
  BigRatio m;
  BigRatio f;
  BigRatio bound_split;
  BigRatio bound_product;
  bool holds_split = false;
  bool holds_product = false;
  bool holds = false;  // both
};

// Evaluates f and both bounds on an extras vector with d >= 3 entries,
// each >= 0.  Throws domain_error on bad input; never throws on a bound
// violation, the caller inspects `holds`.
Lemma1Report check_lemma1(const std::vector<BigRatio>& x);

// Exponent bookkeeping identity behind the rearranged census term.  For a
// layer profile with sizes n_1..n_d (n_0 = 1 implicit) and extras
// x_i = n_i - 1:
//   sum_i C(n_i, 2) + sum_{i<d} (n_i * n_{i+1} - 1)
//     = f(x) + 5s/2 - x_1 - x_d          (d >= 2)
// where s = sum x_i.  For d = 1 the right side is f(x) + 5s/2 - 2*x_1.
struct ExponentIdentityReport {
  BigRatio lhs;
  BigRatio rhs;
  bool holds = false;
};

ExponentIdentityReport check_exponent_identity(const LayerProfile& p);

}  // namespace diamcensus
