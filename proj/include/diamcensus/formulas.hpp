#pragma once

#include <optional>
#include <string>

#include "diamcensus/exact.hpp"
#include "diamcensus/profile.hpp"

namespace diamcensus {

// Closed-form counts and bounds for the two extremal families.
//
// h1 targets the long-range regime: graphs made of two induced paths joined
// through a diameter-3 block on the n-d+1 leftover vertices. h2 targets the
// short-range regime: snake-like graphs built from near-path layer
// partitions. Both are exact integer formulas; callers compare them against
// census or oracle counts.

// ((d-2)/2) * n_(d-1) * 3^(n-d+1) * 2^C(n-d+1,2).  Requires 3 <= d < n.
BigCount h1_count(unsigned long n, unsigned long d);

// (1/2) * n_(d+1) * d^(n-d-1) * 3^(n-d-1).  Requires 2n/3 < d < n.
BigCount h2_count(unsigned long n, unsigned long d);

// Number of outcomes of the snake-building procedure:
// n_(d+1) * (2d-3-n)_(n-d-1) * 3^(n-d-1). Zero when no valid layout exists.
// Requires n-d-1 >= 0 and 2d-3-n >= 0.
BigCount snake_procedure_count(unsigned long n, unsigned long d);

// Number of snake layer partitions:
// C(n,2)*C(n-2,2)*...*(s factors) * (n-2s)! * C(2d-3-n, s) with s = n-d-1.
// Same preconditions as snake_procedure_count; procedure = partition * 6^s.
BigCount snake_partition_count(unsigned long n, unsigned long d);

// Upper/lower bound pair for a counting class. The lower side may be known
// only up to an unknown universal constant, in which case lower_factor is
// empty and lower_note describes the shape of the bound.
struct BoundPair {
  std::optional<BigRatio> lower_factor;  // multiplies `upper` when concrete
  std::string lower_note;
  BigCount upper;
};

// Bounds for the distance-3 block class on s interior vertices:
// upper = 3^s * 2^C(s,2); lower = upper * (1 - c*(9/10)^s), c not concrete.
// Requires s >= 2.
BoundPair block_bound(unsigned long s);

// Relative error magnitude of the matching count approximation, as an exact
// rational plus a 12-digit decimal rendering. thm1: d^2 s^4 (11/12)^s with
// s = n-d-1 (requires 3 <= d < n); thm2: s^2 (64/3)^s / d (requires
// 1 <= d < n).
struct DiagnosticRatio {
  BigRatio exact;
  std::string decimal;
};

DiagnosticRatio error_ratio(unsigned long n, unsigned long d, Scheme which);

}  // namespace diamcensus
