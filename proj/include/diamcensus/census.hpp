#pragma once

#include <map>
#include <string>

#include "diamcensus/exact.hpp"
#include "diamcensus/profile.hpp"

namespace diamcensus {

// Exact census of (root vertex, graph) pairs grouped by eccentricity, driven
// by layer profiles: summing the per-profile counts over all compositions of
// n-1 into d positive layers counts rooted graphs whose root has
// eccentricity exactly d. Everything here is exact integer arithmetic.

// Number of graphs realizing a fixed layer assignment:
// 2^(sum C(n_i,2)) * prod_{i<d} (2^(n_i) - 1)^(n_{i+1}).
BigCount layer_class_count(const LayerProfile& p);

// Per-profile contribution to the rooted census: the number of ways to label
// the layers times layer_class_count.
BigCount profile_term(unsigned long n, const LayerProfile& p);

// Count of pairs (x0, G) with ecc_G(x0) = d over all graphs on n labeled
// vertices, computed by dynamic programming over (remaining vertices,
// previous layer size). Requires n >= 2 and 1 <= d <= n-1.
BigCount eccentric_pair_count(unsigned long n, unsigned long d);

// Same value by explicit summation over all compositions; `workers` splits
// the composition stream (result is identical for any worker count).
BigCount eccentric_pair_count_direct(unsigned long n, unsigned long d, int workers = 1);

// Relaxed per-profile bound that factors the label choices through the
// surplus vertices: n_(d+1) * multinomial(s; n_i - 1 ...) *
// 2^(sum C(n_i,2) + sum (n_i n_{i+1} - 1)).  Always >= profile_term.
BigCount rearranged_term(unsigned long n, const LayerProfile& p);

// Case labels for the two decomposition schemes. Labels are assigned by an
// ordered first-match predicate chain; profiles with no surplus (s = 0) get
// their own label and are never merged into a case sum.
enum class CaseLabel {
  C1,
  C2,
  C31,
  C32,
  C33,
  C41,
  C42,
  C43,
  TSmall,
  TFullEndheavy,
  TFullAdjacent,
  H2Shaped,
  Degenerate,
};

const char* to_string(CaseLabel label);

// Assigns the case label for `p` under the given scheme. thm1 requires
// d >= 3. Throws internal_error if no predicate matches (impossible by
// construction; the throw guards the exhaustiveness argument).
CaseLabel classify_profile(const LayerProfile& p, Scheme scheme);

// Splits eccentric_pair_count(n, d) by case label: enumerates every
// composition, classifies, and accumulates profile terms.
std::map<CaseLabel, BigCount> case_decomposition(unsigned long n, unsigned long d,
                                                 Scheme scheme);

// Independent computation of the same decomposition: coarse case masses come
// from label-aware dynamic programs, subcase masses from constructive shape
// enumeration. Used to cross-check case_decomposition.
std::map<CaseLabel, BigCount> case_decomposition_stratified(unsigned long n, unsigned long d,
                                                            Scheme scheme);

// Verdict for the master counting inequality at one (n, d): every diameter-d
// graph contributes at least two eccentricity-d pairs, so
// 2 * diameter_count <= eccentric_pair_count(n, d).
struct MasterCheck {
  BigCount twice_diameter_count;
  BigCount pair_count;
  bool holds;
  bool equality;
};

MasterCheck master_upper_bound_check(unsigned long n, unsigned long d,
                                     const BigCount& diameter_count);

}  // namespace diamcensus
