#pragma once

#include <map>
#include <string>

#include "diamcensus/exact.hpp"
#include "diamcensus/graph.hpp"

namespace diamcensus {

// Brute-force ground truth: enumerate every graph on n labeled vertices and
// measure distances directly. Feasible for small n only; the enumeration cap
// defaults to 8 and can be moved with the DIAMCENSUS_ORACLE_CAP environment
// variable (hard ceiling 11, where shard counters would still fit 64 bits).

struct CensusTable {
  std::map<int, BigCount> by_value;  // finite diameter / eccentricity -> count
  BigCount unbounded;                // disconnected contributions

  BigCount total() const;
  bool operator==(const CensusTable& o) const {
    return by_value == o.by_value && unbounded == o.unbounded;
  }
};

struct FullCensus {
  CensusTable diameter;         // graphs by diameter
  CensusTable eccentric_pairs;  // (vertex, graph) pairs by eccentricity
};

int oracle_cap();

// One sweep over all 2^C(n,2) graphs producing both tables. workers = 0 picks
// the hardware thread count; the result is identical for every worker count.
FullCensus full_census(int n, int workers = 0);

CensusTable diameter_census(int n, int workers = 0);
CensusTable eccentric_pair_census(int n, int workers = 0);

// |H(S,a,b)| by enumeration: graphs on s+2 labeled vertices where every pair
// is within distance 2 except the two designated contacts at exactly 3.
// Requires 2 <= s <= 6.
BigCount block_class_count(int s);

// Golden-file serialization: one "value count" line per nonzero entry sorted
// by value, then "UNBOUNDED count" last when nonzero. Bit-exact round trip.
std::string census_to_text(const CensusTable& t);
CensusTable census_from_text(const std::string& text);

}  // namespace diamcensus
