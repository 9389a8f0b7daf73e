#pragma once

#include <functional>
#include <vector>

#include "diamcensus/errors.hpp"

namespace diamcensus {

// Classification scheme for layer profiles: the long-range regime groups by
// the heaviest three-layer window, the short-range regime by how the surplus
// vertices spread over the layers.
enum class Scheme { thm1, thm2 };

const char* to_string(Scheme s);

// Sizes (n_1, ..., n_d) of the distance layers seen from a root vertex:
// n_i = #vertices at distance exactly i, all positive. The root itself is
// layer 0 and is not stored; total vertex count is 1 + sum.
struct LayerProfile {
  std::vector<int> sizes;

  LayerProfile() = default;
  explicit LayerProfile(std::vector<int> s) : sizes(std::move(s)) { validate(); }

  int depth() const { return static_cast<int>(sizes.size()); }
  int total_vertices() const;
  // Surplus over the all-singleton profile: s = n - d - 1.
  int extras() const { return total_vertices() - depth() - 1; }

  void validate() const;

  bool operator==(const LayerProfile& o) const { return sizes == o.sizes; }
  bool operator<(const LayerProfile& o) const { return sizes < o.sizes; }
};

// Visits every composition of `total` into `parts` positive parts, in
// lexicographic order. `total >= parts >= 1` required.
void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& visit);

}  // namespace diamcensus
