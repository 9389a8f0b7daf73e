#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamcensus/errors.hpp"

namespace diamcensus {

// Simple undirected graph on labeled vertices 0..n-1, n <= 64, stored as one
// 64-bit adjacency mask per vertex. Serialized forms are 1-indexed.
class LabeledGraph {
 public:
  explicit LabeledGraph(int n);

  // Decodes a C(n,2)-bit integer: bit j set <=> the j-th canonical pair is an
  // edge, pairs ordered (0,1),(0,2),...,(0,n-1),(1,2),... Requires n <= 11 so
  // codes fit in 64 bits.
  static LabeledGraph from_code(int n, std::uint64_t code);
  std::uint64_t to_code() const;

  int vertex_count() const { return n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::uint64_t neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  int edge_count() const;

  // Lexicographically sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const;

  // BFS distances; -1 for unreachable vertices.
  std::vector<int> distances_from(int src) const;
  // Same, restricted to the induced subgraph on `allowed` (src must be in it).
  std::vector<int> distances_from(int src, std::uint64_t allowed) const;

  std::optional<int> eccentricity(int src) const;
  std::optional<int> diameter() const;

  // Exchange format: first line "n", then one "u v" line per edge, 1-indexed,
  // u < v, sorted lexicographically.
  std::string to_exchange() const;
  static LabeledGraph from_exchange(const std::string& text);

  bool operator==(const LabeledGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
  void check_vertex(int u) const;
};

}  // namespace diamcensus
