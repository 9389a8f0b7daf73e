#include "diamcensus/graph.hpp"

#include <sstream>

namespace diamcensus {

LabeledGraph::LabeledGraph(int n) : n_(n) {
  if (n < 1 || n > 64)
    throw domain_error("LabeledGraph: vertex count must be in [1, 64], got " +
                       std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void LabeledGraph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw domain_error("LabeledGraph: vertex " + std::to_string(u) +
                       " out of range [0, " + std::to_string(n_) + ")");
}

LabeledGraph LabeledGraph::from_code(int n, std::uint64_t code) {
  if (n > 11)
    throw domain_error("LabeledGraph::from_code: codes are limited to n <= 11");
  LabeledGraph g(n);
  int bit = 0;
  for (int u = 0; u + 1 < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) g.add_edge(u, v);
  return g;
}

std::uint64_t LabeledGraph::to_code() const {
  if (n_ > 11)
    throw domain_error("LabeledGraph::to_code: codes are limited to n <= 11");
  std::uint64_t code = 0;
  int bit = 0;
  for (int u = 0; u + 1 < n_; ++u)
    for (int v = u + 1; v < n_; ++v, ++bit)
      if (has_edge(u, v)) code |= std::uint64_t{1} << bit;
  return code;
}

void LabeledGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw domain_error("LabeledGraph: self-loop rejected");
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void LabeledGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

bool LabeledGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v & 1) != 0;
}

int LabeledGraph::edge_count() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += __builtin_popcountll(row);
  return twice / 2;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u + 1 < n_; ++u) {
    std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
    while (higher) {
      int v = u + 1 + __builtin_ctzll(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

std::vector<int> LabeledGraph::distances_from(int src) const {
  std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n_) - 1;
  return distances_from(src, all);
}

std::vector<int> LabeledGraph::distances_from(int src, std::uint64_t allowed) const {
  check_vertex(src);
  if ((allowed >> src & 1) == 0)
    throw domain_error("distances_from: source not in allowed set");
  std::vector<int> dist(static_cast<std::size_t>(n_), -1);
  std::uint64_t seen = std::uint64_t{1} << src;
  std::uint64_t frontier = seen;
  dist[static_cast<std::size_t>(src)] = 0;
  int level = 0;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int u = __builtin_ctzll(f);
      f &= f - 1;
      next |= adj_[static_cast<std::size_t>(u)];
    }
    next &= allowed & ~seen;
    ++level;
    std::uint64_t w = next;
    while (w) {
      int v = __builtin_ctzll(w);
      w &= w - 1;
      dist[static_cast<std::size_t>(v)] = level;
    }
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<int> LabeledGraph::eccentricity(int src) const {
  std::vector<int> dist = distances_from(src);
  int ecc = 0;
  for (int d : dist) {
    if (d < 0) return std::nullopt;
    if (d > ecc) ecc = d;
  }
  return ecc;
}

std::optional<int> LabeledGraph::diameter() const {
  int diam = 0;
  for (int u = 0; u < n_; ++u) {
    std::optional<int> ecc = eccentricity(u);
    if (!ecc) return std::nullopt;
    if (*ecc > diam) diam = *ecc;
  }
  return diam;
}

std::string LabeledGraph::to_exchange() const {
  std::ostringstream out;
  out << n_ << '\n';
  for (const auto& [u, v] : edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
  return out.str();
}

LabeledGraph LabeledGraph::from_exchange(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw domain_error("from_exchange: missing vertex count");
  LabeledGraph g(n);
  int u = 0, v = 0;
  while (in >> u >> v) {
    if (u < 1 || v < 1 || u > n || v > n || u >= v)
      throw domain_error("from_exchange: bad edge line " + std::to_string(u) +
                         " " + std::to_string(v));
    g.add_edge(u - 1, v - 1);
  }
  if (!in.eof() && in.fail()) {
    in.clear();
    std::string rest;
    in >> rest;
    if (!rest.empty()) throw domain_error("from_exchange: trailing junk: " + rest);
  }
  return g;
}

}  // namespace diamcensus
