#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "diamcensus/exact.hpp"
#include "diamcensus/graph.hpp"
#include "diamcensus/rng.hpp"

namespace diamcensus {

class CounterRng;

// ---------------------------------------------------------------------------
// Family one: two induced paths joined through a two-layer block.
//
// A member on n labeled vertices with diameter d is assembled from
//   - a block position i in [1, d-2],
//   - a left path on i vertices and a right path on d-1-i vertices
//     (the two endpoints of the diameter live at the outer ends),
//   - a block on the remaining sigma = n-d+1 vertices together with the two
//     contact vertices (last left-path vertex, first right-path vertex):
//     every pair of block vertices is at induced distance <= 2 inside the
//     block except the two contacts, which sit at exactly 3.
// ---------------------------------------------------------------------------

struct H1Spec {
  int n = 0;
  int d = 0;
  int block_position = 0;            // i in [1, d-2]
  std::vector<int> left_path;        // i labels, outer end first
  std::vector<int> right_path;       // d-1-i labels, inner end first
  std::vector<int> block_interior;   // sigma labels
  LabeledGraph block{1};             // on {contact_a} + interior + {contact_b}
};

// Assembles the graph a spec describes.  Throws construction_error if the
// sets do not partition [0, n) or the block violates its contract.
LabeledGraph build_h1(const H1Spec& spec);

// The mirror spec: paths swapped and reversed, block relabeled, position
// d-1-i.  An involution on specs with no fixed points, and
// build_h1(reverse_h1(s)) == build_h1(s).
H1Spec reverse_h1(const H1Spec& spec);

// Decides membership: does g have diameter d and at least one assembly as
// above?  Requires d >= 3 and n - d + 1 >= 2 to be satisfiable.
bool is_member_h1(const LabeledGraph& g, int d);

// Uniformly samples a valid block on `interior` plus two fixed contacts by
// rejection: each interior vertex independently attaches to the contacts in
// one of three ways (a only, b only, neither), each interior pair flips a
// coin,
// and the result is accepted iff the block contract holds.  Throws
// sampling_error after max_tries rejections.
LabeledGraph sample_block(int n_ambient, const std::vector<int>& interior,
                          int contact_a, int contact_b, CounterRng& rng,
                          int max_tries = 10000);

// Uniform over the parameter space (position, labeling, block): every spec
// equally likely.  Specs are 2-to-1 onto graphs via reverse_h1 for generic
// members, so generic graphs are equally likely as well.
H1Spec sample_h1(int n, int d, CounterRng& rng);

// ---------------------------------------------------------------------------
// Family two: snake graphs grown layer by layer.
//
// A generating partition splits [0, n) into parts V_0, ..., V_d with
// |V_i| in {1, 2}, singletons at i in {0, 1, 2, d-2, d-1, d}, and no two
// adjacent parts both of size 2.  Each vertex in V_i (i >= 1) attaches to a
// nonempty subset of V_{i-1}; edges within a part are free.
// ---------------------------------------------------------------------------

struct SnakePartition {
  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> parts;  // d+1 parts, labels sorted
};

// Streams every generating partition of [0, n) for diameter d in a fixed
// deterministic order.  Returns the number visited.
std::uint64_t for_each_snake_partition(
    int n, int d, const std::function<void(const SnakePartition&)>& visit);

// Attachment choices on top of a partition: for each vertex of V_i (i >= 1)
// the nonempty back-subset of V_{i-1} it joins, plus one internal-edge flag
// per doubleton part.
struct SnakeChoices {
  // back[i][j]: bitmask over V_{i-1} (bit k = k-th listed vertex) for the
  // j-th listed vertex of V_i.  back[0] is empty.
  std::vector<std::vector<unsigned>> back;
  std::vector<bool> internal_edge;  // one per part, meaningful for doubletons
};

// Builds the graph and checks it: diameter d with the V_0, V_d pair as the
// unique vertex pair at that distance.  Throws construction_error on a
// violated contract.  Verification runs for n <= 24; larger builds skip it
// and say so on the log stream.
LabeledGraph build_h2(const SnakePartition& partition,
                      const SnakeChoices& choices);

// Number of generating partitions that produce g, i.e. the number of
// eccentricity-d BFS layerings of g that land in valid snake shape.  Either
// 1 or 2 for members.
int h2_multiplicity(const LabeledGraph& g, int d);

// Does g arise from at least one generating partition of diameter d?
bool is_member_h2(const LabeledGraph& g, int d);

// Exactly uniform over graphs in the family: sample a partition and choices
// uniformly, then accept with probability 1/multiplicity.  Throws
// sampling_error if max_tries acceptances all fail (multiplicity is at most
// 2 so this is astronomically unlikely).
LabeledGraph sample_h2(int n, int d, CounterRng& rng, int max_tries = 10000);

}  // namespace diamcensus
