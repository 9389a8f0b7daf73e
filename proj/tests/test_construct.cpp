#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diamcensus/construct.hpp"
#include "diamcensus/errors.hpp"
#include "diamcensus/exact.hpp"
#include "diamcensus/graph.hpp"
#include "diamcensus/oracle.hpp"
#include "diamcensus/rng.hpp"

using namespace diamcensus;

namespace {

// Chi-square acceptance threshold at significance 1e-3 via the
// Wilson-Hilferty cube approximation, z for p = 0.999.
double chi2_threshold(int df) {
  const double z = 3.0902;
  const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  return df * t * t * t;
}

bool specs_equal(const H1Spec& a, const H1Spec& b) {
  return a.n == b.n && a.d == b.d && a.block_position == b.block_position &&
         a.left_path == b.left_path && a.right_path == b.right_path &&
         a.block_interior == b.block_interior && a.block == b.block;
}

H1Spec tiny_member_spec() {
  // n = 5, d = 3, block on {1,2,3} with contacts 0 and 4
  H1Spec spec;
  spec.n = 5;
  spec.d = 3;
  spec.block_position = 1;
  spec.left_path = {0};
  spec.right_path = {4};
  spec.block_interior = {1, 2, 3};
  LabeledGraph block(5);
  block.add_edge(0, 1);
  block.add_edge(0, 2);
  block.add_edge(1, 3);
  block.add_edge(2, 3);
  block.add_edge(3, 4);
  spec.block = block;
  return spec;
}

std::string partition_key(const SnakePartition& p) {
  std::ostringstream os;
  for (const auto& part : p.parts) {
    for (int v : part) os << v << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace

TEST_SUITE_BEGIN("construct");

TEST_CASE("a hand-built two-path member assembles and verifies") {
  const H1Spec spec = tiny_member_spec();
  const LabeledGraph g = build_h1(spec);
  CHECK(g.diameter() == 3);
  CHECK(g.distances_from(0)[4] == 3);
  CHECK(is_member_h1(g, 3));
  CHECK(!is_member_h1(g, 4));
}

TEST_CASE("assembly rejects contract violations") {
  {
    H1Spec bad = tiny_member_spec();
    bad.block_interior = {1, 2, 2};
    CHECK_THROWS_AS(build_h1(bad), construction_error);
  }
  {
    H1Spec bad = tiny_member_spec();
    bad.block_position = 2;  // path sizes no longer match
    CHECK_THROWS_AS(build_h1(bad), construction_error);
  }
  {
    H1Spec bad = tiny_member_spec();
    bad.block.add_edge(0, 4);  // contacts now at distance 1
    CHECK_THROWS_AS(build_h1(bad), construction_error);
  }
  {
    H1Spec bad = tiny_member_spec();
    bad.d = 2;
    CHECK_THROWS_AS(build_h1(bad), construction_error);
  }
}

TEST_CASE("mirroring is a fixed-point-free involution preserving the graph") {
  CounterRng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const H1Spec spec = sample_h1(10, 6, rng);
    const H1Spec rev = reverse_h1(spec);
    CHECK(!specs_equal(spec, rev));
    CHECK(specs_equal(reverse_h1(rev), spec));
    CHECK(build_h1(spec) == build_h1(rev));
  }
}

TEST_CASE("membership decision agrees with exhaustive assembly at (6, 3)") {
  // With d = 3 and i = 1 both paths are single vertices, so a member is
  // exactly a graph whose whole vertex set satisfies the block contract for
  // its unique distance-3 pair. Count representations per code directly.
  const int n = 6;
  std::uint64_t members = 0;
  std::uint64_t member_calls = 0;
  const std::uint64_t codes = std::uint64_t{1} << 15;
  for (std::uint64_t code = 0; code < codes; ++code) {
    const LabeledGraph g = LabeledGraph::from_code(n, code);
    int reps = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        H1Spec spec;
        spec.n = n;
        spec.d = 3;
        spec.block_position = 1;
        spec.left_path = {a};
        spec.right_path = {b};
        for (int v = 0; v < n; ++v)
          if (v != a && v != b) spec.block_interior.push_back(v);
        spec.block = g;
        try {
          const LabeledGraph built = build_h1(spec);
          CHECK(built == g);
          ++reps;
        } catch (const construction_error&) {
        }
      }
    }
    // the distance-3 pair is unique when the contract holds, so exactly the
    // two orderings of that pair succeed
    CHECK((reps == 0 || reps == 2));
    if (reps > 0) ++members;
    if (is_member_h1(g, 3)) ++member_calls;
    CHECK(is_member_h1(g, 3) == (reps > 0));
  }
  CHECK(members == member_calls);
  CHECK(members > 0);
}

TEST_CASE("block sampler is uniform over the two thin blocks") {
  CounterRng rng(99);
  std::map<std::uint64_t, int> freq;
  const int samples = 2000;
  for (int i = 0; i < samples; ++i) {
    const LabeledGraph b = sample_block(4, {0, 1}, 2, 3, rng);
    ++freq[b.to_code()];
  }
  CHECK(freq.size() == 2);
  double stat = 0;
  const double expect = samples / 2.0;
  for (const auto& [code, count] : freq) {
    const double dlt = count - expect;
    stat += dlt * dlt / expect;
  }
  CHECK(stat < chi2_threshold(1));
}

TEST_CASE("block sampler is uniform over the s = 3 class") {
  const std::uint64_t support = block_class_count(3).to_u64();
  CounterRng rng(4242);
  std::map<std::uint64_t, int> freq;
  const int samples = 200 * static_cast<int>(support);
  for (int i = 0; i < samples; ++i) {
    const LabeledGraph b = sample_block(5, {0, 1, 2}, 3, 4, rng);
    ++freq[b.to_code()];
  }
  CHECK(freq.size() == support);
  double stat = 0;
  const double expect = static_cast<double>(samples) / support;
  for (const auto& [code, count] : freq) {
    const double dlt = count - expect;
    stat += dlt * dlt / expect;
  }
  CHECK(stat < chi2_threshold(static_cast<int>(support) - 1));
}

TEST_CASE("block sampler bubbles up rejection exhaustion") {
  bool saw_exhaustion = false;
  for (std::uint64_t seed = 0; seed < 64 && !saw_exhaustion; ++seed) {
    CounterRng rng(seed);
    try {
      sample_block(4, {0, 1}, 2, 3, rng, 1);
    } catch (const sampling_error&) {
      saw_exhaustion = true;
    }
  }
  CHECK(saw_exhaustion);
  CounterRng rng(0);
  CHECK_THROWS_AS(sample_block(4, {0}, 2, 3, rng), domain_error);
  CHECK_THROWS_AS(sample_block(4, {0, 1}, 2, 2, rng), domain_error);
  CHECK_THROWS_AS(sample_block(4, {0, 2}, 2, 3, rng), domain_error);
}

TEST_CASE("path-family sampler is uniform over the (4, 3) family") {
  CounterRng rng(31337);
  std::map<std::uint64_t, int> freq;
  const int samples = 3000;
  for (int i = 0; i < samples; ++i) {
    const LabeledGraph g = build_h1(sample_h1(4, 3, rng));
    CHECK(g.diameter() == 3);
    ++freq[g.to_code()];
  }
  // 12 ordered end pairs, one thin block each, halved by mirroring
  CHECK(freq.size() == 12);
  double stat = 0;
  const double expect = samples / 12.0;
  for (const auto& [code, count] : freq) {
    const double dlt = count - expect;
    stat += dlt * dlt / expect;
  }
  CHECK(stat < chi2_threshold(11));
}

TEST_CASE("samplers are deterministic in the seed") {
  CounterRng a(12345), b(12345);
  CHECK(build_h1(sample_h1(11, 5, a)).to_code() ==
        build_h1(sample_h1(11, 5, b)).to_code());
  CounterRng c(777), e(777);
  CHECK(sample_h2(10, 8, c).to_code() == sample_h2(10, 8, e).to_code());
}

TEST_CASE("snake partition stream hits the closed-form count") {
  std::set<std::string> seen;
  std::uint64_t checked = 0;
  const std::uint64_t count =
      for_each_snake_partition(9, 7, [&](const SnakePartition& p) {
        if (checked < 500 || checked % 1000 == 0) {
          REQUIRE(p.parts.size() == 8);
          std::vector<char> hit(9, 0);
          for (std::size_t j = 0; j < p.parts.size(); ++j) {
            const auto& part = p.parts[j];
            REQUIRE((part.size() == 1 || part.size() == 2));
            if (j <= 2 || j >= 5) REQUIRE(part.size() == 1);
            if (part.size() == 2) {
              REQUIRE(p.parts[j - 1].size() == 1);
              REQUIRE(part[0] < part[1]);
            }
            for (int v : part) {
              REQUIRE(!hit[static_cast<std::size_t>(v)]);
              hit[static_cast<std::size_t>(v)] = 1;
            }
          }
        }
        seen.insert(partition_key(p));
        ++checked;
      });
  CHECK(count == 362880);
  CHECK(seen.size() == count);
}

TEST_CASE("snake partition stream domain follows the counters") {
  CHECK(for_each_snake_partition(7, 5, nullptr) == 0);
  CHECK(for_each_snake_partition(7, 6, nullptr) == 5040);
  CHECK_THROWS_AS(for_each_snake_partition(4, 3, nullptr), domain_error);
  CHECK_THROWS_AS(for_each_snake_partition(5, 5, nullptr), domain_error);
}

TEST_CASE("the all-singleton build is the labeled path") {
  SnakePartition part;
  part.n = 5;
  part.d = 4;
  part.parts = {{2}, {0}, {1}, {4}, {3}};
  SnakeChoices choices;
  choices.back = {{}, {1}, {1}, {1}, {1}};
  choices.internal_edge.assign(5, false);
  const LabeledGraph g = build_h2(part, choices);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(2, 0));
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 4));
  CHECK(g.has_edge(4, 3));
  CHECK(g.diameter() == 4);
  CHECK(h2_multiplicity(g, 4) == 2);
  CHECK(is_member_h2(g, 4));
  CHECK(!is_member_h2(g, 3));
}

TEST_CASE("snake builds reject malformed choices") {
  SnakePartition part;
  part.n = 5;
  part.d = 4;
  part.parts = {{0}, {1}, {2}, {3}, {4}};
  SnakeChoices choices;
  choices.back = {{}, {1}, {1}, {1}, {1}};
  choices.internal_edge.assign(5, false);
  {
    SnakeChoices bad = choices;
    bad.back[2] = {0};  // empty back-subset disconnects the layer
    CHECK_THROWS_AS(build_h2(part, bad), construction_error);
  }
  {
    SnakeChoices bad = choices;
    bad.internal_edge[2] = true;  // singleton part cannot carry an edge
    CHECK_THROWS_AS(build_h2(part, bad), construction_error);
  }
  {
    SnakePartition badp = part;
    badp.parts = {{0}, {1, 2}, {3}, {4}};  // doubleton at position 1, d = 3
    badp.d = 3;
    CHECK_THROWS_AS(build_h2(badp, choices), construction_error);
  }
}

TEST_CASE("reverse layering can degrade and halve the multiplicity") {
  // doubles at positions 4 and 6 of a depth-9 partition; asymmetric
  // attachments push the reverse layering out of snake shape
  SnakePartition part;
  part.n = 12;
  part.d = 9;
  part.parts = {{0}, {1}, {2}, {3}, {4, 5}, {6}, {7, 8}, {9}, {10}, {11}};
  SnakeChoices skew;
  skew.back = {{}, {1}, {1}, {1}, {1, 1}, {1}, {1, 1}, {1}, {1}, {1}};
  skew.internal_edge.assign(10, false);
  const LabeledGraph g = build_h2(part, skew);
  CHECK(g.diameter() == 9);
  CHECK(is_member_h2(g, 9));
  CHECK(h2_multiplicity(g, 9) == 1);

  SnakeChoices sym = skew;
  sym.back[5] = {3};  // the position-5 singleton joins both doubled vertices
  sym.back[7] = {3};  // and so does the position-7 singleton
  const LabeledGraph h = build_h2(part, sym);
  CHECK(h2_multiplicity(h, 9) == 2);

  LabeledGraph c7(7);
  for (int v = 0; v < 7; ++v) c7.add_edge(v, (v + 1) % 7);
  CHECK(!is_member_h2(c7, 3));
  CHECK(!is_member_h1(c7, 3));
  CHECK_THROWS_AS(h2_multiplicity(c7, 3), domain_error);
}

TEST_CASE("every outcome of the build procedure lands in the family") {
  // stream all (partition, choices) pairs at (8, 6): 40320 partitions with
  // one doubled part each, 6 attachment outcomes per partition
  std::map<std::uint64_t, int> build_count;
  std::uint64_t outcomes = 0;
  for_each_snake_partition(8, 6, [&](const SnakePartition& p) {
    int dbl = -1;
    for (std::size_t j = 0; j < p.parts.size(); ++j)
      if (p.parts[j].size() == 2) dbl = static_cast<int>(j);
    REQUIRE(dbl == 3);
    for (unsigned succ_mask = 1; succ_mask <= 3; ++succ_mask) {
      for (int internal = 0; internal < 2; ++internal) {
        SnakeChoices choices;
        choices.back.assign(7, std::vector<unsigned>{});
        choices.internal_edge.assign(7, false);
        for (int j = 1; j <= 6; ++j) {
          const std::size_t width = p.parts[static_cast<std::size_t>(j)].size();
          const unsigned mask =
              (j == dbl + 1) ? succ_mask : 1u;
          choices.back[static_cast<std::size_t>(j)].assign(width, mask);
        }
        choices.internal_edge[static_cast<std::size_t>(dbl)] = internal != 0;
        const LabeledGraph g = build_h2(p, choices);
        ++build_count[g.to_code()];
        ++outcomes;
      }
    }
  });
  CHECK(outcomes == 120960);  // matches the closed-form outcome count
  BigCount weighted;
  for (const auto& [code, times] : build_count) {
    const LabeledGraph g = LabeledGraph::from_code(8, code);
    CHECK(h2_multiplicity(g, 6) == times);
    weighted += BigCount(static_cast<unsigned long>(times));
  }
  CHECK(weighted == BigCount(120960));
}

TEST_CASE("snake sampler is uniform over the (5, 4) family of paths") {
  CounterRng rng(60601);
  std::map<std::uint64_t, int> freq;
  const int samples = 6000;
  for (int i = 0; i < samples; ++i) {
    const LabeledGraph g = sample_h2(5, 4, rng);
    ++freq[g.to_code()];
  }
  CHECK(freq.size() == 60);
  double stat = 0;
  const double expect = samples / 60.0;
  for (const auto& [code, count] : freq) {
    const double dlt = count - expect;
    stat += dlt * dlt / expect;
  }
  CHECK(stat < chi2_threshold(59));
}

TEST_CASE("snake sampler smoke test at a large parameter point") {
  CounterRng rng(5150);
  for (int i = 0; i < 20; ++i) {
    const LabeledGraph g = sample_h2(20, 16, rng);
    CHECK(g.diameter() == 16);
    CHECK(is_member_h2(g, 16));
  }
}

TEST_CASE("snake sampler rejects empty parameter windows") {
  CounterRng rng(1);
  CHECK_THROWS_AS(sample_h2(7, 5, rng), domain_error);
  CHECK_THROWS_AS(sample_h2(4, 3, rng), domain_error);
  CHECK_THROWS_AS(sample_h2(6, 6, rng), domain_error);
}

TEST_SUITE_END();
