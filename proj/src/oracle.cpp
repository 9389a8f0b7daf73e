#include "diamcensus/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "diamcensus/errors.hpp"

namespace diamcensus {

BigCount CensusTable::total() const {
  BigCount t = unbounded;
  for (const auto& [value, count] : by_value) t += count;
  return t;
}

int oracle_cap() {
  int cap = 8;
  if (const char* env = std::getenv("DIAMCENSUS_ORACLE_CAP")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0' && parsed >= 1) cap = static_cast<int>(parsed);
  }
  // Above 11 the graph codes leave 64 bits and the per-shard counters are no
  // longer provably overflow-free, so the cap cannot be raised further.
  return cap > 11 ? 11 : cap;
}

namespace {

struct ShardCounts {
  std::array<std::uint64_t, 12> diam{};
  std::uint64_t diam_unbounded = 0;
  std::array<std::uint64_t, 12> ecc{};
  std::uint64_t ecc_unbounded = 0;
};

// One pass over codes [lo, hi): decode, run a BFS per vertex, bump counters.
void sweep_range(int n, std::uint64_t lo, std::uint64_t hi, ShardCounts& out) {
  const int pair_bits = n * (n - 1) / 2;
  std::array<int, 64> bit_u{}, bit_v{};
  {
    int bit = 0;
    for (int u = 0; u + 1 < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit) {
        bit_u[static_cast<std::size_t>(bit)] = u;
        bit_v[static_cast<std::size_t>(bit)] = v;
      }
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  std::array<std::uint32_t, 12> rows{};
  for (std::uint64_t code = lo; code < hi; ++code) {
    rows.fill(0);
    for (int bit = 0; bit < pair_bits; ++bit)
      if (code >> bit & 1) {
        rows[static_cast<std::size_t>(bit_u[static_cast<std::size_t>(bit)])] |=
            std::uint32_t{1} << bit_v[static_cast<std::size_t>(bit)];
        rows[static_cast<std::size_t>(bit_v[static_cast<std::size_t>(bit)])] |=
            std::uint32_t{1} << bit_u[static_cast<std::size_t>(bit)];
      }

    int graph_diam = 0;
    bool disconnected = false;
    for (int v = 0; v < n; ++v) {
      std::uint32_t seen = std::uint32_t{1} << v;
      std::uint32_t frontier = seen;
      int level = 0;
      while (true) {
        std::uint32_t nxt = 0;
        std::uint32_t f = frontier;
        while (f) {
          const int u = __builtin_ctz(f);
          f &= f - 1;
          nxt |= rows[static_cast<std::size_t>(u)];
        }
        nxt &= ~seen;
        if (!nxt) break;
        ++level;
        seen |= nxt;
        frontier = nxt;
      }
      if (seen != full) {
        disconnected = true;
        ++out.ecc_unbounded;
      } else {
        ++out.ecc[static_cast<std::size_t>(level)];
        if (level > graph_diam) graph_diam = level;
      }
    }
    if (disconnected)
      ++out.diam_unbounded;
    else
      ++out.diam[static_cast<std::size_t>(graph_diam)];
  }
}

}  // namespace

FullCensus full_census(int n, int workers) {
  if (n < 1) throw domain_error("full_census: need n >= 1");
  const int cap = oracle_cap();
  if (n > cap)
    throw resource_error("full_census: n=" + std::to_string(n) +
                         " exceeds the enumeration cap " + std::to_string(cap) +
                         " (override with DIAMCENSUS_ORACLE_CAP, ceiling 11)");
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw ? static_cast<int>(hw) : 1;
  }

  const int pair_bits = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pair_bits;
  if (static_cast<std::uint64_t>(workers) > total)
    workers = static_cast<int>(total);

  std::vector<ShardCounts> shards(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
  const std::uint64_t rem = total % static_cast<std::uint64_t>(workers);
  auto range_of = [&](std::uint64_t w) {
    // First `rem` shards take one extra code; ranges stay contiguous.
    const std::uint64_t lo = w * chunk + std::min<std::uint64_t>(w, rem);
    const std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
    return std::pair<std::uint64_t, std::uint64_t>(lo, hi);
  };

  if (workers == 1) {
    sweep_range(n, 0, total, shards[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      auto [lo, hi] = range_of(static_cast<std::uint64_t>(w));
      pool.emplace_back(sweep_range, n, lo, hi, std::ref(shards[static_cast<std::size_t>(w)]));
    }
    for (std::thread& t : pool) t.join();
  }

  FullCensus census;
  for (const ShardCounts& s : shards) {
    for (int value = 0; value < n; ++value) {
      if (s.diam[static_cast<std::size_t>(value)])
        census.diameter.by_value[value] += BigCount(s.diam[static_cast<std::size_t>(value)]);
      if (s.ecc[static_cast<std::size_t>(value)])
        census.eccentric_pairs.by_value[value] +=
            BigCount(s.ecc[static_cast<std::size_t>(value)]);
    }
    census.diameter.unbounded += BigCount(s.diam_unbounded);
    census.eccentric_pairs.unbounded += BigCount(s.ecc_unbounded);
  }
  return census;
}

CensusTable diameter_census(int n, int workers) {
  return full_census(n, workers).diameter;
}

CensusTable eccentric_pair_census(int n, int workers) {
  return full_census(n, workers).eccentric_pairs;
}

BigCount block_class_count(int s) {
  if (s < 2)
    throw domain_error("block_class_count: need s >= 2, got " + std::to_string(s));
  if (s > 6) throw resource_error("block_class_count: enumeration capped at s = 6");
  const int n = s + 2;
  const int a = s;      // first contact
  const int b = s + 1;  // second contact
  const int pair_bits = n * (n - 1) / 2;
  std::array<int, 64> bit_u{}, bit_v{};
  {
    int bit = 0;
    for (int u = 0; u + 1 < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit) {
        bit_u[static_cast<std::size_t>(bit)] = u;
        bit_v[static_cast<std::size_t>(bit)] = v;
      }
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::uint64_t count = 0;
  std::array<std::uint32_t, 12> rows{};
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_bits); ++code) {
    rows.fill(0);
    for (int bit = 0; bit < pair_bits; ++bit)
      if (code >> bit & 1) {
        rows[static_cast<std::size_t>(bit_u[static_cast<std::size_t>(bit)])] |=
            std::uint32_t{1} << bit_v[static_cast<std::size_t>(bit)];
        rows[static_cast<std::size_t>(bit_v[static_cast<std::size_t>(bit)])] |=
            std::uint32_t{1} << bit_u[static_cast<std::size_t>(bit)];
      }
    auto ball2 = [&](int u) {
      std::uint32_t one = rows[static_cast<std::size_t>(u)] | (std::uint32_t{1} << u);
      std::uint32_t two = one;
      std::uint32_t f = rows[static_cast<std::size_t>(u)];
      while (f) {
        const int w = __builtin_ctz(f);
        f &= f - 1;
        two |= rows[static_cast<std::size_t>(w)];
      }
      return two;
    };
    bool good = true;
    for (int u = 0; u < s && good; ++u)
      if (ball2(u) != full) good = false;
    if (!good) continue;
    const std::uint32_t ball2_a = ball2(a);
    if (ball2_a != (full & ~(std::uint32_t{1} << b))) continue;
    if (ball2(b) != (full & ~(std::uint32_t{1} << a))) continue;
    // distance(a, b) must be exactly 3: one more expansion step reaches b.
    std::uint32_t three = ball2_a;
    std::uint32_t f = ball2_a;
    while (f) {
      const int w = __builtin_ctz(f);
      f &= f - 1;
      three |= rows[static_cast<std::size_t>(w)];
    }
    if ((three >> b & 1) == 0) continue;
    ++count;
  }
  return BigCount(count);
}

std::string census_to_text(const CensusTable& t) {
  std::ostringstream out;
  for (const auto& [value, count] : t.by_value)
    if (!count.is_zero()) out << value << ' ' << count.to_decimal() << '\n';
  if (!t.unbounded.is_zero()) out << "UNBOUNDED " << t.unbounded.to_decimal() << '\n';
  return out.str();
}

CensusTable census_from_text(const std::string& text) {
  CensusTable t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key, count;
    if (!(fields >> key >> count))
      throw domain_error("census_from_text: malformed line: " + line);
    if (key == "UNBOUNDED")
      t.unbounded = BigCount::from_decimal(count);
    else
      t.by_value[std::stoi(key)] = BigCount::from_decimal(count);
  }
  return t;
}

}  // namespace diamcensus
