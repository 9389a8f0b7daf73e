#include "diamcensus/construct.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "diamcensus/errors.hpp"
#include "diamcensus/exact.hpp"

namespace diamcensus {

namespace {

std::uint64_t mask_of(const std::vector<int>& labels) {
  std::uint64_t m = 0;
  for (int v : labels) m |= std::uint64_t{1} << v;
  return m;
}

// The block contract on the induced subgraph over `allowed`: every vertex
// pair at induced distance <= 2 except (a, b) at exactly 3.
bool block_contract_holds(const LabeledGraph& g, std::uint64_t allowed, int a,
                          int b) {
  for (std::uint64_t rest = allowed; rest != 0; rest &= rest - 1) {
    const int u = __builtin_ctzll(rest);
    const std::vector<int> dist = g.distances_from(u, allowed);
    for (std::uint64_t other = allowed; other != 0; other &= other - 1) {
      const int v = __builtin_ctzll(other);
      if (v == u) continue;
      const bool want_exact_3 = (u == a && v == b) || (u == b && v == a);
      const int dv = dist[static_cast<std::size_t>(v)];
      if (want_exact_3 ? (dv != 3) : (dv < 0 || dv > 2)) return false;
    }
  }
  return true;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw construction_error(what);
}

}  // namespace

LabeledGraph build_h1(const H1Spec& spec) {
  const int n = spec.n;
  const int d = spec.d;
  require(d >= 3 && d < n, "build_h1: need 3 <= d < n");
  // An existing block graph bounds n at the word size, which keeps every
  // label fit for the bitmask arithmetic below.
  require(spec.block.vertex_count() == n,
          "build_h1: block graph must live on the ambient vertex set");
  const int i = spec.block_position;
  require(i >= 1 && i <= d - 2, "build_h1: block position outside [1, d-2]");
  require(static_cast<int>(spec.left_path.size()) == i,
          "build_h1: left path must hold exactly i labels");
  require(static_cast<int>(spec.right_path.size()) == d - 1 - i,
          "build_h1: right path must hold exactly d-1-i labels");
  const int sigma = n - d + 1;
  require(static_cast<int>(spec.block_interior.size()) == sigma,
          "build_h1: block interior must hold exactly n-d+1 labels");

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  auto absorb = [&](const std::vector<int>& part) {
    for (int v : part) {
      require(v >= 0 && v < n, "build_h1: label outside [0, n)");
      require(!seen[static_cast<std::size_t>(v)],
              "build_h1: label used twice");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  };
  absorb(spec.left_path);
  absorb(spec.right_path);
  absorb(spec.block_interior);

  const int a = spec.left_path.back();
  const int b = spec.right_path.front();
  const std::uint64_t allowed = mask_of(spec.block_interior) | mask_of({a, b});

  for (const auto& [u, v] : spec.block.edges()) {
    require(((allowed >> u) & 1) && ((allowed >> v) & 1),
            "build_h1: block edge leaves the block vertex set");
  }
  require(block_contract_holds(spec.block, allowed, a, b),
          "build_h1: block violates its distance contract");

  LabeledGraph g(n);
  for (std::size_t j = 1; j < spec.left_path.size(); ++j)
    g.add_edge(spec.left_path[j - 1], spec.left_path[j]);
  for (std::size_t j = 1; j < spec.right_path.size(); ++j)
    g.add_edge(spec.right_path[j - 1], spec.right_path[j]);
  for (const auto& [u, v] : spec.block.edges()) g.add_edge(u, v);

  const std::optional<int> diam = g.diameter();
  require(diam.has_value() && *diam == d,
          "build_h1: assembled graph misses the target diameter");
  return g;
}

H1Spec reverse_h1(const H1Spec& spec) {
  H1Spec out;
  out.n = spec.n;
  out.d = spec.d;
  out.block_position = spec.d - 1 - spec.block_position;
  out.left_path.assign(spec.right_path.rbegin(), spec.right_path.rend());
  out.right_path.assign(spec.left_path.rbegin(), spec.left_path.rend());
  out.block_interior = spec.block_interior;
  out.block = spec.block;
  return out;
}

bool is_member_h1(const LabeledGraph& g, int d) {
  const int n = g.vertex_count();
  if (d < 3 || d >= n) return false;
  const std::optional<int> diam = g.diameter();
  if (!diam.has_value() || *diam != d) return false;
  const int sigma = n - d + 1;

  std::vector<std::vector<int>> dist;
  dist.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) dist.push_back(g.distances_from(v));

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != d)
        continue;
      // Layer the graph from x.  A valid assembly forces singleton layers
      // everywhere except the two block layers i and i+1.
      std::vector<std::vector<int>> layer(static_cast<std::size_t>(d) + 1);
      for (int v = 0; v < n; ++v) {
        const int dv =
            dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)];
        layer[static_cast<std::size_t>(dv)].push_back(v);
      }

      std::vector<int> heavy;
      for (int j = 0; j <= d; ++j)
        if (layer[static_cast<std::size_t>(j)].size() > 1) heavy.push_back(j);

      std::vector<int> candidates;
      if (heavy.empty()) {
        for (int j = 1; j <= d - 2; ++j) candidates.push_back(j);
      } else if (heavy.size() == 1) {
        const int h = heavy[0];
        if (h - 1 >= 1 && h - 1 <= d - 2) candidates.push_back(h - 1);
        if (h >= 1 && h <= d - 2) candidates.push_back(h);
      } else if (heavy.size() == 2 && heavy[1] == heavy[0] + 1) {
        const int h = heavy[0];
        if (h >= 1 && h <= d - 2) candidates.push_back(h);
      }

      for (int i : candidates) {
        const auto& li = layer[static_cast<std::size_t>(i)];
        const auto& lj = layer[static_cast<std::size_t>(i) + 1];
        if (static_cast<int>(li.size() + lj.size()) != sigma) continue;
        const int a = layer[static_cast<std::size_t>(i) - 1][0];
        const int b = layer[static_cast<std::size_t>(i) + 2][0];
        const std::uint64_t allowed =
            mask_of(li) | mask_of(lj) | mask_of({a, b});
        if (block_contract_holds(g, allowed, a, b)) return true;
      }
    }
  }
  return false;
}

LabeledGraph sample_block(int n_ambient, const std::vector<int>& interior,
                          int contact_a, int contact_b, CounterRng& rng,
                          int max_tries) {
  const int s = static_cast<int>(interior.size());
  if (s < 2)
    throw domain_error("sample_block: need at least 2 interior vertices");
  if (max_tries < 1)
    throw domain_error("sample_block: max_tries must be positive");
  if (n_ambient < 1 || n_ambient > 64)
    throw domain_error("sample_block: ambient vertex count outside [1, 64]");
  if (contact_a == contact_b)
    throw domain_error("sample_block: contacts must be distinct");
  for (int v : {contact_a, contact_b})
    if (v < 0 || v >= n_ambient)
      throw domain_error("sample_block: contact label outside [0, n)");

  std::uint64_t used = mask_of({contact_a, contact_b});
  for (int v : interior) {
    if (v < 0 || v >= n_ambient)
      throw domain_error("sample_block: interior label outside [0, n)");
    if ((used >> v) & 1)
      throw domain_error(
          "sample_block: interior labels must be distinct and avoid the "
          "contacts");
    used |= std::uint64_t{1} << v;
  }

  const std::uint64_t allowed = used;
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    LabeledGraph g(n_ambient);
    for (int v : interior) {
      switch (rng.below(3)) {
        case 0: g.add_edge(contact_a, v); break;
        case 1: g.add_edge(contact_b, v); break;
        default: break;  // attached to neither contact
      }
    }
    for (int p = 0; p < s; ++p)
      for (int q = p + 1; q < s; ++q)
        if (rng.coin())
          g.add_edge(interior[static_cast<std::size_t>(p)],
                     interior[static_cast<std::size_t>(q)]);
    if (block_contract_holds(g, allowed, contact_a, contact_b)) return g;
  }
  std::ostringstream msg;
  msg << "sample_block: 0 of " << max_tries
      << " proposals met the block contract (interior size " << s << ")";
  throw sampling_error(msg.str());
}

H1Spec sample_h1(int n, int d, CounterRng& rng) {
  if (!(d >= 3 && d < n && n <= 64))
    throw domain_error("sample_h1: need 3 <= d < n <= 64");
  H1Spec spec;
  spec.n = n;
  spec.d = d;
  spec.block_position =
      1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - 2)));

  // Partial shuffle: the first d-1 slots become the ordered path labels,
  // the rest the interior set.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int j = 0; j + 1 < d; ++j) {
    const std::size_t k = static_cast<std::size_t>(j) +
        static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(n - j)));
    std::swap(perm[static_cast<std::size_t>(j)], perm[k]);
  }
  const int i = spec.block_position;
  spec.left_path.assign(perm.begin(), perm.begin() + i);
  spec.right_path.assign(perm.begin() + i, perm.begin() + (d - 1));
  spec.block_interior.assign(perm.begin() + (d - 1), perm.end());
  spec.block = sample_block(n, spec.block_interior, spec.left_path.back(),
                            spec.right_path.front(), rng);
  return spec;
}

namespace {

// Same parameter window as the closed-form partition counters: s = n-d-1
// doubled parts must fit t = 2d-3-n interchangeable slots, both nonnegative.
void check_snake_domain(int n, int d, const char* who) {
  std::ostringstream msg;
  if (n < 2 || d < 1 || d >= n) {
    msg << who << ": need 1 <= d < n";
    throw domain_error(msg.str());
  }
  if (2 * d - 3 - n < 0) {
    msg << who << ": parameter window requires 2d >= n + 3";
    throw domain_error(msg.str());
  }
}

bool snake_layering_from(const LabeledGraph& g, int root, int d) {
  const std::vector<int> dist = g.distances_from(root);
  const int n = g.vertex_count();
  std::vector<int> size(static_cast<std::size_t>(d) + 1, 0);
  for (int v = 0; v < n; ++v) {
    const int dv = dist[static_cast<std::size_t>(v)];
    if (dv < 0 || dv > d) return false;
    ++size[static_cast<std::size_t>(dv)];
  }
  for (int j = 0; j <= d; ++j) {
    const int sz = size[static_cast<std::size_t>(j)];
    if (sz < 1 || sz > 2) return false;
    if ((j <= 2 || j >= d - 2) && sz != 1) return false;
    if (sz == 2 && size[static_cast<std::size_t>(j) - 1] == 2) return false;
  }
  return true;
}

}  // namespace

std::uint64_t for_each_snake_partition(
    int n, int d, const std::function<void(const SnakePartition&)>& visit) {
  check_snake_domain(n, d, "for_each_snake_partition");
  const int s = n - d - 1;

  SnakePartition part;
  part.n = n;
  part.d = d;
  part.parts.assign(static_cast<std::size_t>(d) + 1, {});

  std::vector<int> doubles;
  std::vector<int> avail(static_cast<std::size_t>(n));
  std::uint64_t count = 0;

  std::function<void(int)> assign = [&](int pos) {
    if (pos > d) {
      ++count;
      if (visit) visit(part);
      return;
    }
    auto& slot = part.parts[static_cast<std::size_t>(pos)];
    const bool dbl = std::binary_search(doubles.begin(), doubles.end(), pos);
    if (!dbl) {
      for (std::size_t idx = 0; idx < avail.size(); ++idx) {
        const int lab = avail[idx];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
        slot = {lab};
        assign(pos + 1);
        avail.insert(avail.begin() + static_cast<std::ptrdiff_t>(idx), lab);
      }
    } else {
      for (std::size_t i1 = 0; i1 + 1 < avail.size(); ++i1) {
        for (std::size_t i2 = i1 + 1; i2 < avail.size(); ++i2) {
          const int l1 = avail[i1];
          const int l2 = avail[i2];
          // erase the larger index first so the smaller stays valid
          avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(i2));
          avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(i1));
          slot = {l1, l2};
          assign(pos + 1);
          avail.insert(avail.begin() + static_cast<std::ptrdiff_t>(i1), l1);
          avail.insert(avail.begin() + static_cast<std::ptrdiff_t>(i2), l2);
        }
      }
    }
    slot.clear();
  };

  std::function<void(int, int)> patterns = [&](int from, int left) {
    if (left == 0) {
      std::iota(avail.begin(), avail.end(), 0);
      assign(0);
      return;
    }
    for (int p = from; p <= d - 3 - 2 * (left - 1); ++p) {
      doubles.push_back(p);
      patterns(p + 2, left - 1);
      doubles.pop_back();
    }
  };
  patterns(3, s);
  return count;
}

LabeledGraph build_h2(const SnakePartition& partition,
                      const SnakeChoices& choices) {
  const int n = partition.n;
  const int d = partition.d;
  require(n >= 2 && d >= 1 && d < n, "build_h2: need 1 <= d < n");
  require(static_cast<int>(partition.parts.size()) == d + 1,
          "build_h2: partition must hold d+1 parts");

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int total = 0;
  for (int j = 0; j <= d; ++j) {
    const auto& pj = partition.parts[static_cast<std::size_t>(j)];
    const int sz = static_cast<int>(pj.size());
    require(sz == 1 || sz == 2, "build_h2: part sizes must be 1 or 2");
    if (j <= 2 || j >= d - 2)
      require(sz == 1, "build_h2: end parts must be singletons");
    if (sz == 2)
      require(partition.parts[static_cast<std::size_t>(j) - 1].size() == 1,
              "build_h2: adjacent parts cannot both be doubletons");
    for (int v : pj) {
      require(v >= 0 && v < n, "build_h2: label outside [0, n)");
      require(!seen[static_cast<std::size_t>(v)],
              "build_h2: label used twice");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    total += sz;
  }
  require(total == n, "build_h2: parts must cover [0, n)");

  require(static_cast<int>(choices.back.size()) == d + 1 &&
              static_cast<int>(choices.internal_edge.size()) == d + 1,
          "build_h2: choices must list d+1 entries");
  require(choices.back[0].empty(),
          "build_h2: the root part takes no back-attachments");

  LabeledGraph g(n);
  for (int j = 1; j <= d; ++j) {
    const auto& prev = partition.parts[static_cast<std::size_t>(j) - 1];
    const auto& cur = partition.parts[static_cast<std::size_t>(j)];
    const auto& masks = choices.back[static_cast<std::size_t>(j)];
    require(masks.size() == cur.size(),
            "build_h2: one back-mask per part vertex");
    for (std::size_t v = 0; v < cur.size(); ++v) {
      const unsigned m = masks[v];
      require(m >= 1 && m < (1u << prev.size()),
              "build_h2: back-mask must pick a nonempty subset of the "
              "previous part");
      for (std::size_t k = 0; k < prev.size(); ++k)
        if ((m >> k) & 1u) g.add_edge(cur[v], prev[k]);
    }
  }
  for (int j = 0; j <= d; ++j) {
    const auto& pj = partition.parts[static_cast<std::size_t>(j)];
    if (choices.internal_edge[static_cast<std::size_t>(j)]) {
      require(pj.size() == 2,
              "build_h2: internal edge flagged on a singleton part");
      g.add_edge(pj[0], pj[1]);
    }
  }

  if (n <= 24) {
    const int v0 = partition.parts.front()[0];
    const int vd = partition.parts.back()[0];
    bool ok = true;
    int extremal_pairs = 0;
    for (int u = 0; u < n && ok; ++u) {
      const std::vector<int> dist = g.distances_from(u);
      for (int v = u + 1; v < n; ++v) {
        const int dv = dist[static_cast<std::size_t>(v)];
        if (dv < 0 || dv > d) {
          ok = false;
          break;
        }
        if (dv == d) {
          ++extremal_pairs;
          if (!((u == v0 && v == vd) || (u == vd && v == v0))) ok = false;
        }
      }
    }
    require(ok && extremal_pairs == 1,
            "build_h2: assembled graph misses the unique-extremal-pair "
            "contract");
  } else {
    std::clog << "build_h2: skipping the quadratic distance verification "
                 "for n = "
              << n << "\n";
  }
  return g;
}

int h2_multiplicity(const LabeledGraph& g, int d) {
  const std::optional<int> diam = g.diameter();
  if (!diam.has_value() || *diam != d)
    throw domain_error("h2_multiplicity: graph is not a family member");
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (snake_layering_from(g, v, d)) ++count;
  if (count == 0)
    throw domain_error("h2_multiplicity: graph is not a family member");
  return count;
}

bool is_member_h2(const LabeledGraph& g, int d) {
  const std::optional<int> diam = g.diameter();
  if (!diam.has_value() || *diam != d) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (snake_layering_from(g, v, d)) return true;
  return false;
}

LabeledGraph sample_h2(int n, int d, CounterRng& rng, int max_tries) {
  check_snake_domain(n, d, "sample_h2");
  if (max_tries < 1)
    throw domain_error("sample_h2: max_tries must be positive");
  if (n > 64) throw domain_error("sample_h2: need n <= 64");
  const int s = n - d - 1;
  const int t = 2 * d - 3 - n;

  // Patterns of s pairwise non-adjacent doubled positions inside the d-5
  // free slots [3, d-3]: one per s-subset of t interchangeable slots.
  const BigCount patterns_big = binomial(static_cast<unsigned long>(t),
                                         static_cast<unsigned long>(s));
  if (patterns_big.is_zero())
    throw domain_error(
        "sample_h2: no generating partitions in this (n, d) window");
  const std::uint64_t patterns = patterns_big.to_u64();

  // Ways to drop k pairwise non-adjacent doubled positions into a row of
  // `slots` free positions.
  auto nonadjacent = [](int slots, int k) -> std::uint64_t {
    if (k == 0) return 1;
    if (slots < 2 * k - 1) return 0;
    return binomial(static_cast<unsigned long>(slots - k + 1),
                    static_cast<unsigned long>(k))
        .to_u64();
  };

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    // Unrank a uniform non-adjacent position pattern inside [3, d-3].
    std::uint64_t rank = rng.below(patterns);
    std::vector<int> doubles;
    int next = 3;
    int left = s;
    while (left > 0) {
      if (next > d - 3) throw internal_error("sample_h2: pattern unranking ran out of slots");
      // patterns whose smallest remaining double sits exactly at `next`
      const std::uint64_t here = nonadjacent(d - 3 - (next + 2) + 1, left - 1);
      if (rank < here) {
        doubles.push_back(next);
        next += 2;
        --left;
      } else {
        rank -= here;
        next += 1;
      }
    }

    // A uniform permutation filled into the parts in position order covers
    // every partition with exactly 2^s permutations.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int j = 0; j + 1 < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(j) +
          static_cast<std::size_t>(
              rng.below(static_cast<std::uint64_t>(n - j)));
      std::swap(perm[static_cast<std::size_t>(j)], perm[k]);
    }
    SnakePartition part;
    part.n = n;
    part.d = d;
    part.parts.assign(static_cast<std::size_t>(d) + 1, {});
    std::size_t cursor = 0;
    for (int j = 0; j <= d; ++j) {
      const bool dbl = std::binary_search(doubles.begin(), doubles.end(), j);
      auto& slot = part.parts[static_cast<std::size_t>(j)];
      if (dbl) {
        slot = {perm[cursor], perm[cursor + 1]};
        std::sort(slot.begin(), slot.end());
        cursor += 2;
      } else {
        slot = {perm[cursor]};
        ++cursor;
      }
    }

    SnakeChoices choices;
    choices.back.assign(static_cast<std::size_t>(d) + 1, {});
    choices.internal_edge.assign(static_cast<std::size_t>(d) + 1, false);
    for (int j = 1; j <= d; ++j) {
      const auto& prev = part.parts[static_cast<std::size_t>(j) - 1];
      const auto& cur = part.parts[static_cast<std::size_t>(j)];
      auto& masks = choices.back[static_cast<std::size_t>(j)];
      for (std::size_t v = 0; v < cur.size(); ++v) {
        if (prev.size() == 1) {
          masks.push_back(1);
        } else {
          masks.push_back(1 + static_cast<unsigned>(rng.below(3)));
        }
      }
      if (cur.size() == 2)
        choices.internal_edge[static_cast<std::size_t>(j)] = rng.coin();
    }

    const LabeledGraph g = build_h2(part, choices);
    // Each graph arises from exactly h2_multiplicity(g) proposal outcomes;
    // accepting with probability 1/multiplicity makes the output uniform.
    const int mult = h2_multiplicity(g, d);
    if (mult == 1 || rng.coin()) return g;
  }
  std::ostringstream msg;
  msg << "sample_h2: " << max_tries
      << " proposals were all rejected by the multiplicity balancer";
  throw sampling_error(msg.str());
}

}  // namespace diamcensus
