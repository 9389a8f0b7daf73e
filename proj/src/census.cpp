#include "diamcensus/census.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <thread>
#include <utility>

#include "diamcensus/errors.hpp"

namespace diamcensus {

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::thm1:
      return "thm1";
    case Scheme::thm2:
      return "thm2";
  }
  return "?";
}

int LayerProfile::total_vertices() const {
  int total = 1;
  for (int k : sizes) total += k;
  return total;
}

void LayerProfile::validate() const {
  if (sizes.empty()) throw domain_error("LayerProfile: needs at least one layer");
  for (int k : sizes)
    if (k < 1) throw domain_error("LayerProfile: layer sizes must be positive");
}

void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (parts < 1 || total < parts)
    throw domain_error("for_each_composition: need total >= parts >= 1, got total=" +
                       std::to_string(total) + " parts=" + std::to_string(parts));
  std::vector<int> cur(static_cast<std::size_t>(parts), 1);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == parts - 1) {
      cur[static_cast<std::size_t>(idx)] = remaining;
      visit(cur);
      return;
    }
    const int max_here = remaining - (parts - 1 - idx);
    for (int v = 1; v <= max_here; ++v) {
      cur[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, remaining - v);
    }
  };
  rec(0, total);
}

BigCount layer_class_count(const LayerProfile& p) {
  p.validate();
  unsigned long within = 0;
  for (int k : p.sizes) {
    const unsigned long uk = static_cast<unsigned long>(k);
    within += uk * (uk - 1) / 2;
  }
  BigCount result = pow2(within);
  for (std::size_t i = 0; i + 1 < p.sizes.size(); ++i) {
    BigCount base = pow2(static_cast<unsigned long>(p.sizes[i])) - BigCount(1);
    result *= pow_count(base, static_cast<unsigned long>(p.sizes[i + 1]));
  }
  return result;
}

BigCount profile_term(unsigned long n, const LayerProfile& p) {
  p.validate();
  if (p.total_vertices() != static_cast<int>(n))
    throw domain_error("profile_term: profile totals " +
                       std::to_string(p.total_vertices()) + " vertices, expected " +
                       std::to_string(n));
  std::vector<unsigned long> parts;
  parts.reserve(p.sizes.size() + 1);
  parts.push_back(1);
  for (int k : p.sizes) parts.push_back(static_cast<unsigned long>(k));
  return multinomial(n, parts) * layer_class_count(p);
}

namespace {

void check_pair_count_domain(unsigned long n, unsigned long d) {
  if (n < 2)
    throw domain_error("eccentric_pair_count: need n >= 2, got " + std::to_string(n));
  if (d < 1 || d > n - 1)
    throw domain_error("eccentric_pair_count: need 1 <= d <= n-1, got n=" +
                       std::to_string(n) + " d=" + std::to_string(d));
}

// Shared DP core. Layer weights carry the 1/k! share of the multinomial;
// the caller's n! restores it. max_size = 0 lifts the per-layer size cap.
BigCount dp_pair_count(unsigned long n, unsigned long d, int max_size) {
  check_pair_count_domain(n, d);
  const int budget = static_cast<int>(n) - 1;
  const int depth = static_cast<int>(d);
  const int cap = (max_size > 0) ? std::min(max_size, budget) : budget;

  // weight[p][k] = 2^C(k,2) * (2^p - 1)^k / k!
  std::vector<std::vector<BigRatio>> weight(
      static_cast<std::size_t>(cap) + 1,
      std::vector<BigRatio>(static_cast<std::size_t>(cap) + 1));
  for (int p = 1; p <= cap; ++p) {
    const BigCount fan = pow2(static_cast<unsigned long>(p)) - BigCount(1);
    for (int k = 1; k <= cap; ++k)
      weight[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] =
          BigRatio(pow2_choose2(static_cast<unsigned long>(k)) *
                       pow_count(fan, static_cast<unsigned long>(k)),
                   factorial(static_cast<unsigned long>(k)));
  }

  // dp[used][k]: mass of prefixes consuming `used` vertices, last layer size k.
  std::vector<std::vector<BigRatio>> dp(
      static_cast<std::size_t>(budget) + 1,
      std::vector<BigRatio>(static_cast<std::size_t>(cap) + 1));
  for (int k = 1; k <= cap && k <= budget - (depth - 1); ++k)
    dp[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] =
        BigRatio(pow2_choose2(static_cast<unsigned long>(k)),
                 factorial(static_cast<unsigned long>(k)));

  for (int layer = 2; layer <= depth; ++layer) {
    std::vector<std::vector<BigRatio>> next(
        static_cast<std::size_t>(budget) + 1,
        std::vector<BigRatio>(static_cast<std::size_t>(cap) + 1));
    const int layers_left = depth - layer;
    for (int used = layer - 1; used <= budget - 1; ++used)
      for (int k = 1; k <= cap; ++k) {
        const BigRatio& mass = dp[static_cast<std::size_t>(used)][static_cast<std::size_t>(k)];
        if (mass.is_zero()) continue;
        for (int k2 = 1; k2 <= cap && used + k2 + layers_left <= budget; ++k2)
          next[static_cast<std::size_t>(used + k2)][static_cast<std::size_t>(k2)] +=
              mass * weight[static_cast<std::size_t>(k)][static_cast<std::size_t>(k2)];
      }
    dp = std::move(next);
  }

  BigRatio total;
  for (int k = 1; k <= cap; ++k)
    total += dp[static_cast<std::size_t>(budget)][static_cast<std::size_t>(k)];
  total *= BigRatio(factorial(n));
  if (!total.is_integer())
    throw internal_error("dp_pair_count: non-integral total for n=" +
                         std::to_string(n) + " d=" + std::to_string(d));
  return total.to_count();
}

}  // namespace

BigCount eccentric_pair_count(unsigned long n, unsigned long d) {
  return dp_pair_count(n, d, 0);
}

BigCount eccentric_pair_count_direct(unsigned long n, unsigned long d, int workers) {
  check_pair_count_domain(n, d);
  if (workers < 1) workers = 1;

  std::vector<std::vector<LayerProfile>> shards(static_cast<std::size_t>(workers));
  std::size_t index = 0;
  for_each_composition(static_cast<int>(n) - 1, static_cast<int>(d),
                       [&](const std::vector<int>& sizes) {
                         shards[index % static_cast<std::size_t>(workers)].emplace_back(
                             LayerProfile(std::vector<int>(sizes)));
                         ++index;
                       });

  std::vector<BigCount> partial(static_cast<std::size_t>(workers));
  auto run_shard = [&](std::size_t w) {
    BigCount acc;
    for (const LayerProfile& p : shards[w]) acc += profile_term(n, p);
    partial[w] = std::move(acc);
  };
  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::size_t w = 0; w < static_cast<std::size_t>(workers); ++w)
      pool.emplace_back(run_shard, w);
    for (std::thread& t : pool) t.join();
  }
  // Merge in shard order so the result never depends on scheduling.
  BigCount total;
  for (const BigCount& c : partial) total += c;
  return total;
}

BigCount rearranged_term(unsigned long n, const LayerProfile& p) {
  p.validate();
  if (p.total_vertices() != static_cast<int>(n))
    throw domain_error("rearranged_term: profile does not total n vertices");
  const std::size_t d = p.sizes.size();
  std::vector<unsigned long> extras;
  extras.reserve(d);
  unsigned long s = 0;
  for (int k : p.sizes) {
    extras.push_back(static_cast<unsigned long>(k - 1));
    s += static_cast<unsigned long>(k - 1);
  }
  unsigned long expo = 0;
  for (int k : p.sizes) {
    const unsigned long uk = static_cast<unsigned long>(k);
    expo += uk * (uk - 1) / 2;
  }
  for (std::size_t i = 0; i + 1 < d; ++i)
    expo += static_cast<unsigned long>(p.sizes[i]) *
                static_cast<unsigned long>(p.sizes[i + 1]) -
            1;
  return falling_factorial(n, static_cast<unsigned long>(d) + 1) *
         multinomial(s, extras) * pow2(expo);
}

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::C1:
      return "C1";
    case CaseLabel::C2:
      return "C2";
    case CaseLabel::C31:
      return "C31";
    case CaseLabel::C32:
      return "C32";
    case CaseLabel::C33:
      return "C33";
    case CaseLabel::C41:
      return "C41";
    case CaseLabel::C42:
      return "C42";
    case CaseLabel::C43:
      return "C43";
    case CaseLabel::TSmall:
      return "T-small";
    case CaseLabel::TFullEndheavy:
      return "T-full-endheavy";
    case CaseLabel::TFullAdjacent:
      return "T-full-adjacent";
    case CaseLabel::H2Shaped:
      return "H2-shaped";
    case CaseLabel::Degenerate:
      return "degenerate";
  }
  return "?";
}

namespace {

// Max over interior centers i (1 < i < d, 1-based) of the extras inside the
// window (i-1, i, i+1); requires d >= 3.
int max_window_extras(const std::vector<int>& sizes) {
  const int d = static_cast<int>(sizes.size());
  int m = 0;
  for (int i = 2; i <= d - 1; ++i) {
    const int window = sizes[static_cast<std::size_t>(i - 2)] +
                       sizes[static_cast<std::size_t>(i - 1)] +
                       sizes[static_cast<std::size_t>(i)] - 3;
    if (window > m) m = window;
  }
  return m;
}

CaseLabel classify_thm1(const LayerProfile& p) {
  const int d = p.depth();
  if (d < 3) throw domain_error("classify_profile: thm1 scheme needs d >= 3");
  const int s = p.extras();
  if (s == 0) return CaseLabel::Degenerate;
  auto size = [&](int pos) { return p.sizes[static_cast<std::size_t>(pos - 1)]; };

  const int m = max_window_extras(p.sizes);
  if (5 * m < 3 * s) return CaseLabel::C1;
  if (m <= s - 2) return CaseLabel::C2;

  if (m == s - 1) {
    // The witness structure is forced: one window holding s-1 extras, one
    // doubleton elsewhere, singletons everywhere else.
    bool c31 = false, c32 = false, c33 = false;
    for (int i = 2; i <= d - 1; ++i) {
      if (size(i - 1) + size(i) + size(i + 1) != s + 2) continue;
      int t = 0;
      bool clean = true;
      for (int pos = 1; pos <= d && clean; ++pos) {
        if (pos >= i - 1 && pos <= i + 1) continue;
        if (size(pos) == 1) continue;
        if (size(pos) == 2 && t == 0)
          t = pos;
        else
          clean = false;
      }
      if (!clean || t == 0) continue;
      if (t != i - 2 && t != i + 2)
        c31 = true;
      else if (t == i - 2 && size(i + 1) >= 2)
        c32 = true;
      else if (t == i + 2 && size(i - 1) >= 3)
        c33 = true;
    }
    if (c31) return CaseLabel::C31;
    if (c32) return CaseLabel::C32;
    if (c33) return CaseLabel::C33;
    throw internal_error("classify_profile: unmatched m = s-1 profile");
  }

  if (m == s) {
    auto singleton_outside = [&](int lo, int hi) {
      for (int pos = 1; pos <= d; ++pos)
        if ((pos < lo || pos > hi) && size(pos) != 1) return false;
      return true;
    };
    for (int i = 2; i <= d - 1; ++i)
      if (size(i - 1) + size(i) + size(i + 1) == s + 3 &&
          singleton_outside(i - 1, i + 1) && size(i - 1) >= 2 && size(i + 1) >= 2)
        return CaseLabel::C41;
    if (size(d - 1) + size(d) == s + 2 && singleton_outside(d - 1, d))
      return CaseLabel::C42;
    for (int i = 2; i <= d - 1; ++i)
      if (size(i - 1) + size(i) == s + 2 && singleton_outside(i - 1, i))
        return CaseLabel::C43;
    throw internal_error("classify_profile: unmatched m = s profile");
  }

  throw internal_error("classify_profile: window extras exceed total extras");
}

CaseLabel classify_thm2(const LayerProfile& p) {
  const int d = p.depth();
  const int s = p.extras();
  if (s == 0) return CaseLabel::Degenerate;
  int t = 0;
  for (int k : p.sizes)
    if (k > 1) ++t;
  if (t < s) return CaseLabel::TSmall;
  // t == s: every non-singleton layer is a doubleton.
  auto size = [&](int pos) { return p.sizes[static_cast<std::size_t>(pos - 1)]; };
  for (int pos : {1, 2, d - 2, d - 1, d})
    if (pos >= 1 && pos <= d && size(pos) == 2) return CaseLabel::TFullEndheavy;
  for (int i = 1; i <= d - 1; ++i)
    if (size(i) == 2 && size(i + 1) == 2) return CaseLabel::TFullAdjacent;
  return CaseLabel::H2Shaped;
}

}  // namespace

CaseLabel classify_profile(const LayerProfile& p, Scheme scheme) {
  p.validate();
  return scheme == Scheme::thm1 ? classify_thm1(p) : classify_thm2(p);
}

std::map<CaseLabel, BigCount> case_decomposition(unsigned long n, unsigned long d,
                                                 Scheme scheme) {
  check_pair_count_domain(n, d);
  if (scheme == Scheme::thm1 && d < 3)
    throw domain_error("case_decomposition: thm1 scheme needs d >= 3");
  std::map<CaseLabel, BigCount> out;
  for_each_composition(static_cast<int>(n) - 1, static_cast<int>(d),
                       [&](const std::vector<int>& sizes) {
                         const LayerProfile p{std::vector<int>(sizes)};
                         out[classify_profile(p, scheme)] += profile_term(n, p);
                       });
  return out;
}

namespace {

// Mass of every profile at fixed max-window-extras value, via a DP whose
// state carries the last two layer sizes and the running maximum. Exact
// rational weights as in dp_pair_count.
std::map<int, BigCount> window_stratified_masses(unsigned long n, unsigned long d) {
  const int budget = static_cast<int>(n) - 1;
  const int depth = static_cast<int>(d);

  struct State {
    int prev2 = 1;  // size of layer (current-1); layer 0 is the root
    int prev = 1;   // size of the current layer
    int used = 0;
    int max_extras = 0;
    bool operator<(const State& o) const {
      return std::tie(prev2, prev, used, max_extras) <
             std::tie(o.prev2, o.prev, o.used, o.max_extras);
    }
  };

  std::map<State, BigRatio> dp;
  for (int k = 1; k + (depth - 1) <= budget; ++k)
    dp[State{1, k, k, 0}] = BigRatio(pow2_choose2(static_cast<unsigned long>(k)),
                                     factorial(static_cast<unsigned long>(k)));

  for (int layer = 2; layer <= depth; ++layer) {
    std::map<State, BigRatio> next;
    const int layers_left = depth - layer;
    for (const auto& [st, mass] : dp) {
      const BigCount fan = pow2(static_cast<unsigned long>(st.prev)) - BigCount(1);
      for (int c = 1; st.used + c + layers_left <= budget; ++c) {
        // Placing layer `layer` completes the window centered at layer-1,
        // an interior center whenever layer >= 3.
        int max_extras = st.max_extras;
        if (layer >= 3)
          max_extras = std::max(max_extras, st.prev2 + st.prev + c - 3);
        const BigRatio w(pow2_choose2(static_cast<unsigned long>(c)) *
                             pow_count(fan, static_cast<unsigned long>(c)),
                         factorial(static_cast<unsigned long>(c)));
        next[State{st.prev, c, st.used + c, max_extras}] += mass * w;
      }
    }
    dp = std::move(next);
  }

  std::map<int, BigRatio> strata;
  for (const auto& [st, mass] : dp)
    if (st.used == budget) strata[st.max_extras] += mass;

  std::map<int, BigCount> out;
  const BigRatio scale{factorial(n)};
  for (const auto& [m, mass] : strata) {
    BigRatio scaled = mass * scale;
    if (!scaled.is_integer())
      throw internal_error("window_stratified_masses: non-integral stratum");
    if (!scaled.is_zero()) out[m] = scaled.to_count();
  }
  return out;
}

using ShapeSet = std::set<std::vector<int>>;

BigCount sum_terms(unsigned long n, const ShapeSet& shapes) {
  BigCount acc;
  for (const std::vector<int>& sizes : shapes)
    acc += profile_term(n, LayerProfile(std::vector<int>(sizes)));
  return acc;
}

ShapeSet difference(const ShapeSet& a, const ShapeSet& b) {
  ShapeSet out;
  for (const std::vector<int>& v : a)
    if (!b.count(v)) out.insert(v);
  return out;
}

ShapeSet set_union(const ShapeSet& a, const ShapeSet& b) {
  ShapeSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::map<CaseLabel, BigCount> stratified_thm1(unsigned long n, unsigned long d) {
  const int s = static_cast<int>(n) - static_cast<int>(d) - 1;
  const int depth = static_cast<int>(d);
  std::map<int, BigCount> strata = window_stratified_masses(n, d);

  std::map<CaseLabel, BigCount> out;
  if (s == 0) {
    BigCount total;
    for (const auto& [m, mass] : strata) total += mass;
    out[CaseLabel::Degenerate] = total;
    return out;
  }

  BigCount c1, c2;
  for (const auto& [m, mass] : strata) {
    if (5 * m < 3 * s)
      c1 += mass;
    else if (m <= s - 2)
      c2 += mass;
  }
  if (!c1.is_zero()) out[CaseLabel::C1] = c1;
  if (!c2.is_zero()) out[CaseLabel::C2] = c2;

  // Case 3 shapes: window of s-1 extras at center i, one doubleton at t,
  // singletons elsewhere; membership filtered back to the m = s-1 stratum.
  // For s <= 2 that stratum satisfies 5m < 3s and already sits inside C1.
  ShapeSet set31, set32, set33;
  auto build_window_shape = [&](int i, int a, int b, int c,
                                int t) -> std::vector<int> {
    std::vector<int> sizes(static_cast<std::size_t>(depth), 1);
    sizes[static_cast<std::size_t>(i - 2)] += a;
    sizes[static_cast<std::size_t>(i - 1)] += b;
    sizes[static_cast<std::size_t>(i)] += c;
    if (t != 0) sizes[static_cast<std::size_t>(t - 1)] += 1;
    return sizes;
  };
  if (5 * (s - 1) >= 3 * s) {
    for (int i = 2; i <= depth - 1; ++i)
      for (int a = 0; a <= s - 1; ++a)
        for (int b = 0; a + b <= s - 1; ++b) {
          const int c = s - 1 - a - b;
          for (int t = 1; t <= depth; ++t) {
            if (t >= i - 1 && t <= i + 1) continue;
            std::vector<int> sizes = build_window_shape(i, a, b, c, t);
            if (max_window_extras(sizes) != s - 1) continue;
            if (t != i - 2 && t != i + 2)
              set31.insert(sizes);
            else if (t == i - 2 && sizes[static_cast<std::size_t>(i)] >= 2)
              set32.insert(sizes);
            else if (t == i + 2 && sizes[static_cast<std::size_t>(i - 2)] >= 3)
              set33.insert(sizes);
          }
        }
    const BigCount sum31 = sum_terms(n, set31);
    const BigCount sum32 = sum_terms(n, difference(set32, set31));
    const BigCount sum33 =
        sum_terms(n, difference(set33, set_union(set31, set32)));
    BigCount stratum3 = strata.count(s - 1) ? strata[s - 1] : BigCount(0);
    if (sum31 + sum32 + sum33 != stratum3)
      throw internal_error(
          "stratified_thm1: case 3 shapes disagree with stratum");
    if (!sum31.is_zero()) out[CaseLabel::C31] = sum31;
    if (!sum32.is_zero()) out[CaseLabel::C32] = sum32;
    if (!sum33.is_zero()) out[CaseLabel::C33] = sum33;
  }

  // Case 4 shapes: all extras inside one window.
  ShapeSet set41, set42, set43;
  for (int i = 2; i <= depth - 1; ++i)
    for (int a = 1; a <= s - 1; ++a)
      for (int b = 0; a + b <= s - 1; ++b) {
        const int c = s - a - b;
        if (c < 1) continue;
        set41.insert(build_window_shape(i, a, b, c, 0));
      }
  for (int a = 0; a <= s; ++a) {
    std::vector<int> sizes(static_cast<std::size_t>(depth), 1);
    sizes[static_cast<std::size_t>(depth - 2)] += a;
    sizes[static_cast<std::size_t>(depth - 1)] += s - a;
    set42.insert(sizes);
  }
  for (int i = 2; i <= depth - 1; ++i)
    for (int a = 0; a <= s; ++a) {
      std::vector<int> sizes(static_cast<std::size_t>(depth), 1);
      sizes[static_cast<std::size_t>(i - 2)] += a;
      sizes[static_cast<std::size_t>(i - 1)] += s - a;
      set43.insert(sizes);
    }
  const BigCount sum41 = sum_terms(n, set41);
  const BigCount sum42 = sum_terms(n, difference(set42, set41));
  const BigCount sum43 =
      sum_terms(n, difference(set43, set_union(set41, set42)));
  BigCount stratum4 = strata.count(s) ? strata[s] : BigCount(0);
  if (sum41 + sum42 + sum43 != stratum4)
    throw internal_error("stratified_thm1: case 4 shapes disagree with stratum");
  if (!sum41.is_zero()) out[CaseLabel::C41] = sum41;
  if (!sum42.is_zero()) out[CaseLabel::C42] = sum42;
  if (!sum43.is_zero()) out[CaseLabel::C43] = sum43;
  return out;
}

std::map<CaseLabel, BigCount> stratified_thm2(unsigned long n, unsigned long d) {
  const int s = static_cast<int>(n) - static_cast<int>(d) - 1;
  const int depth = static_cast<int>(d);
  const BigCount total = dp_pair_count(n, d, 0);

  std::map<CaseLabel, BigCount> out;
  if (s == 0) {
    out[CaseLabel::Degenerate] = total;
    return out;
  }

  const BigCount full = dp_pair_count(n, d, 2);
  const BigCount small = total - full;
  if (!small.is_zero()) out[CaseLabel::TSmall] = small;

  // All size-<=2 profiles with s extras: choose the s doubleton positions.
  BigCount endheavy, adjacent, shaped;
  std::vector<int> positions;
  std::function<void(int, int)> choose = [&](int next, int left) {
    if (left == 0) {
      std::vector<int> sizes(static_cast<std::size_t>(depth), 1);
      for (int pos : positions) sizes[static_cast<std::size_t>(pos - 1)] = 2;
      const BigCount term = profile_term(n, LayerProfile(std::vector<int>(sizes)));
      bool heavy_end = false;
      for (int pos : {1, 2, depth - 2, depth - 1, depth})
        if (pos >= 1 && pos <= depth &&
            std::find(positions.begin(), positions.end(), pos) != positions.end())
          heavy_end = true;
      bool has_adjacent = false;
      for (std::size_t j = 0; j + 1 < positions.size(); ++j)
        if (positions[j + 1] == positions[j] + 1) has_adjacent = true;
      if (heavy_end)
        endheavy += term;
      else if (has_adjacent)
        adjacent += term;
      else
        shaped += term;
      return;
    }
    for (int pos = next; pos + left - 1 <= depth; ++pos) {
      positions.push_back(pos);
      choose(pos + 1, left - 1);
      positions.pop_back();
    }
  };
  if (s <= depth) choose(1, s);
  if (endheavy + adjacent + shaped != full)
    throw internal_error("stratified_thm2: doubleton patterns disagree with stratum");
  if (!endheavy.is_zero()) out[CaseLabel::TFullEndheavy] = endheavy;
  if (!adjacent.is_zero()) out[CaseLabel::TFullAdjacent] = adjacent;
  if (!shaped.is_zero()) out[CaseLabel::H2Shaped] = shaped;
  return out;
}

}  // namespace

std::map<CaseLabel, BigCount> case_decomposition_stratified(unsigned long n,
                                                            unsigned long d,
                                                            Scheme scheme) {
  check_pair_count_domain(n, d);
  if (scheme == Scheme::thm1 && d < 3)
    throw domain_error("case_decomposition_stratified: thm1 scheme needs d >= 3");
  return scheme == Scheme::thm1 ? stratified_thm1(n, d) : stratified_thm2(n, d);
}

MasterCheck master_upper_bound_check(unsigned long n, unsigned long d,
                                     const BigCount& diameter_count) {
  MasterCheck check;
  check.twice_diameter_count = BigCount(2) * diameter_count;
  check.pair_count = eccentric_pair_count(n, d);
  check.holds = check.twice_diameter_count <= check.pair_count;
  check.equality = check.twice_diameter_count == check.pair_count;
  return check;
}

}  // namespace diamcensus
