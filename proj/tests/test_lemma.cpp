#include <doctest.h>

#include <vector>

#include "diamcensus/errors.hpp"
#include "diamcensus/exact.hpp"
#include "diamcensus/lemma.hpp"
#include "diamcensus/profile.hpp"
#include "diamcensus/rng.hpp"

using namespace diamcensus;

namespace {

std::vector<BigRatio> vec(std::initializer_list<long> entries) {
  std::vector<BigRatio> x;
  for (long e : entries) x.emplace_back(e);
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("lemma");

TEST_CASE("quadratic functional by hand") {
  CHECK(f_quadratic(vec({1, 2, 3})) ==
        BigRatio(BigCount(1 + 4 + 9), BigCount(2)) + BigRatio(2 + 6));
  CHECK(f_quadratic(vec({0, 0, 0})).is_zero());
  CHECK(f_quadratic({BigRatio(BigCount(1), BigCount(2))}) ==
        BigRatio(BigCount(1), BigCount(8)));
  CHECK_THROWS_AS(f_quadratic({}), domain_error);
}

TEST_CASE("window maximum and both bounds on concentrated mass") {
  // all mass in one interior entry: split bound is tight
  const Lemma1Report r = check_lemma1(vec({0, 5, 0}));
  CHECK(r.s == BigRatio(5));
  CHECK(r.m == BigRatio(5));
  CHECK(r.f == BigRatio(BigCount(25), BigCount(2)));
  CHECK(r.bound_split == r.f);
  CHECK(r.bound_product == BigRatio(BigCount(75), BigCount(4)));
  CHECK(r.holds);
}

TEST_CASE("window maximum sees clipped end windows") {
  const Lemma1Report r = check_lemma1(vec({4, 0, 0, 1}));
  // centers 2 and 3 (1-based): windows 4+0+0 and 0+0+1
  CHECK(r.m == BigRatio(4));
  CHECK(r.s == BigRatio(5));
  CHECK(r.holds);
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(check_lemma1(vec({1, 2})), domain_error);
  CHECK_THROWS_AS(check_lemma1({BigRatio(1), BigRatio(-1), BigRatio(1)}),
                  domain_error);
}

TEST_CASE("bounds hold over an integer grid") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (int e = 0; e <= 3; ++e) {
          const Lemma1Report r = check_lemma1(vec({a, b, c, e}));
          CHECK(r.holds_split);
          CHECK(r.holds_product);
        }
}

TEST_CASE("bounds hold on random rational vectors") {
  CounterRng rng(20240817u);
  for (int trial = 0; trial < 2000; ++trial) {
    const int d = 3 + static_cast<int>(rng.below(10));
    std::vector<BigRatio> x;
    x.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      const long num = static_cast<long>(rng.below(64));
      const long den = 1 + static_cast<long>(rng.below(7));
      x.push_back(BigRatio(BigCount(static_cast<unsigned long>(num)),
                           BigCount(static_cast<unsigned long>(den))));
    }
    CHECK(check_lemma1(x).holds);
  }
}

TEST_CASE("exponent identity on hand-worked profiles") {
  CHECK(check_exponent_identity(LayerProfile({3})).holds);       // d = 1
  CHECK(check_exponent_identity(LayerProfile({2, 1})).holds);
  CHECK(check_exponent_identity(LayerProfile({2, 2})).holds);
  const ExponentIdentityReport r = check_exponent_identity(LayerProfile({2, 2}));
  CHECK(r.lhs == BigRatio(5));
  CHECK(r.rhs == BigRatio(5));
}

TEST_CASE("exponent identity over every small profile") {
  for (int n = 2; n <= 10; ++n)
    for (int d = 1; d <= n - 1; ++d)
      for_each_composition(n - 1, d, [&](const std::vector<int>& sizes) {
        CHECK(check_exponent_identity(LayerProfile(std::vector<int>(sizes)))
                  .holds);
      });
}

TEST_SUITE_END();
