#include <doctest.h>

#include "diamcensus/errors.hpp"
#include "diamcensus/exact.hpp"
#include "diamcensus/formulas.hpp"
#include "diamcensus/profile.hpp"

using namespace diamcensus;

TEST_SUITE_BEGIN("formulas");

TEST_CASE("long-range family count at frozen golden points") {
  CHECK(h1_count(6, 3) == BigCount(77760));
  CHECK(h1_count(4, 3) == BigCount(108));
  // one more by hand: (d-2) * n_(d-1) * 3^2 * 2^1 / 2 at (5, 4)
  CHECK(h1_count(5, 4) == BigCount(1080));
}

TEST_CASE("long-range count rejects out-of-window parameters") {
  CHECK_THROWS_AS(h1_count(5, 2), domain_error);
  CHECK_THROWS_AS(h1_count(5, 5), domain_error);
  CHECK_THROWS_AS(h1_count(5, 6), domain_error);
}

TEST_CASE("short-range family count at frozen golden points") {
  CHECK(h2_count(9, 7) == BigCount(3810240));
  CHECK(h2_count(5, 4) == BigCount(60));
  // smallest admissible window: 3d > 2n forces d >= 4 already at n = 5
  CHECK(h2_count(7, 5) == BigCount(37800));
}

TEST_CASE("short-range count rejects out-of-window parameters") {
  CHECK_THROWS_AS(h2_count(9, 6), domain_error);  // 3d = 2n exactly
  CHECK_THROWS_AS(h2_count(2, 1), domain_error);
  CHECK_THROWS_AS(h2_count(3, 2), domain_error);
  CHECK_THROWS_AS(h2_count(6, 6), domain_error);
  CHECK_THROWS_AS(h2_count(6, 7), domain_error);
}

TEST_CASE("snake outcome and partition counts at frozen points") {
  CHECK(snake_procedure_count(9, 7) == BigCount(2177280));
  CHECK(snake_partition_count(9, 7) == BigCount(362880));
  // s = 0: one pattern, n! orderings, no choice factor
  CHECK(snake_partition_count(5, 4) == BigCount(120));
  CHECK(snake_procedure_count(5, 4) == BigCount(120));
}

TEST_CASE("each partition carries exactly six choices per doubled part") {
  const unsigned long six = 6;
  for (unsigned long n = 5; n <= 22; ++n) {
    for (unsigned long d = 1; d < n; ++d) {
      if (n < d + 1 || 2 * d < n + 3) continue;
      const unsigned long s = n - d - 1;
      CHECK(snake_procedure_count(n, d) ==
            snake_partition_count(n, d) * pow_count(BigCount(six), s));
    }
  }
}

TEST_CASE("snake counts vanish when the doubled parts cannot fit") {
  // s = 1 doubled part but t = 0 slots
  CHECK(snake_procedure_count(7, 5).is_zero());
  CHECK(snake_partition_count(7, 5).is_zero());
}

TEST_CASE("snake counts reject a negative slot or surplus budget") {
  CHECK_THROWS_AS(snake_procedure_count(4, 3), domain_error);  // t = -1
  CHECK_THROWS_AS(snake_partition_count(4, 3), domain_error);
  CHECK_THROWS_AS(snake_procedure_count(5, 5), domain_error);  // s < 0
  CHECK_THROWS_AS(snake_partition_count(6, 7), domain_error);
}

TEST_CASE("block class bounds") {
  CHECK(block_bound(2).upper == BigCount(18));
  CHECK(block_bound(3).upper == BigCount(216));
  CHECK(block_bound(5).upper == BigCount(248832));
  CHECK(!block_bound(2).lower_factor.has_value());
  CHECK(!block_bound(2).lower_note.empty());
  CHECK_THROWS_AS(block_bound(1), domain_error);
}

TEST_CASE("long-range error ratio diagnostic") {
  // d^2 s^4 (11/12)^s at (10, 3): 9 * 1296 * 11^6/12^6 = 1771561/256
  const DiagnosticRatio r = error_ratio(10, 3, Scheme::thm1);
  CHECK(r.exact == BigRatio(BigCount(1771561), BigCount(256)));
  CHECK(r.decimal == r.exact.to_decimal());
  CHECK(error_ratio(4, 3, Scheme::thm1).exact.is_zero());  // s = 0
  CHECK_THROWS_AS(error_ratio(5, 2, Scheme::thm1), domain_error);
}

TEST_CASE("short-range error ratio diagnostic") {
  // s^2 (64/3)^s / d at (8, 5): 4 * 4096/9 / 5 = 16384/45
  const DiagnosticRatio r = error_ratio(8, 5, Scheme::thm2);
  CHECK(r.exact == BigRatio(BigCount(16384), BigCount(45)));
  CHECK(error_ratio(3, 1, Scheme::thm2).exact ==
        BigRatio(BigCount(64), BigCount(3)));
  CHECK(error_ratio(5, 4, Scheme::thm2).exact.is_zero());  // s = 0
  CHECK_THROWS_AS(error_ratio(5, 0, Scheme::thm2), domain_error);
  CHECK_THROWS_AS(error_ratio(5, 5, Scheme::thm2), domain_error);
}

TEST_SUITE_END();
