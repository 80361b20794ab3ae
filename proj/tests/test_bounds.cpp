#include <doctest.h>

#include <algorithm>

#include "xorcache/bounds.hpp"

using namespace xorcache;

namespace {

// Independent route for the classic scheme's rate at M = 1/K:
// N - 1 + min((K-1)/(2N), 1 - 1/K).
Rat mn_rate_at_one_over_k(int n, int k) {
  return Rat(n - 1) + std::min(Rat(k - 1, 2 * n), Rat(1) - Rat(1, k));
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("cut-set bound matches the worked examples") {
  CHECK(cutset_bound(3, 3, Rat(1, 3)) == Rat(2));
  CHECK(cutset_bound(3, 4, Rat(1, 4)) == Rat(9, 4));
  CHECK(cutset_bound(4, 4, Rat(1, 4)) == Rat(3));
  CHECK(cutset_bound(3, 5, Rat(1, 5)) == Rat(12, 5));
  CHECK(cutset_bound(3, 5, Rat(0)) == Rat(3));
}

TEST_CASE("cut-set bound scans every cut size") {
  // At large M the maximizing s is no longer min(N, K).
  CHECK(cutset_bound(4, 4, Rat(1)) == Rat(1));        // s = 2: 2 - 2/2 = 1
  CHECK(cutset_bound(2, 2, Rat(1)) == Rat(1, 2));     // s = 1: 1 - 1/2
  CHECK(cutset_bound(1, 1, Rat(0)) == Rat(1));
  CHECK_THROWS_AS(cutset_bound(3, 3, Rat(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(cutset_bound(0, 3, Rat(0)), std::invalid_argument);
}

TEST_CASE("cut-set bound is non-increasing in the cache size") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 6; ++k) {
      Rat previous = cutset_bound(n, k, Rat(0));
      for (int i = 1; i <= 12; ++i) {
        const Rat value = cutset_bound(n, k, Rat(i, 12));
        CHECK(value <= previous);
        previous = value;
      }
    }
  }
}

TEST_CASE("achievable rate is N(1-M) on its domain") {
  CHECK(achievable_rate(4, 4, Rat(1, 4)) == Rat(3));
  CHECK(achievable_rate(3, 5, Rat(1, 5)) == Rat(12, 5));
  CHECK(achievable_rate(3, 3, Rat(0)) == Rat(3));
  CHECK(achievable_rate(7, 9, Rat(0)) == Rat(7));
  CHECK_THROWS_AS(achievable_rate(3, 3, Rat(1, 2)), std::domain_error);
  CHECK_THROWS_AS(achievable_rate(3, 3, Rat(-1, 8)), std::domain_error);
  CHECK_THROWS_AS(achievable_rate(3, 2, Rat(0)), std::domain_error);
}

TEST_CASE("classic-scheme segment matches both derivation routes") {
  // Line interpolation and the closed form at M = 1/K agree.
  CHECK(mn_segment_rate(3, 3, Rat(1, 3)) == Rat(7, 3));
  CHECK(mn_segment_rate(3, 3, Rat(1, 3)) == mn_rate_at_one_over_k(3, 3));
  for (int n = 1; n <= 8; ++n) {
    for (int k = n; k <= 10; ++k) {
      CHECK(mn_segment_rate(n, k, Rat(1, k)) == mn_rate_at_one_over_k(n, k));
    }
  }
}

TEST_CASE("classic-scheme segment endpoints") {
  CHECK(mn_segment_rate(2, 4, Rat(1, 2)) == Rat(3, 2));
  CHECK(mn_segment_rate(5, 7, Rat(0)) == Rat(5));
  CHECK(mn_segment_rate(1, 9, Rat(0)) == Rat(1));
  CHECK_THROWS_AS(mn_segment_rate(2, 4, Rat(3, 4)), std::domain_error);
}

TEST_CASE("memory sharing interpolates linearly") {
  const int n = 6;
  const int k = 8;
  const RatePoint zero{Rat(0), Rat(n)};
  const RatePoint coded{Rat(1, k), Rat(n) - Rat(n, k)};
  CHECK(memory_share(zero, coded, Rat(1, 2 * k)) == Rat(n) - Rat(n, 2 * k));
  CHECK(memory_share(zero, coded, zero.m) == zero.r);
  CHECK(memory_share(zero, coded, coded.m) == coded.r);

  // Slope through (0,3) and (1/4,9/4) is -3, so the rate at 1/8 is 21/8.
  const RatePoint a{Rat(0), Rat(3)};
  const RatePoint b{Rat(1, 4), Rat(9, 4)};
  CHECK((b.r - a.r) / (b.m - a.m) == Rat(-3));
  CHECK(memory_share(a, b, Rat(1, 8)) == Rat(21, 8));

  CHECK_THROWS_AS(memory_share(a, b, Rat(1, 2)), std::domain_error);
  CHECK_THROWS_AS(memory_share(b, a, Rat(1, 8)), std::invalid_argument);
}

TEST_CASE("envelope equals N(1-M) up to 1/K") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = n; k <= 8; ++k) {
      for (int i = 0; i <= 4; ++i) {
        const Rat m = Rat(i, 4 * k);
        CHECK(combined_envelope(n, k, m) == achievable_rate(n, k, m));
      }
    }
  }
}

TEST_CASE("envelope flattens between 1/K and N/K when K >= 2N") {
  CHECK(combined_envelope(2, 4, Rat(1, 4)) == Rat(3, 2));
  CHECK(combined_envelope(2, 4, Rat(3, 8)) == Rat(3, 2));
  CHECK(combined_envelope(2, 4, Rat(1, 2)) == Rat(3, 2));
  CHECK(combined_envelope(3, 4, Rat(1, 4)) == Rat(9, 4));
  CHECK_THROWS_AS(combined_envelope(3, 4, Rat(7, 8)), std::domain_error);
  CHECK_THROWS_AS(combined_envelope(4, 3, Rat(0)), std::domain_error);
}

TEST_CASE("envelope is convex and non-increasing on its domain") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = n; k <= 7; ++k) {
      const int steps = 8;
      std::vector<Rat> values;
      for (int i = 0; i <= steps; ++i) {
        values.push_back(combined_envelope(n, k, Rat(i * n, steps * k)));
      }
      for (int i = 0; i + 1 <= steps; ++i) CHECK(values[i + 1] <= values[i]);
      // Midpoint convexity on the equally spaced grid.
      for (int i = 1; i < steps; ++i) {
        CHECK(values[i] * 2 <= values[i - 1] + values[i + 1]);
      }
    }
  }
}

TEST_CASE("coded point beats the classic segment at 1/K, strictly for N > 1") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = n; k <= 12; ++k) {
      const Rat ours = achievable_rate(n, k, Rat(1, k));
      const Rat classic = mn_segment_rate(n, k, Rat(1, k));
      CHECK(ours <= classic);
      if (n > 1) CHECK(ours < classic);
      if (k >= 2 * n) CHECK(ours == mn_segment_rate(n, k, Rat(n, k)));
    }
  }
}

TEST_CASE("tightness on the whole certified domain") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = n; k <= 8; ++k) {
      for (int i = 0; i <= 4; ++i) {
        const Rat m = Rat(i, 4 * k);
        CHECK(achievable_rate(n, k, m) == cutset_bound(n, k, m));
      }
    }
  }
}

TEST_CASE("results are invariant under unreduced operands") {
  CHECK(Rat(25, 100) == Rat(1, 4));
  CHECK(cutset_bound(3, 4, Rat(25, 100)) == cutset_bound(3, 4, Rat(1, 4)));
  CHECK(achievable_rate(3, 4, Rat(3, 12)) == achievable_rate(3, 4, Rat(1, 4)));
  CHECK(mn_segment_rate(3, 4, Rat(9, 12)) == mn_segment_rate(3, 4, Rat(3, 4)));
  CHECK(combined_envelope(3, 4, Rat(6, 12)) == combined_envelope(3, 4, Rat(1, 2)));
}

}  // TEST_SUITE
