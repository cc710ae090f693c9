#include <gtest/gtest.h>

#include <random>

#include "chipgame/error.hpp"
#include "chipgame/predicates.hpp"

using namespace chipgame;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::NotFound;
}

// Divisibility by trial, independent of the modular shortcuts in the library.
std::uint64_t slow_gcd(std::uint64_t u, std::uint64_t v) {
  std::uint64_t best = 0;
  for (std::uint64_t d = 1; d <= std::max(u, v); ++d) {
    if (u % d == 0 && v % d == 0) best = d;
  }
  return best;
}

bool congruent(std::int64_t u, std::int64_t v, std::int64_t n) { return ((u - v) % n + n) % n == 0; }

}  // namespace

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(4, 6), 2u);
  EXPECT_EQ(gcd(5, 7), 1u);
  EXPECT_EQ(gcd(0, 9), 9u);
  EXPECT_EQ(gcd4(2, 4, 6, 8), 2u);
  EXPECT_EQ(gcd4(2, 4, 3, 9), 1u);
}

TEST(Gcd, ProductIdentity) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t u = rng() % 100000 + 1, v = rng() % 100000 + 1;
    EXPECT_EQ(gcd(u, v) * lcm(u, v), u * v);
  }
  for (std::uint64_t u = 0; u <= 40; ++u) {
    for (std::uint64_t v = 1; v <= 40; ++v) EXPECT_EQ(gcd(u, v), slow_gcd(u, v));
  }
}

TEST(Thm1Condition, Examples) {
  EXPECT_TRUE(thm1_condition(2, 3, 7));
  EXPECT_FALSE(thm1_condition(1, 2, 5));
  EXPECT_FALSE(thm1_condition(1, 3, 8));
  EXPECT_EQ(code_of([] { thm1_condition(3, 3, 7); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { thm1_condition(2, 7, 7); }), ErrorCode::Domain);
}

TEST(Thm1Condition, MatchesDefinitionAndReflection) {
  for (std::int64_t n = 3; n <= 60; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = a + 1; b < n; ++b) {
        const bool expect = !congruent(a, 2 * b, n) && !congruent(2 * a, b, n) &&
                            slow_gcd(static_cast<std::uint64_t>(b * b - a * a), n) == 1;
        ASSERT_EQ(thm1_condition(a, b, n), expect) << a << ' ' << b << ' ' << n;
        // (a, b) -> (n-b, n-a) is always a valid triple here.
        EXPECT_EQ(thm1_condition(n - b, n - a, n), expect);
      }
    }
  }
}

TEST(Thm2Condition, Examples) {
  const auto d1 = thm2_condition(1, 2, 3, 9);
  EXPECT_EQ(d1.d, 1u);
  EXPECT_EQ(d1.delta, 3u);
  EXPECT_TRUE(d1.divides_diff);
  EXPECT_TRUE(d1.divides_product);
  EXPECT_TRUE(d1.holds());

  EXPECT_FALSE(thm2_condition(1, 2, 4, 8).divides_diff);

  // b = 4 exceeds m = 3, so (2,4,3,9) is outside the game's regime.
  EXPECT_EQ(code_of([] { thm2_condition(2, 4, 3, 9); }), ErrorCode::Domain);
  const auto d3 = thm2_condition(2, 4, 6, 9);
  EXPECT_EQ(d3.d, 2u);
  EXPECT_EQ(d3.delta, 3u);
  EXPECT_TRUE(d3.divides_diff);
  EXPECT_TRUE(d3.divides_product);
}

TEST(Thm2Condition, HypothesisViolationIsDistinct) {
  EXPECT_EQ(code_of([] { thm2_condition(2, 4, 6, 8); }), ErrorCode::HypothesisViolation);
  EXPECT_EQ(code_of([] { thm2_condition(2, 5, 5, 8); }), ErrorCode::Domain);
}

TEST(Thm2Condition, FlagsRecomputeFromScratch) {
  for (std::uint64_t n = 3; n <= 25; ++n) {
    for (std::uint64_t m = 3; m <= 25; ++m) {
      for (std::uint64_t a = 1; a < std::min(m, n); ++a) {
        for (std::uint64_t b = a + 1; b < std::min(m, n); ++b) {
          if (slow_gcd(slow_gcd(a, b), slow_gcd(m, n)) != 1) continue;
          const auto dec = thm2_condition(a, b, m, n);
          EXPECT_EQ(a % dec.d + b % dec.d, 0u);
          EXPECT_EQ(m % dec.delta + n % dec.delta, 0u);
          EXPECT_EQ(dec.d, slow_gcd(a, b));
          EXPECT_EQ(dec.delta, slow_gcd(m, n));
          EXPECT_EQ(dec.divides_diff, (b * b - a * a) % m == 0);
          EXPECT_EQ(dec.divides_product, (dec.d * dec.delta) % m == 0);
        }
      }
    }
  }
}

TEST(Eq1Lemma, Examples) {
  EXPECT_TRUE(eq1_lemma_check(2, 3, 7));
  EXPECT_TRUE(eq1_lemma_check(1, 2, 4));
  EXPECT_EQ(code_of([] { eq1_lemma_check(1, 4, 9); }), ErrorCode::Domain);
}

TEST(Eq1Lemma, HoldsUnderPrecondition) {
  for (std::uint64_t n = 3; n <= 150; ++n) {
    for (std::uint64_t a = 1; a < n; ++a) {
      for (std::uint64_t b = a + 1; b < n; ++b) {
        if (slow_gcd(a + b, n) == 1 && slow_gcd(b - a, n) == 1) {
          ASSERT_TRUE(eq1_lemma_check(a, b, n)) << a << ' ' << b << ' ' << n;
        }
      }
    }
  }
}

TEST(Conjecture2Implication, Examples) {
  EXPECT_TRUE(conjecture2_implication(1, 2, 3, 9, true));
  EXPECT_TRUE(conjecture2_implication(1, 2, 4, 8, false));
  EXPECT_TRUE(conjecture2_implication(1, 3, 4, 8, true));
  EXPECT_FALSE(conjecture2_implication(1, 2, 4, 8, true));
  EXPECT_EQ(code_of([] { conjecture2_implication(1, 2, 4, 9, true); }), ErrorCode::Domain);
}

TEST(Predicates, WideArithmeticNearBound) {
  // b^2 would overflow 32 bits; the answer is computed exactly.
  const std::uint64_t n = 4294967291ULL;  // prime
  EXPECT_TRUE(thm1_condition(3, 4294967000ULL, n) ==
              (gcd(static_cast<std::uint64_t>(
                       (static_cast<unsigned __int128>(4294967000ULL) * 4294967000ULL - 9) % n),
                   n) == 1 &&
               (2 * 4294967000ULL) % n != 3 && 6 % n != 4294967000ULL));
}
