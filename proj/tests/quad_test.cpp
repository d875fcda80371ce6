#include "reflect/quad.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace reflect;

namespace {

// every (a, b, c) with -|a| < b <= |a| and a(b^2 - 4ac) = I, by direct search
std::vector<QuadClass> brute(long I) {
  std::vector<QuadClass> out;
  for (long a = -std::labs(I); a <= std::labs(I); ++a) {
    if (a == 0 || I % a != 0) continue;
    for (long b = -std::labs(a) + 1; b <= std::labs(a); ++b) {
      long num = b * b - I / a;
      if (num % (4 * a) != 0) continue;
      out.push_back({a, b, num / (4 * a)});
    }
  }
  return out;
}

}  // namespace

TEST(Quadratic, WorkedExampleFifteen) {
  auto q = [](long I, bool even, bool real) { return count_q(Int(I), {even, real}); };
  EXPECT_EQ(q(15, false, false), 5);
  EXPECT_EQ(q(15, false, true), 4);
  EXPECT_EQ(q(60, false, false), 18);
  EXPECT_EQ(q(60, true, false), 8);
  EXPECT_EQ(q(60, false, true), 13);
  EXPECT_EQ(q(60, true, true), 5);
  EXPECT_EQ(q(240, true, true), 18);
  EXPECT_EQ(q(240, true, false), 26);
}

TEST(Quadratic, EnumerationMatchesBruteForce) {
  for (long I = -200; I <= 200; ++I) {
    if (I == 0) continue;
    auto lib = enumerate_quadratics(Int(I));
    auto ref = brute(I);
    ASSERT_EQ(lib.size(), ref.size()) << "I=" << I;
    for (const auto& c : lib) {
      EXPECT_EQ(c.superdisc(), Int(I));
      EXPECT_TRUE(-abs(c.a) < c.b && c.b <= abs(c.a));
      EXPECT_NE(std::find(ref.begin(), ref.end(), c), ref.end());
    }
  }
}

TEST(Quadratic, OutputOrder) {
  auto v = enumerate_quadratics(Int(240));
  for (std::size_t i = 1; i < v.size(); ++i) {
    auto key = [](const QuadClass& c) { return std::make_tuple(Int(abs(c.a)), c.a, c.b); };
    EXPECT_LT(key(v[i - 1]), key(v[i]));
  }
}

TEST(Quadratic, ReflectionSweep) {
  Report r = check_quadratic_ON(120);
  EXPECT_TRUE(r.pass()) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_EQ(r.checked, 480);
}

TEST(Quadratic, RandomReflectionInstances) {
  for (int i = 0; i < 40; ++i) {
    long n = oracle::uniform(-2000, 2000);
    if (n == 0) continue;
    EXPECT_EQ(count_q(Int(4 * n), {true, true}), count_q(Int(n), {false, false})) << n;
    EXPECT_EQ(count_q(Int(4 * n), {true, false}), 2 * count_q(Int(n), {false, true})) << n;
  }
}

TEST(Quadratic, LegendreIdentities) {
  for (long p1 : {5L, 13L, 17L, 29L})
    for (long p3 : {3L, 7L, 11L, 19L, 23L}) {
      Report r = legendre_check(p1, p3);
      EXPECT_TRUE(r.pass()) << p1 << " " << p3;
    }
  EXPECT_THROW(legendre_check(7, 5), BadPrimes);
  EXPECT_THROW(legendre_check(9, 3), BadPrimes);
}

TEST(Quadratic, ZeroInvariantRejected) {
  EXPECT_THROW(enumerate_quadratics(Int(0)), ZeroInvariant);
  EXPECT_THROW(count_q(Int(0), {}), ZeroInvariant);
}
