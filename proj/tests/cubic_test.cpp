#include "reflect/cubic.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace reflect;

TEST(Cubic, WorkedValues) {
  EXPECT_EQ(h(Int(1)), Rat(1, 6));
  EXPECT_EQ(h(Int(-27)), Rat(1));
  EXPECT_EQ(h(Int(-27), {LocalCondition::traced3()}), Rat(1, 2));
}

TEST(Cubic, ImpossibleDiscriminantsAreEmpty) {
  for (long D : {2L, 3L, -2L, -1L, 6L, 7L, -5L}) EXPECT_TRUE(enumerate_cubics(Int(D)).empty()) << D;
  EXPECT_THROW(h(Int(0)), ZeroDiscriminant);
}

TEST(Cubic, RepresentativesAreCanonical) {
  for (long D = -150; D <= 150; ++D) {
    if (D == 0) continue;
    for (const auto& c : enumerate_cubics(Int(D))) {
      EXPECT_EQ(disc(c.rep), Int(D));
      EXPECT_EQ(reduce_cubic(c.rep), c.rep);
      EXPECT_TRUE(c.stab == 1 || c.stab == 2 || c.stab == 3 || c.stab == 6) << c.rep.str();
    }
  }
}

TEST(Cubic, ReductionIsClassInvariant) {
  for (int i = 0; i < 150; ++i) {
    auto f = oracle::random_nondegenerate(3, 4);
    auto g = act(f, oracle::random_gl2());
    EXPECT_EQ(reduce_cubic(g), reduce_cubic(f)) << f.str() << " vs " << g.str();
  }
}

TEST(Cubic, ClassesMatchOrbitOracle) {
  const long max_disc = 30;
  auto part = oracle::cubic_bfs_partition(max_disc, 8, 32);
  for (long D = -max_disc; D <= max_disc; ++D) {
    if (D == 0) continue;
    std::set<BinaryForm> lib, found;
    for (const auto& c : enumerate_cubics(Int(D))) lib.insert(c.rep);
    for (const auto& comp : part.by_disc[D]) {
      std::set<BinaryForm> reps;
      for (const auto& f : comp) reps.insert(reduce_cubic(BinaryForm::cubic(f[0], f[1], f[2], f[3])));
      ASSERT_EQ(reps.size(), 1u) << "D=" << D;
      EXPECT_TRUE(found.insert(*reps.begin()).second) << "D=" << D;
    }
    EXPECT_EQ(found, lib) << "D=" << D;
  }
}

TEST(Cubic, KnownStabilizers) {
  // S3 permutes the three lines of xy(x + y); -I sends a cubic to its negative
  auto f = BinaryForm::cubic(0, 1, 1, 0);
  EXPECT_EQ(stabilizer_order(f), 6);
  auto g = BinaryForm::cubic(1, 0, -1, -1);
  EXPECT_EQ(stabilizer_order(g), 1);
}

TEST(Cubic, ReflectionSweep) {
  Report r = check_cubic_ON(60);
  EXPECT_TRUE(r.pass()) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_EQ(r.checked, 120);
}

TEST(Cubic, ShintaniCoefficientsTermwise) {
  auto plus = shintani_coeffs(1, 50, false), minus = shintani_coeffs(-1, 50, false);
  auto plus3 = shintani_coeffs(1, 50, true), minus3 = shintani_coeffs(-1, 50, true);
  for (std::size_t i = 0; i < 50; ++i) {
    EXPECT_EQ(plus3[i].second, minus[i].second) << "n=" << i + 1;
    EXPECT_EQ(minus3[i].second, 3 * plus[i].second) << "n=" << i + 1;
  }
}

TEST(Cubic, MarkedRootWeightDecomposes) {
  // roots in P^1(F_p): 111 -> 3, 12 -> 1, 3 -> 0, 1^21 -> 2, 1^3 -> 1, 0 -> p + 1
  for (long p : {2L, 5L, 7L})
    for (long D : {-23L, -31L, -44L, 49L, 81L, -175L, 148L, 229L}) {
      auto cls = enumerate_cubics(Int(D));
      auto at = [&](SplittingType t) { return h(cls, {LocalCondition::splitting(p, t)}); };
      Rat rhs = 3 * at(SplittingType::T111) + at(SplittingType::T12) + 2 * at(SplittingType::T1_21) +
                at(SplittingType::T1_3) + (p + 1) * at(SplittingType::T0);
      EXPECT_EQ(h(cls, {LocalCondition::marked_root(p)}), rhs) << "p=" << p << " D=" << D;
    }
}

TEST(Cubic, SplittingTypesPartitionTheCount) {
  for (long p : {2L, 5L})
    for (long D = -120; D <= 120; D += 7) {
      if (D == 0) continue;
      auto cls = enumerate_cubics(Int(D));
      Rat total = 0;
      for (auto t : {SplittingType::T111, SplittingType::T12, SplittingType::T3, SplittingType::T1_21,
                     SplittingType::T1_3, SplittingType::T0})
        total += h(cls, {LocalCondition::splitting(p, t)});
      EXPECT_EQ(total, h(cls)) << D;
    }
}

TEST(Cubic, DiscriminantReductionFixtures) {
  for (auto [p, D] : std::vector<std::pair<long, long>>{{5, -575}, {2, -92}, {5, 25}, {2, 4}, {7, -1323}}) {
    Report r = check_disc_reduction(p, Int(D));
    EXPECT_TRUE(r.pass()) << p << " " << D << ": " << (r.violations.empty() ? "" : r.violations.front());
  }
  for (auto [p, D] : reduction_pairs(7, 20, 2000)) EXPECT_TRUE(check_disc_reduction(p, Int(D)).pass()) << p << " " << D;
}

TEST(Cubic, DiscriminantReductionMissesWildRingsAtTwo) {
  // D/4 = 2 or 3 mod 4: every ring of discriminant D is maximal at 2 and
  // wildly ramified there, so the right side is zero while h(D) is not.
  Report r = check_disc_reduction(2, Int(-1992));
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_EQ(r.rows.at(0).front(), "1/2");
  EXPECT_EQ(r.rows.at(0).back(), "0");
}

TEST(Cubic, DiscriminantReductionRejectsBadInput) {
  EXPECT_THROW(check_disc_reduction(3, Int(-243)), BadPrimes);
  EXPECT_THROW(check_disc_reduction(5, Int(-23)), BadInput);
}
