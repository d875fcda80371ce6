#include "reflect/quartic.hpp"
#include "reflect/symmat.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace reflect;

namespace {

const std::vector<MonicCubic> kFixtures{{0, -1, -1}, {-2, -3, 6}, {0, -1, 0}, {0, 1, 0}, {0, -4, -1}};

// characteristic polynomial coefficients of [[d1,u,v],[u,d2,w],[v,w,d3]]
MonicCubic charpoly(long d1, long d2, long d3, long u, long v, long w) {
  long tr = d1 + d2 + d3;
  long m2 = d1 * d2 + d1 * d3 + d2 * d3 - u * u - v * v - w * w;
  long det = d1 * (d2 * d3 - w * w) - u * (u * d3 - v * w) + v * (u * w - d2 * v);
  return {-tr, m2, -det};
}

long brute_symmat(const MonicCubic& g, long bound) {
  long n = 0;
  for (long d1 = -bound; d1 <= bound; ++d1)
    for (long d2 = -bound; d2 <= bound; ++d2)
      for (long d3 = -bound; d3 <= bound; ++d3)
        for (long u = -bound; u <= bound; ++u)
          for (long v = -bound; v <= bound; ++v)
            for (long w = -bound; w <= bound; ++w) n += charpoly(d1, d2, d3, u, v, w) == g;
  return n;
}

}  // namespace

TEST(Quartic, SingleClassWithTrivialSymmetries) { EXPECT_EQ(count_quartics(MonicCubic{0, -1, -1}), Rat(1, 2)); }

TEST(Quartic, RepresentativesHaveTheResolvent) {
  for (const auto& g : kFixtures)
    for (const auto& o : enumerate_quartics(g)) {
      EXPECT_TRUE(quartic_resolvent(o.rep).same_shift_class(g)) << o.rep.str();
      EXPECT_EQ(24 % o.stab, 0) << o.rep.str();
      EXPECT_EQ(o.stab % 2, 0) << "-I must stabilize " << o.rep.str();
      EXPECT_EQ(o.stab, stabilizer_order(o.rep));
    }
}

TEST(Quartic, ClassesAreDistinct) {
  for (const auto& g : kFixtures) {
    auto orbits = enumerate_quartics(g);
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (std::size_t j = i + 1; j < orbits.size(); ++j) EXPECT_FALSE(equivalent(orbits[i].rep, orbits[j].rep));
  }
}

TEST(Quartic, SearchIsCompleteOnSmallBox) {
  // every quartic with small coefficients and resolvent in the class of g is
  // equivalent to one of the enumerated representatives
  for (const auto& g : {MonicCubic{0, -1, -1}, MonicCubic{0, -4, -1}}) {
    auto orbits = enumerate_quartics(g);
    const long B = 5;
    long hits = 0;
    for (long a = -B; a <= B; ++a)
      for (long b = -B; b <= B; ++b)
        for (long c = -B; c <= B; ++c)
          for (long d = -B; d <= B; ++d)
            for (long e = -B; e <= B; ++e) {
              if (a == 0 && b == 0 && c == 0 && d == 0 && e == 0) continue;
              auto f = BinaryForm::quartic(a, b, c, d, e);
              if (disc(f) == 0) continue;
              if (!quartic_resolvent(f).same_shift_class(g)) continue;
              ++hits;
              bool found = false;
              for (const auto& o : orbits) found = found || equivalent(o.rep, f);
              EXPECT_TRUE(found) << f.str();
            }
    EXPECT_GT(hits, 0) << g.str();
  }
}

TEST(Quartic, ShiftClassContract) {
  for (const auto& g : {MonicCubic{0, -1, -1}, MonicCubic{0, -4, -1}}) {
    for (long t : {-3L, 2L, 5L}) {
      auto s = g.shifted(t);
      EXPECT_EQ(invariants_IJ(s), invariants_IJ(g));
      EXPECT_EQ(count_quartics(s), count_quartics(g));
      EXPECT_EQ(count_1211q(s), count_1211q(g));
    }
  }
  EXPECT_THROW(invariants_IJ(MonicCubic{0, 0, 0}), SingularResolvent);
  EXPECT_THROW(count_quartics(MonicCubic{0, 0, 0}), SingularResolvent);
}

TEST(Quartic, SignConditionsPartition) {
  for (const auto& g : kFixtures) {
    auto orbits = enumerate_quartics(g);
    Rat parts = weighted(orbits, SignCondition::Indefinite) + weighted(orbits, SignCondition::PosDef) +
                weighted(orbits, SignCondition::NegDef);
    EXPECT_EQ(parts, weighted(orbits, SignCondition::Any)) << g.str();
    EXPECT_LE(weighted(orbits, SignCondition::FourReal), weighted(orbits, SignCondition::Indefinite));
    if (g.disc() < 0) EXPECT_EQ(weighted(orbits, SignCondition::Indefinite), weighted(orbits, SignCondition::Any));
  }
}

TEST(Quartic, RealRootCount) {
  EXPECT_EQ(real_root_count(BinaryForm::quartic(1, 0, -5, 0, 4)), 4);  // (x^2-1)(x^2-4)
  EXPECT_EQ(real_root_count(BinaryForm::quartic(1, 0, 0, 0, 1)), 0);
  EXPECT_EQ(real_root_count(BinaryForm::quartic(0, 1, 0, -1, -1)), 2);  // root at infinity plus one real
}

TEST(SymmetricMatrices, AgreeWithBruteForce) {
  for (const auto& g : {MonicCubic{0, -1, 0}, MonicCubic{-2, -3, 6}, MonicCubic{0, 1, 0}, MonicCubic{0, -2, 0},
                        MonicCubic{-3, 0, 0}, MonicCubic{0, -3, -2}}) {
    long bound = 0;
    Int budget = g.g2 * g.g2 - 2 * g.g1;
    while (Int(bound + 1) * (bound + 1) <= budget) ++bound;
    EXPECT_EQ(count_symmetric_matrices(g), brute_symmat(g, bound)) << g.str();
  }
}

TEST(SymmetricMatrices, EigenvaluesZeroPlusMinusOne) {
  // six diagonal matrices and six with a single off-diagonal pair
  EXPECT_EQ(count_symmetric_matrices(MonicCubic{0, -1, 0}), 12);
  EXPECT_EQ(count_symmetric_matrices(MonicCubic{-2, -3, 6}), 0);
  EXPECT_EQ(count_symmetric_matrices(MonicCubic{0, 1, 0}), 0);
}

TEST(SymmetricMatrices, ClosedUnderSignedPermutations) {
  for (const auto& g : {MonicCubic{0, -1, 0}, MonicCubic{0, -3, -2}, MonicCubic{-3, 0, 0}}) {
    auto ms = symmetric_matrices(g);
    std::set<Sym3> all(ms.begin(), ms.end());
    for (const auto& m : ms) {
      // conjugate by diag(-1, 1, 1): flips u and v
      EXPECT_TRUE(all.count(Sym3{m[0], m[1], m[2], -m[3], -m[4], m[5]}));
      // conjugate by the transposition of the first two coordinates
      EXPECT_TRUE(all.count(Sym3{m[1], m[0], m[2], m[3], m[5], m[4]}));
    }
  }
}

TEST(Supereven, ListedFormsForMinus23) {
  std::vector<BinaryForm> listed{BinaryForm::quartic(0, 4, 12, 8, -4), BinaryForm::quartic(-1, 4, 12, 8, 0),
                                 BinaryForm::quartic(-1, 0, 0, 8, -4), BinaryForm::quartic(-1, 4, 0, 0, -4)};
  MonicCubic res = quartic_resolvent(listed[2]);
  EXPECT_EQ(res.str(), "y^3 - 16y + 64");
  auto classes = supereven_classes(res);
  ASSERT_EQ(classes.size(), 4u);
  std::set<std::size_t> hit;
  for (const auto& f : listed) {
    EXPECT_TRUE(is_supereven(f));
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (evenly_equivalent(classes[i].rep, f)) hit.insert(i);
  }
  EXPECT_EQ(hit.size(), 4u);
}

TEST(Supereven, TauIsAnInvolutionOnClasses) {
  for (const auto& o : supereven_classes(MonicCubic{0, -1, -1}.scaled4())) {
    auto t = tau(o.rep);
    EXPECT_TRUE(is_supereven(t));
    EXPECT_TRUE(evenly_equivalent(tau(t), o.rep));
  }
}

TEST(QuarticIdentities, FixtureSuite) {
  for (const auto& g : kFixtures) {
    Report r = check_BQ(g);
    EXPECT_TRUE(r.pass()) << g.str() << ": " << (r.violations.empty() ? "" : r.violations.front());
  }
}

TEST(QuarticIdentities, EvenResolventOnlyWarns) {
  Report r = check_BQ(MonicCubic{0, -2, 0});  // disc 32
  EXPECT_FALSE(r.warnings.empty());
}
