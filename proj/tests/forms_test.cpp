#include "reflect/equiv.hpp"
#include "reflect/forms.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace reflect;

TEST(Forms, ActionIsRightAction) {
  for (int deg : {2, 3, 4})
    for (int i = 0; i < 200; ++i) {
      auto f = oracle::random_form(deg, 9);
      Mat2 g1 = oracle::random_gl2(), g2 = oracle::random_gl2();
      EXPECT_EQ(act(act(f, g1), g2), act(f, g1 * g2));
    }
}

TEST(Forms, ActionMatchesSubstitution) {
  for (int i = 0; i < 100; ++i) {
    auto f = oracle::random_form(3, 9);
    Mat2 g = oracle::random_gl2();
    auto h = act(f, g);
    for (long x = -2; x <= 2; ++x)
      for (long y = -2; y <= 2; ++y) EXPECT_EQ(h.eval(x, y), f.eval(g.p * x + g.q * y, g.r * x + g.s * y));
  }
}

TEST(Forms, DiscriminantInvariantUnderGL2) {
  for (int deg : {2, 3, 4})
    for (int i = 0; i < 200; ++i) {
      auto f = oracle::random_form(deg, 7);
      EXPECT_EQ(disc(act(f, oracle::random_gl2())), disc(f));
    }
}

TEST(Forms, CubicDiscriminantFormula) {
  for (int i = 0; i < 200; ++i) {
    oracle::C4 c{oracle::uniform(-20, 20), oracle::uniform(-20, 20), oracle::uniform(-20, 20),
                 oracle::uniform(-20, 20)};
    EXPECT_EQ(disc(BinaryForm::cubic(c[0], c[1], c[2], c[3])), Int(oracle::cubic_disc(c)));
  }
}

TEST(Forms, CubicDiscriminantIsZeroOrOneModFour) {
  for (int i = 0; i < 500; ++i) {
    Int D = disc(oracle::random_form(3, 30));
    EXPECT_TRUE(mod(D, 4) == 0 || mod(D, 4) == 1) << D;
  }
}

TEST(Forms, SuperdiscriminantIsTranslationInvariant) {
  for (int i = 0; i < 200; ++i) {
    long a = oracle::uniform(-9, 9), b = oracle::uniform(-9, 9), c = oracle::uniform(-9, 9), t = oracle::uniform(-5, 5);
    auto f = BinaryForm::quadratic(a, b, c);
    // a(x + t)^2 + b(x + t) + c
    auto g = BinaryForm::quadratic(a, 2 * a * t + b, a * t * t + b * t + c);
    EXPECT_EQ(superdiscriminant(f), superdiscriminant(g));
    EXPECT_EQ(superdiscriminant(f), Int(a) * (b * b - 4 * a * c));
  }
}

TEST(Forms, QuarticInvariantsUnderGL2) {
  for (int i = 0; i < 200; ++i) {
    auto f = oracle::random_form(4, 6);
    auto h = act(f, oracle::random_gl2());
    EXPECT_EQ(quartic_I(h), quartic_I(f));
    EXPECT_EQ(quartic_J(h), quartic_J(f));
  }
}

TEST(Forms, ResolventMatchesDefinition) {
  for (int i = 0; i < 200; ++i) {
    auto f = oracle::random_form(4, 9);
    const Int &a = f[0], &b = f[1], &c = f[2], &d = f[3], &e = f[4];
    MonicCubic g = quartic_resolvent(f);
    EXPECT_EQ(g.g2, Int(-c));
    EXPECT_EQ(g.g1, Int(b * d - 4 * a * e));
    EXPECT_EQ(g.g0, Int(4 * a * c * e - b * b * e - a * d * d));
  }
}

TEST(Forms, ResolventShiftClassIsGL2Invariant) {
  for (int i = 0; i < 200; ++i) {
    auto f = oracle::random_nondegenerate(4, 6);
    auto h = act(f, oracle::random_gl2());
    EXPECT_TRUE(quartic_resolvent(h).same_shift_class(quartic_resolvent(f))) << f.str();
  }
}

TEST(Forms, ShiftClassKey) {
  MonicCubic g{0, -1, -1};
  for (long t = -6; t <= 6; ++t) {
    EXPECT_TRUE(g.shifted(t).same_shift_class(g));
    EXPECT_EQ(g.shifted(t).disc(), g.disc());
  }
  EXPECT_FALSE((MonicCubic{0, -1, 1}).same_shift_class(g));
}

TEST(Forms, SplittingTypes) {
  auto f = BinaryForm::cubic(1, 0, -1, -1);  // x^3 - x - 1, disc -23
  EXPECT_EQ(splitting_type(f, 23), SplittingType::T1_21);
  EXPECT_EQ(splitting_type(f, 2), SplittingType::T3);
  EXPECT_EQ(splitting_type(BinaryForm::cubic(0, 1, 1, 0), 5), SplittingType::T111);  // xy(x + y)
  EXPECT_EQ(splitting_type(BinaryForm::cubic(5, 5, 10, 5), 5), SplittingType::T0);
  EXPECT_EQ(splitting_type(BinaryForm::cubic(1, 0, 0, 5), 5), SplittingType::T1_3);
}

TEST(Forms, RootCountMatchesBruteForce) {
  for (long p : {2L, 3L, 5L, 7L})
    for (int i = 0; i < 100; ++i) {
      auto f = oracle::random_form(3, 10);
      long n = 0;
      bool zero = true;
      for (const auto& c : f.c) zero = zero && mod(c, p) == 0;
      if (zero) {
        EXPECT_EQ(root_count_p1(f, p), p + 1);
        continue;
      }
      for (long x = 0; x < p; ++x) n += mod(f.eval(x, 1), p) == 0;
      n += mod(f.eval(1, 0), p) == 0;
      EXPECT_EQ(root_count_p1(f, p), n) << f.str() << " p=" << p;
    }
}

TEST(Equivalence, FindsRandomTransforms) {
  for (int deg : {3, 4})
    for (int i = 0; i < 60; ++i) {
      auto f = oracle::random_nondegenerate(deg, 5);
      auto h = act(f, oracle::random_gl2(4));
      auto isos = isomorphisms(f, h);
      ASSERT_FALSE(isos.empty()) << f.str() << " -> " << h.str();
      for (const auto& g : isos) EXPECT_EQ(act(f, g), h);
    }
}

TEST(Equivalence, StabilizerIsAGroup) {
  for (int i = 0; i < 40; ++i) {
    auto f = oracle::random_nondegenerate(3, 4);
    auto st = stabilizer(f);
    for (const auto& a : st)
      for (const auto& b : st) EXPECT_NE(std::find(st.begin(), st.end(), a * b), st.end());
  }
}

TEST(Equivalence, RejectsDegenerate) {
  EXPECT_THROW(isomorphisms(BinaryForm::cubic(1, 0, 0, 0), BinaryForm::cubic(1, 0, 0, 0)), ZeroDiscriminant);
}
