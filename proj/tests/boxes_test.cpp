#include "reflect/boxes.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace reflect;

namespace {

using M3 = std::array<std::array<long, 3>, 3>;

M3 full(const SymInt3& s) {
  return {{{s[0], s[3], s[4]}, {s[3], s[1], s[5]}, {s[4], s[5], s[2]}}};
}

SymInt3 packed(const M3& m) { return {m[0][0], m[1][1], m[2][2], m[0][1], m[0][2], m[1][2]}; }

M3 mul(const M3& a, const M3& b) {
  M3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

M3 transpose(const M3& a) {
  M3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

M3 random_gl3() {
  M3 x{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int s = 0; s < 5; ++s) {
    M3 e{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    int i = static_cast<int>(oracle::uniform(0, 2)), j = static_cast<int>(oracle::uniform(0, 2));
    if (i == j)
      e[i][i] = -1;
    else
      e[i][j] = oracle::uniform(-1, 1);
    x = mul(x, e);
  }
  return x;
}

}  // namespace

TEST(Boxes, MinusTwentyThree) {
  BoxSearch s = search_boxes({1, 0, -1, -1}, 2, false);
  ASSERT_EQ(s.classes.size(), 2u);
  EXPECT_EQ(s.h, Rat(1));
  EXPECT_FALSE(s.complete_certified);
  for (const auto& c : s.classes) {
    EXPECT_EQ(c.stab, 2);
    auto r = box_resolvent(c.rep);
    EXPECT_EQ(r[0], 1);
    EXPECT_EQ(r[1], 0);
    EXPECT_EQ(r[2], -1);
    EXPECT_EQ(r[3], -1);
  }
}

TEST(Boxes, EvenDiagonalDoubledCubic) {
  BoxSearch s = search_boxes({2, 0, -2, -2}, 2, true);
  ASSERT_EQ(s.classes.size(), 1u);
  EXPECT_EQ(s.h, Rat(1, 2));
  const auto& b = s.classes[0].rep;
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(b.A[i] % 2, 0);
    EXPECT_EQ(b.B[i] % 2, 0);
  }
}

TEST(Boxes, ResolventInvariantUnderGL3) {
  for (int t = 0; t < 200; ++t) {
    Box b;
    for (auto& x : b.A) x = oracle::uniform(-3, 3);
    for (auto& x : b.B) x = oracle::uniform(-3, 3);
    M3 X = random_gl3();
    Box c{packed(mul(mul(X, full(b.A)), transpose(X))), packed(mul(mul(X, full(b.B)), transpose(X)))};
    EXPECT_EQ(box_resolvent(c), box_resolvent(b));
  }
}

TEST(Boxes, ResolventOfDiagonalPair) {
  // det(diag(1,1,1) x - diag(0,1,-1)) = x (x - 1)(x + 1)
  Box b{{1, 1, 1, 0, 0, 0}, {0, 1, -1, 0, 0, 0}};
  auto r = box_resolvent(b);
  EXPECT_EQ(r[0], 1);
  EXPECT_EQ(r[1], 0);
  EXPECT_EQ(r[2], -1);
  EXPECT_EQ(r[3], 0);
}

TEST(Boxes, RejectsMultipleRoots) {
  EXPECT_THROW(search_boxes({1, 0, 0, 0}, 1, false), MultipleRoots);
  EXPECT_THROW(search_boxes({1, -2, 1, 0}, 1, false), MultipleRoots);
}
