#include "reflect/localfourier.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace reflect;

namespace {

Rat random_rat() {
  Rat r(oracle::uniform(-6, 6), oracle::uniform(1, 4));
  r.canonicalize();
  return r;
}

Cyclo random_cyclo(long p) {
  Cyclo x(p, Rat(0));
  for (long k = 0; k < p; ++k) x += random_rat() * Cyclo::zeta_power(p, k);
  return x;
}

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

const std::vector<std::array<long, 4>> kGroups{{3, 1, 1, 1}, {3, 1, 1, 3}, {2, 1, 2, 2}, {2, 2, 1, 4},
                                               {3, 2, 1, 3}, {5, 1, 1, 1}, {2, 1, 3, 1}, {2, 1, 0, 4}};

}  // namespace

TEST(Cyclotomic, RootsOfUnity) {
  for (long p : {2L, 3L, 5L, 7L}) {
    Cyclo sum(p, Rat(0));
    for (long k = 0; k < p; ++k) sum += Cyclo::zeta_power(p, k);
    EXPECT_TRUE(sum == Cyclo(p, Rat(0)));
    EXPECT_TRUE(Cyclo::zeta_power(p, p) == Cyclo(p, Rat(1)));
    EXPECT_TRUE(Cyclo::zeta_power(p, 2) * Cyclo::zeta_power(p, p - 1) == Cyclo::zeta_power(p, 1));
    EXPECT_TRUE(Cyclo::zeta_power(p, 1).conj() == Cyclo::zeta_power(p, p - 1));
  }
}

TEST(Cyclotomic, RingAxioms) {
  for (long p : {3L, 5L})
    for (int i = 0; i < 50; ++i) {
      Cyclo a = random_cyclo(p), b = random_cyclo(p), c = random_cyclo(p);
      EXPECT_TRUE(a * b == b * a);
      EXPECT_TRUE((a * b) * c == a * (b * c));
      EXPECT_TRUE(a * (b + c) == a * b + a * c);
      EXPECT_TRUE((a - a) == Cyclo(p, Rat(0)));
      EXPECT_TRUE((a * b).conj() == a.conj() * b.conj());
      // the real subfield of Q(zeta_3) is Q
      if (p == 3) EXPECT_TRUE((a * a.conj()).is_rational());
    }
}

TEST(FilteredGroup, LevelSizesAndPerp) {
  for (auto [p, f, e, h0] : kGroups) {
    FilteredGroup G = make_filtered_group(p, f, e, h0);
    long q = ipow(p, f);
    EXPECT_EQ(G.size, h0 * h0 * ipow(q, e));
    for (long i = 0; i <= e; ++i) {
      const auto& L = G.level(i);
      long n = std::count(L.begin(), L.end(), true);
      EXPECT_EQ(n, h0 * ipow(q, e - i)) << "i=" << i;
      // L_i^perp = L_{e-i}, checked by brute force
      const auto& M = G.level(e - i);
      for (long b = 0; b < G.size; ++b) {
        bool perp = true;
        for (long a = 0; a < G.size && perp; ++a)
          if (L[a] && G.pair(a, b) != 0) perp = false;
        EXPECT_EQ(perp, static_cast<bool>(M[b]));
      }
    }
    EXPECT_TRUE(validate(G).pass());
  }
}

TEST(FilteredGroup, PairingIsSymmetricBilinear) {
  FilteredGroup G = make_filtered_group(3, 1, 1, 3);
  for (int i = 0; i < 200; ++i) {
    long a = oracle::uniform(0, G.size - 1), b = oracle::uniform(0, G.size - 1), c = oracle::uniform(0, G.size - 1);
    EXPECT_EQ(G.pair(a, b), G.pair(b, a));
    auto da = G.digits(a), dc = G.digits(c);
    std::vector<long> s(da.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = (da[k] + dc[k]) % G.p;
    EXPECT_EQ(G.pair(G.index_of(s), b), (G.pair(a, b) + G.pair(c, b)) % G.p);
    EXPECT_EQ(G.pair(G.negate(a), b), (G.p - G.pair(a, b)) % G.p);
  }
}

TEST(FilteredGroup, RejectsBadParameters) {
  EXPECT_THROW(make_filtered_group(4, 1, 1, 1), BadParams);
  EXPECT_THROW(make_filtered_group(3, 1, 1, 2), BadParams);
  EXPECT_THROW(make_filtered_group(3, 0, 1, 1), BadParams);
  EXPECT_THROW(make_filtered_group(2, 1, 20, 1), BadParams);
}

TEST(Fourier, LevelIndicators) {
  for (auto [p, f, e, h0] : kGroups) {
    FilteredGroup G = make_filtered_group(p, f, e, h0);
    for (long i = 0; i <= e; ++i) {
      Report r = check_level_transform(G, i);
      EXPECT_TRUE(r.pass()) << p << "," << f << "," << e << "," << h0 << " i=" << i;
    }
  }
}

TEST(Fourier, LevelIndicatorValuesDirect) {
  FilteredGroup G = make_filtered_group(2, 1, 2, 2);
  long q = 2;
  for (long i = 0; i <= G.e; ++i) {
    auto hat = fourier(indicator(G, i), G);
    const auto& target = G.level(G.e - i);
    for (long b = 0; b < G.size; ++b) {
      Rat want = target[b] ? Rat(ipow(q, G.e - i)) : Rat(0);
      ASSERT_TRUE(hat.values[b].is_rational());
      EXPECT_EQ(hat.values[b].rational(), want);
    }
  }
}

TEST(Fourier, DoubleTransformAndParseval) {
  for (auto [p, f, e, h0] : kGroups) {
    FilteredGroup G = make_filtered_group(p, f, e, h0);
    if (G.size > 256) continue;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rat> v;
      for (long a = 0; a < G.size; ++a) v.push_back(random_rat());
      auto fn = from_rationals(G, v);
      EXPECT_TRUE(check_double_transform(G, fn).pass());
      EXPECT_TRUE(check_parseval(G, fn).pass());
    }
  }
}

TEST(Fourier, LevelIndexOutOfRange) {
  FilteredGroup G = make_filtered_group(3, 1, 1, 1);
  EXPECT_THROW(check_level_transform(G, 2), BadParams);
  EXPECT_THROW(check_level_transform(G, -1), BadParams);
}
