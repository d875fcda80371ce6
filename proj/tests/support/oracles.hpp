#pragma once
// Independent oracles: they share only the form arithmetic with the library
// (coefficients, action, discriminant), never its reduction or search code.

#include "reflect/forms.hpp"

#include <array>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

namespace oracle {

using C4 = std::array<long, 4>;

inline long cubic_disc(const C4& f) {
  long a = f[0], b = f[1], c = f[2], d = f[3];
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

struct C4Hash {
  std::size_t operator()(const C4& f) const {
    std::size_t h = 0;
    for (long x : f) h = h * 1000003u + static_cast<std::size_t>(x + 500);
    return h;
  }
};

// Generators of GL2(Z) acting on (a, b, c, d): swap x and y, x -> -x,
// x -> x + y and x -> x - y.
inline std::array<C4, 4> cubic_neighbours(const C4& f) {
  long a = f[0], b = f[1], c = f[2], d = f[3];
  return {C4{d, c, b, a}, C4{-a, b, -c, d}, C4{a, 3 * a + b, 3 * a + 2 * b + c, a + b + c + d},
          C4{a, -3 * a + b, 3 * a - 2 * b + c, -a + b - c + d}};
}

// Partition of every cubic form with |coeffs| <= box and 0 < |disc| <= max_disc
// into orbits, connecting forms by generator steps that stay within walk.
struct CubicPartition {
  std::map<long, std::vector<std::vector<C4>>> by_disc;  // disc -> components (box forms only)
};

inline CubicPartition cubic_bfs_partition(long max_disc, long box, long walk) {
  std::vector<C4> seeds;
  for (long a = -box; a <= box; ++a)
    for (long b = -box; b <= box; ++b)
      for (long c = -box; c <= box; ++c)
        for (long d = -box; d <= box; ++d) {
          C4 f{a, b, c, d};
          long D = cubic_disc(f);
          if (D != 0 && std::labs(D) <= max_disc) seeds.push_back(f);
        }
  std::unordered_map<C4, int, C4Hash> comp;
  std::vector<long> comp_disc;
  std::vector<std::vector<C4>> members;
  for (const auto& s : seeds) {
    if (comp.count(s)) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    comp_disc.push_back(cubic_disc(s));
    std::deque<C4> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      C4 f = queue.front();
      queue.pop_front();
      bool in_box = true;
      for (long x : f) in_box = in_box && std::labs(x) <= box;
      if (in_box) members[id].push_back(f);
      for (const auto& g : cubic_neighbours(f)) {
        bool ok = true;
        for (long x : g) ok = ok && std::labs(x) <= walk;
        if (!ok || comp.count(g)) continue;
        comp[g] = id;
        queue.push_back(g);
      }
    }
  }
  CubicPartition out;
  for (std::size_t i = 0; i < members.size(); ++i) out.by_disc[comp_disc[i]].push_back(members[i]);
  return out;
}

// Proper equivalence classes of primitive quadratic forms of discriminant D by
// brute force: forms with |a|, |b|, |c| <= box, joined by S: (a,b,c) -> (c,-b,a)
// and T^{+-1}: (a,b,c) -> (a, b +- 2a, a +- b + c) inside walk.
inline long quadratic_bfs_class_number(long D, long box, long walk) {
  using Q = std::array<long, 3>;
  std::set<Q> seen;
  long classes = 0;
  for (long a = -box; a <= box; ++a) {
    if (a == 0) continue;
    for (long b = -box; b <= box; ++b) {
      long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (std::labs(c) > box) continue;
      if (std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)) != 1) continue;
      if (D < 0 && a < 0) continue;  // positive definite forms only
      Q s{a, b, c};
      if (seen.count(s)) continue;
      ++classes;
      std::deque<Q> queue{s};
      seen.insert(s);
      while (!queue.empty()) {
        Q f = queue.front();
        queue.pop_front();
        for (Q g : {Q{f[2], -f[1], f[0]}, Q{f[0], f[1] + 2 * f[0], f[0] + f[1] + f[2]},
                    Q{f[0], f[1] - 2 * f[0], f[0] - f[1] + f[2]}}) {
          if (std::labs(g[0]) > walk || std::labs(g[1]) > walk || std::labs(g[2]) > walk) continue;
          if (seen.insert(g).second) queue.push_back(g);
        }
      }
    }
  }
  return classes;
}

inline int kronecker(long D, long n) {
  // (D/n) for n > 0, D = 0, 1 mod 4
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    long r = ((D % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (D mod n / n)
  long a = ((D % n) + n) % n, m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

// Dirichlet's class number formula for fundamental D < 0.
inline long class_number_formula(long D) {
  long n = -D, s = 0;
  for (long a = 1; a < n; ++a) s += kronecker(D, a) * a;
  long w = D == -3 ? 6 : D == -4 ? 4 : 2;
  return -w * s / (2 * n);
}

// Deterministic generator for property tests; REFLECT_TEST_SEED overrides.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen([] {
    const char* s = std::getenv("REFLECT_TEST_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0x5eedULL;
  }());
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline reflect::Mat2 random_gl2(int steps = 6) {
  reflect::Mat2 m;
  for (int i = 0; i < steps; ++i) {
    switch (uniform(0, 3)) {
      case 0: m = m * reflect::Mat2{0, 1, 1, 0}; break;
      case 1: m = m * reflect::Mat2{-1, 0, 0, 1}; break;
      case 2: m = m * reflect::Mat2{1, uniform(-2, 2), 0, 1}; break;
      default: m = m * reflect::Mat2{1, 0, uniform(-2, 2), 1}; break;
    }
  }
  return m;
}

inline reflect::BinaryForm random_form(int degree, long bound) {
  std::vector<reflect::Int> c;
  for (int i = 0; i <= degree; ++i) c.push_back(uniform(-bound, bound));
  return reflect::BinaryForm(degree, c);
}

inline reflect::BinaryForm random_nondegenerate(int degree, long bound) {
  for (;;) {
    auto f = random_form(degree, bound);
    if (reflect::disc(f) != 0) return f;
  }
}

}  // namespace oracle
