#pragma once
// Quadratics ax^2 + bx + c up to x -> x + t, counted by superdiscriminant.

#include "reflect/arith.hpp"
#include "reflect/report.hpp"

#include <vector>

namespace reflect {

// Translation representative: -|a| < b <= |a|.
struct QuadClass {
  Int a, b, c;
  Int superdisc() const { return a * (b * b - 4 * a * c); }
  bool real_roots() const { return b * b - 4 * a * c > 0; }
  friend bool operator==(const QuadClass& x, const QuadClass& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// One representative per translation class, sorted by (|a|, a, b).
std::vector<QuadClass> enumerate_quadratics(const Int& I);

struct QFlags {
  bool even_b = false;
  bool real_roots = false;
};
long count_q(const Int& I, QFlags flags);

// q2+(4n) = q(n) and q2(4n) = 2 q+(n) for 0 < |n| <= N.
Report check_quadratic_ON(long N);
Report check_quadratic_ON(const std::vector<long>& ns);

// q+(p1 p3) = 5 + (p1|p3) and q2(4 p1 p3) = 10 + 2 (p3|p1).
Report legendre_check(long p1, long p3);

}  // namespace reflect
