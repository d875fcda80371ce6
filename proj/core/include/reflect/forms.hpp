#pragma once
// Integral binary forms of degree 2..4, the substitution action, invariants
// and factorization shapes mod p.

#include "reflect/arith.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace reflect {

// f(x,y) = sum c[i] x^(n-i) y^i, most significant coefficient first.
struct BinaryForm {
  int degree = 0;
  std::vector<Int> c;

  BinaryForm() = default;
  BinaryForm(int deg, std::vector<Int> coeffs);
  static BinaryForm quadratic(const Int& a, const Int& b, const Int& c);
  static BinaryForm cubic(const Int& a, const Int& b, const Int& c, const Int& d);
  static BinaryForm quartic(const Int& a, const Int& b, const Int& c, const Int& d, const Int& e);

  const Int& operator[](int i) const { return c[i]; }
  Int eval(const Int& x, const Int& y) const;
  Int content() const;
  std::string str() const;  // "x^2y + xy^2" style

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree == b.degree && a.c == b.c;
  }
  friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }
  // lexicographic on (a, b, c, ...) as signed integers
  friend bool operator<(const BinaryForm& a, const BinaryForm& b);
};

// [[p, q], [r, s]] acting by f -> f(px + qy, rx + sy).
struct Mat2 {
  Int p = 1, q = 0, r = 0, s = 1;
  Int det() const { return p * s - q * r; }
  bool unimodular() const { Int d = det(); return d == 1 || d == -1; }
  Mat2 operator*(const Mat2& o) const {
    return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s};
  }
  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s;
  }
  friend bool operator<(const Mat2& a, const Mat2& b);
  static Mat2 identity() { return {}; }
  // inverse of a unimodular matrix
  Mat2 inverse() const;
};

// Right action: act(act(f, g1), g2) == act(f, g1 * g2).
// Dehomogenized this is f2(x) = (rx+s)^n f1((px+q)/(rx+s)).
BinaryForm act(const BinaryForm& f, const Mat2& g);

Int disc(const BinaryForm& f);
// a(b^2 - 4ac) for ax^2 + bx + c
Int superdiscriminant(const BinaryForm& f);

// Hessian covariant of a cubic: (b^2-3ac) x^2 + (bc-9ad) xy + (c^2-3bd) y^2
BinaryForm cubic_hessian(const BinaryForm& f);
// Quartic invariants and the quartic covariant with leading coefficient 8ac - 3b^2
Int quartic_I(const BinaryForm& f);
Int quartic_J(const BinaryForm& f);
BinaryForm quartic_hessian(const BinaryForm& f);

// y^3 + g2 y^2 + g1 y + g0
struct MonicCubic {
  Int g2, g1, g0;
  Int eval(const Int& y) const { return ((y + g2) * y + g1) * y + g0; }
  Int disc() const;
  MonicCubic shifted(const Int& t) const;  // g(y + t)
  // invariants of the shift class: I = g2^2 - 3 g1, J = 2 g2^3 - 9 g1 g2 + 27 g0
  Int I() const { return g2 * g2 - 3 * g1; }
  Int J() const { return 2 * g2 * g2 * g2 - 9 * g1 * g2 + 27 * g0; }
  // members of a shift class share (I, J, g2 mod 3)
  bool same_shift_class(const MonicCubic& o) const;
  // 64 g(y/4)
  MonicCubic scaled4() const { return {4 * g2, 16 * g1, 64 * g0}; }
  std::string str() const;
  friend bool operator==(const MonicCubic& a, const MonicCubic& b) {
    return a.g2 == b.g2 && a.g1 == b.g1 && a.g0 == b.g0;
  }
};

MonicCubic quartic_resolvent(const BinaryForm& f);

enum class SplittingType { T111, T12, T3, T1_21, T1_3, T0 };
std::string to_string(SplittingType t);
std::optional<SplittingType> parse_splitting(const std::string& s);

// distinct roots of f mod p in P^1(F_p) with multiplicities
struct ProjRoot {
  long x, y;  // normalized: (x, 1) or (1, 0)
  int mult;
};
std::vector<ProjRoot> roots_mod_p(const BinaryForm& f, long p);

SplittingType splitting_type(const BinaryForm& f, long p);
// distinct roots in P^1(F_p); p + 1 when f vanishes mod p
long root_count_p1(const BinaryForm& f, long p);
// Whether the cubic ring attached to f is maximal at p: fails iff f == 0 mod p
// or some multiple root of f mod p lifts to a value divisible by p^2.
bool maximal_at(const BinaryForm& f, long p);

}  // namespace reflect
