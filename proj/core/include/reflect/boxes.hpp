#pragma once
// 2x3x3 boxes: pairs (A, B) of integer symmetric 3x3 matrices with resolvent
// det(Ax - B), up to (A, B) -> (X A X^T, X B X^T) for X in GL3(Z).
//
// There is no reduction theory here: the search is complete only for boxes
// with a representative inside the entry bound, and two boxes are merged only
// when a bounded search finds an equivalence.  Both limits are reported.

#include "reflect/forms.hpp"

#include <array>
#include <string>
#include <vector>

namespace reflect {

// symmetric 3x3 stored as (m11, m22, m33, m12, m13, m23)
using SymInt3 = std::array<long, 6>;

struct Box {
  SymInt3 A, B;
  friend bool operator==(const Box& x, const Box& y) { return x.A == y.A && x.B == y.B; }
  friend bool operator<(const Box& x, const Box& y) {
    return x.A != y.A ? x.A < y.A : x.B < y.B;
  }
};

std::string to_string(const SymInt3& m);
// coefficients of det(Ax - B), highest degree first
std::array<Int, 4> box_resolvent(const Box& b);

struct BoxClass {
  Box rep;
  int stab = 0;  // |{X in GL3(Z): X fixes (A, B)}|, searched with |X_ij| <= 2
  long seen = 0;  // pairs inside the entry bound that fell into this class
};

struct BoxSearch {
  std::vector<BoxClass> classes;
  Rat h;  // sum of 1/stab
  long pairs_found = 0;
  int entry_bound = 0;
  bool complete_certified = false;  // never true; kept explicit for reports
};

// f = c0 x^3 + c1 x^2 + c2 x + c3 without multiple roots
BoxSearch search_boxes(const std::array<Int, 4>& f, int entry_bound, bool even_diagonal);

}  // namespace reflect
