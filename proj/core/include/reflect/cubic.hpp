#pragma once
// GL2(Z)-classes of binary cubic forms of fixed discriminant and their
// weighted counts under local conditions.

#include "reflect/equiv.hpp"
#include "reflect/report.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace reflect {

struct CubicClass {
  BinaryForm rep;  // reduce_cubic(rep) == rep
  int stab = 1;
  Int D;
};

// One canonical representative per class, sorted; empty when D = 2, 3 mod 4.
std::vector<CubicClass> enumerate_cubics(const Int& D);

struct LocalCondition {
  enum class Kind { Traced3, Splitting, MarkedRoot };
  Kind kind = Kind::Traced3;
  long p = 0;
  SplittingType type = SplittingType::T111;

  static LocalCondition traced3() { return {}; }
  static LocalCondition splitting(long p, SplittingType t) { return {Kind::Splitting, p, t}; }
  static LocalCondition marked_root(long p) { return {Kind::MarkedRoot, p, {}}; }
};

// Weight of one class under the conditions (0 when excluded).
Rat condition_weight(const BinaryForm& f, const std::vector<LocalCondition>& conds);

// sum over classes of weight / stab; 0 for D = 0 passed as a non-integral
// argument is the caller's business: h itself rejects D = 0.
Rat h(const Int& D, const std::vector<LocalCondition>& conds = {});
Rat h(const std::vector<CubicClass>& classes, const std::vector<LocalCondition>& conds = {});

// h3(-27D) = 3 h(D) for 0 < D <= B, h3(-27D) = h(D) for -B <= D < 0.
Report check_cubic_ON(long B);
Report check_cubic_ON(const std::vector<long>& Ds);

// h(D) = h(D/p^2, R_p) + h(D/p^4) - h(D/p^4, R_p)
//        + (2 h3(-27D/p^2, T_p(111)) - h3(-27D/p^2, T_p(3))) / c_inf
Report check_disc_reduction(long p, const Int& D);
// n random admissible pairs: p in {2, 5, 7, 11, 13}, 0 < |D| <= max_abs, and
// both D and D/p^2 discriminants
std::vector<std::pair<long, long>> reduction_pairs(std::uint64_t seed, int n, long max_abs);

// n -> h(sign n), or h3(sign 27 n) when traced.
std::vector<std::pair<long, Rat>> shintani_coeffs(int sign, long N, bool traced);

}  // namespace reflect
