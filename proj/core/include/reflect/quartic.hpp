#pragma once
// Binary quartic forms with a fixed cubic resolvent shift class.
//
// Weights are 1/|Stab| with the stabilizer taken in GL2(Z), so -I always
// contributes and a form with only the trivial symmetries weighs 1/2.
//
// Supereven forms (4|b, 4|c, 8|d, 4|e) are counted up to the group of
// matrices [[p, q], [r, s]] with q even, which is exactly the subgroup of
// GL2(Z) preserving that lattice under f -> f(px + qy, rx + sy).  The map
// tau: (a, b, c, d, e) -> (e/4, d/2, c, 2b, 4a) normalizes it; together they
// generate the group used for (1,2,1,1,1/4)-forms, which are the supereven
// forms read backwards and divided by 4.

#include "reflect/equiv.hpp"
#include "reflect/report.hpp"

#include <utility>
#include <vector>

namespace reflect {

enum class SignCondition { Any, Indefinite, PosDef, NegDef, FourReal, Definite };
std::string to_string(SignCondition c);
std::optional<SignCondition> parse_sign_condition(const std::string& s);

struct QuarticOrbit {
  BinaryForm rep;
  int stab = 1;
  int real_roots = 0;  // in P^1(R)
  int sign = 0;        // +1 / -1 for definite forms, 0 otherwise
};
bool satisfies(const QuarticOrbit& o, SignCondition c);
Rat weighted(const std::vector<QuarticOrbit>& orbits, SignCondition c);

// (I, J) shared by every quartic whose resolvent is a shift of g.
std::pair<Int, Int> invariants_IJ(const MonicCubic& g);

// exact count of real roots in P^1(R) of a quartic with nonzero discriminant
int real_root_count(const BinaryForm& f);

// Search bounds derived from the real orbits with invariants (I, J): every
// GL2(Z)-class has a representative with |a| <= a_max and
// |8ac - 3b^2| <= h_max.
struct QuarticBounds {
  long double a_max = 0, h_max = 0;
};
QuarticBounds quartic_bounds(const Int& I, const Int& J);

// All integral quartics (up to GL2(Z)) whose resolvent is g(y + t) for some t.
std::vector<QuarticOrbit> enumerate_quartics(const MonicCubic& g);
Rat count_quartics(const MonicCubic& g, SignCondition c = SignCondition::Any);

bool is_supereven(const BinaryForm& f);
BinaryForm tau(const BinaryForm& supereven);
// f -> h by some [[p, q], [r, s]] in GL2(Z) with q even
bool evenly_equivalent(const BinaryForm& f, const BinaryForm& h);
// (1,2,1,1,1/4)-form attached to a supereven form: coefficients read
// backwards and divided by 4
std::vector<Rat> as_1211(const BinaryForm& supereven);

// Supereven forms with resolvent in the shift class of g2, up to even
// equivalence (q even); this is h_2(g2) in the elementary statement.
std::vector<QuarticOrbit> supereven_classes(const MonicCubic& g2);
// (1,2,1,1,1/4)-forms of resolvent g up to the group generated by the even
// matrices and tau; representatives are the supereven partners.
std::vector<QuarticOrbit> classes_1211(const MonicCubic& g);
Rat count_1211q(const MonicCubic& g, SignCondition c = SignCondition::Any);

// Both statements of the quartic reflection identities for one resolvent.
Report check_BQ(const MonicCubic& g);

}  // namespace reflect
