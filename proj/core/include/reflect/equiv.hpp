#pragma once
// GL2(Z)-equivalence of cubic and quartic forms.
//
// Both degrees carry a positive-definite quadratic covariant built from the
// complex roots; isomorphisms f -> g must send each basis vector to a lattice
// vector of matching covariant value, so the search is a finite ellipse scan.
// Floating point only decides which vectors to try; every returned matrix is
// verified exactly.

#include "reflect/forms.hpp"

#include <vector>

namespace reflect {

struct RealQuad {
  long double A = 0, B = 0, C = 0;  // A x^2 + B xy + C y^2
  long double operator()(long double x, long double y) const {
    return A * x * x + B * x * y + C * y * y;
  }
  long double disc() const { return B * B - 4 * A * C; }
};

// Cubic: Q(v) = sum |d_i|^2 |l_i(v)|^2 over linear factors l_i with
// d_i = l_j ^ l_k; equals 2H when disc > 0 and has |disc Q| = 12 |D|.
// Quartic: Q = sum w_i |l_i|^2 with weights making Q invariant under rescaling
// of the individual factors.
RealQuad root_covariant(const BinaryForm& f);

// Same covariant for real coefficients (highest first, leading term nonzero).
RealQuad covariant_from_coeffs(const std::vector<long double>& hi);

// All g in GL2(Z) with act(f, g) == h (degrees 3 and 4, nonzero disc).
std::vector<Mat2> isomorphisms(const BinaryForm& f, const BinaryForm& h);
bool equivalent(const BinaryForm& f, const BinaryForm& h);

// |Stab_GL2(Z)(f)|; for quartics -I is included.
int stabilizer_order(const BinaryForm& f);
std::vector<Mat2> stabilizer(const BinaryForm& f);

// Every GL2(Z)-class of cubic forms of discriminant D meets this finite set.
std::vector<BinaryForm> cubic_candidates(const Int& D);

// Canonical representative: lexicographic minimum of the class within
// cubic_candidates(disc f).
BinaryForm reduce_cubic(const BinaryForm& f);

// Numeric roots of f(x, 1) (requires leading coefficient != 0).
struct CRoot {
  long double re, im;
};
std::vector<CRoot> numeric_roots(const std::vector<long double>& coeffs_high_first);

}  // namespace reflect
