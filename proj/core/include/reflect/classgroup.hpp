#pragma once
// Form class groups of quadratic discriminants (primitive forms up to proper
// equivalence, i.e. the narrow class group of the order) and their 3-torsion.

#include "reflect/arith.hpp"
#include "reflect/report.hpp"

#include <vector>

namespace reflect {

struct QForm {
  Int a, b, c;
  Int disc() const { return b * b - 4 * a * c; }
  friend bool operator==(const QForm& x, const QForm& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
  friend bool operator<(const QForm& x, const QForm& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
};
std::string to_string(const QForm& f);

// throws BadDiscriminant unless D = 0, 1 mod 4, D != 0 and D not a square
void check_discriminant(const Int& D);

// canonical representative of the proper class: the reduced form for D < 0,
// the least form on the reduction cycle for D > 0
QForm canonical(const QForm& f);
QForm principal_form(const Int& D);
QForm compose(const QForm& f, const QForm& g);
QForm inverse(const QForm& f);

struct ClassGroupData {
  Int D;
  std::vector<QForm> elements;  // canonical, sorted
  long h = 0;
  long three_torsion = 0;
};
ClassGroupData class_group(const Int& D);
long three_torsion(const Int& D);

// |Cl(-27D)[3]| = |Cl(D)[3]| 3^{[D>0]} and |Cl(-3D)[3]| = |Cl(9D)[3]| 3^{[D>0]-1}
Report scholz_check(long D);
// {|Cl(9D)[3]| / |Cl(D)[3]|, |Cl(-27D)[3]| / |Cl(-3D)[3]|} = {1, 3}
Report cross_check_maps(long D);
// both checks over fundamental D with 3 not dividing D and 1 < |D| <= max
Report scholz_sweep(long max);
Report scholz_sweep(const std::vector<long>& Ds);
std::vector<long> scholz_discriminants(long max);

}  // namespace reflect
