#pragma once
// Counts of (traced) orders in a cubic algebra over a local field, by closed
// forms, by generating series, and by brute force over sublattices of a
// global cubic ring.
//
// Local data: splitting type sigma of the maximal order, d0 = v(disc of the
// maximal order), d = v(disc of the order) = d0 + 2 * (index exponent),
// t = trace exponent (the order's traces lie in m^t), e = v(3), q = residue
// field size.

#include "reflect/forms.hpp"
#include "reflect/report.hpp"

#include <array>
#include <vector>

namespace reflect {

struct SubringParams {
  SplittingType sigma = SplittingType::T111;
  long d0 = 0, d = 0, t = 0, q = 2, e = 0;
};

// the three building blocks; see the source for the exponent ranges
Int g_1cubed(long d0, long d, long t, long q);
Int g_3(long d, long t, long q);
Int g_sr(long d0, long d, long t, long q);

// number of m^t-traced orders of discriminant m^d; BadParams on bad input
Int traced_subring_count(const SubringParams& params);

// counts at d = d0, d0 + 2, ... for max_terms terms
std::vector<Int> subring_series(SplittingType sigma, long d0, long q, long t, long e, int max_terms);
// expansion of F / ((1 - Z)(1 - q Z^3)) with F fixed by sigma (untraced count)
std::vector<Int> dw_series(SplittingType sigma, long q, int max_terms);
// local Euler factor of zeta_L(s)/zeta_L(2s) * zeta(2s) zeta(3s-1) at p, in
// X = p^{-s}, from the residue degrees of the primes above p
std::vector<Int> dirichlet_local_factor(SplittingType sigma, long p, int max_terms);

// Cubic ring with basis e0 = 1, e1, e2: e_i e_j = sum_k c[i][j][k] e_k.
struct CubicRing {
  std::array<std::array<std::array<Int, 3>, 3>, 3> c{};
  Int trace(int i) const;
  Int disc() const;  // det of the trace form
};
// ring of a binary cubic form: xi eta = -ad, xi^2 = -ac + b xi - a eta,
// eta^2 = -bd + d xi - c eta
CubicRing ring_of_form(const BinaryForm& f);
// throws NotARing unless unital (e0 = 1), commutative, associative and
// nondegenerate
void validate_ring(const CubicRing& R);

// subrings of index p^k containing 1 with all traces divisible by p^t
Int subring_oracle(const CubicRing& R, long p, int k, int t);

// fixture: a small form whose ring is maximal at p with the given splitting type
struct RingFixture {
  BinaryForm form;
  long p;
  SplittingType sigma;
  long d0;
};
RingFixture fixture_ring(SplittingType sigma, long p);

// oracle vs closed forms for every splitting type and k <= max_k
Report check_subring_counts(const std::vector<long>& primes, int max_k);
// closed forms vs the F / ((1 - Z)(1 - q Z^3)) table and the Dirichlet factor
Report check_subring_series(const std::vector<long>& primes, int terms);

}  // namespace reflect
