#pragma once
// Integer symmetric 3x3 matrices with a given characteristic polynomial.

#include "reflect/forms.hpp"

#include <array>
#include <vector>

namespace reflect {

// rows (d1, d2, d3, u, v, w) for [[d1, u, v], [u, d2, w], [v, w, d3]]
using Sym3 = std::array<long, 6>;

// Every B with det(yI - B) = g(y).  The sum of squares of all entries is
// trace(B^2) = g2^2 - 2 g1, which bounds the search exactly.
std::vector<Sym3> symmetric_matrices(const MonicCubic& g);
long count_symmetric_matrices(const MonicCubic& g);

}  // namespace reflect
