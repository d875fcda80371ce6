#include "reflect/symmat.hpp"

#include <cmath>

namespace reflect {

std::vector<Sym3> symmetric_matrices(const MonicCubic& g) {
  std::vector<Sym3> out;
  Int budget_z = g.g2 * g.g2 - 2 * g.g1;
  if (budget_z < 0) return out;
  if (!budget_z.fits_slong_p()) throw BadInput("charpoly too large");
  const long budget = budget_z.get_si();
  const Int tr = -g.g2;
  auto isq = [](long n) { return static_cast<long>(std::floor(std::sqrt(static_cast<double>(n)))); };
  const long m = isq(budget);
  for (long d1 = -m; d1 <= m; ++d1)
    for (long d2 = -m; d2 <= m; ++d2) {
      Int d3z = tr - d1 - d2;
      if (abs(d3z) > m) continue;
      long d3 = d3z.get_si();
      long rest = budget - d1 * d1 - d2 * d2 - d3 * d3;
      if (rest < 0 || rest % 2) continue;
      rest /= 2;  // u^2 + v^2 + w^2
      long um = isq(rest);
      for (long u = -um; u <= um; ++u) {
        long r1 = rest - u * u;
        long vm = isq(r1);
        for (long v = -vm; v <= vm; ++v) {
          long r2 = r1 - v * v;
          long w0 = isq(r2);
          if (w0 * w0 != r2) continue;
          for (long w : {w0, -w0}) {
            // det B = -g0
            Int det = Int(d1) * d2 * d3 + 2 * Int(u) * v * w - Int(d1) * w * w - Int(d2) * v * v -
                      Int(d3) * u * u;
            if (det == -g.g0) out.push_back({d1, d2, d3, u, v, w});
            if (w0 == 0) break;
          }
        }
      }
    }
  return out;
}

long count_symmetric_matrices(const MonicCubic& g) {
  return static_cast<long>(symmetric_matrices(g).size());
}

}  // namespace reflect
