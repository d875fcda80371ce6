#include "reflect/quad.hpp"

#include <algorithm>

namespace reflect {

static std::vector<Int> positive_divisors(const Int& n) {
  Int m = abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= m; ++d) {
    if (!divides(d, m)) continue;
    small.push_back(d);
    if (d * d != m) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<QuadClass> enumerate_quadratics(const Int& I) {
  if (I == 0) throw ZeroInvariant();
  std::vector<QuadClass> out;
  for (const Int& d : positive_divisors(I)) {
    for (int sign : {-1, 1}) {
      Int a = sign * d;
      for (Int b = -d + 1; b <= d; ++b) {
        Int num = a * b * b - I;
        Int den = 4 * a * a;
        if (!divides(den, num)) continue;
        out.push_back({a, b, num / den});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadClass& x, const QuadClass& y) {
    if (abs(x.a) != abs(y.a)) return abs(x.a) < abs(y.a);
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return out;
}

long count_q(const Int& I, QFlags flags) {
  long n = 0;
  for (const auto& q : enumerate_quadratics(I)) {
    if (flags.even_b && !divides(Int(2), q.b)) continue;
    if (flags.real_roots && !q.real_roots()) continue;
    ++n;
  }
  return n;
}

Report check_quadratic_ON(long N) {
  if (N < 1) throw BadInput("N must be positive");
  std::vector<long> ns;
  for (long n = -N; n <= N; ++n)
    if (n != 0) ns.push_back(n);
  Report rep = check_quadratic_ON(ns);
  rep.range = "0 < |n| <= " + std::to_string(N);
  return rep;
}

Report check_quadratic_ON(const std::vector<long>& ns) {
  Report rep;
  rep.identity = "q2+(4n) = q(n), q2(4n) = 2 q+(n)";
  rep.range = std::to_string(ns.size()) + " values of n";
  for (long n : ns)
    if (n == 0) throw ZeroInvariant();
  std::vector<std::vector<std::string>> rows(ns.size());
  std::vector<std::string> bad(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    Int n = ns[i];
    long q = count_q(n, {}), qp = count_q(n, {false, true});
    long q2 = count_q(4 * n, {true, false}), q2p = count_q(4 * n, {true, true});
    rows[i] = {std::to_string(ns[i]), std::to_string(q), std::to_string(qp), std::to_string(q2),
               std::to_string(q2p)};
    if (q2p != q || q2 != 2 * qp)
      bad[i] = "n=" + std::to_string(ns[i]) + ": q=" + std::to_string(q) +
               " q2+(4n)=" + std::to_string(q2p) + " q+=" + std::to_string(qp) +
               " q2(4n)=" + std::to_string(q2);
  });
  for (std::size_t i = 0; i < ns.size(); ++i) {
    rep.rows.push_back(rows[i]);
    if (!bad[i].empty()) rep.violations.push_back(bad[i]);
  }
  rep.checked = 2 * static_cast<long>(ns.size());
  return rep;
}

Report legendre_check(long p1, long p3) {
  if (!is_prime(p1) || !is_prime(p3) || p1 % 4 != 1 || p3 % 4 != 3 || p1 == p3)
    throw BadPrimes("need primes p1 = 1 mod 4 and p3 = 3 mod 4");
  Report rep;
  rep.identity = "q+(p1 p3) = 5 + (p1|p3), q2(4 p1 p3) = 10 + 2 (p3|p1)";
  rep.range = "p1=" + std::to_string(p1) + " p3=" + std::to_string(p3);
  Int n = Int(p1) * p3;
  long qp = count_q(n, {false, true});
  long q2 = count_q(4 * n, {true, false});
  int l13 = legendre(p1, p3), l31 = legendre(p3, p1);
  rep.rows.push_back({std::to_string(qp), std::to_string(5 + l13), std::to_string(q2),
                      std::to_string(10 + 2 * l31)});
  if (qp != 5 + l13) rep.violations.push_back("q+ = " + std::to_string(qp));
  if (q2 != 10 + 2 * l31) rep.violations.push_back("q2 = " + std::to_string(q2));
  rep.checked = 2;
  return rep;
}

}  // namespace reflect
