#include "reflect/classgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace reflect {

std::string to_string(const QForm& f) { return "(" + to_str(f.a) + ", " + to_str(f.b) + ", " + to_str(f.c) + ")"; }

void check_discriminant(const Int& D) {
  if (D == 0) throw BadDiscriminant("discriminant must be nonzero");
  Int r = mod(D, 4);
  if (r != 0 && r != 1) throw BadDiscriminant("discriminant must be 0 or 1 mod 4");
  if (D > 0 && exact_sqrt(D)) throw BadDiscriminant("discriminant must not be a square");
}

namespace {

QForm make(const Int& a, const Int& b, const Int& D) {
  Int num = b * b - D;
  if (!divides(4 * a, num)) throw std::logic_error("form coefficients not integral");
  return {a, b, num / (4 * a)};
}

QForm reduce_definite(QForm f) {
  const Int D = f.disc();
  for (;;) {
    // b into (-a, a]
    Int twoa = 2 * f.a;
    Int b = mod(f.b, twoa);
    if (b > f.a) b -= twoa;
    f = make(f.a, b, D);
    if (f.a > f.c) {
      f = make(f.c, -f.b, D);
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

struct Indef {
  Int D, s;  // s = floor(sqrt D)
  bool reduced(const QForm& f) const {
    Int A = abs(f.a);
    return f.b >= 1 && f.b <= s && 2 * A + f.b >= s + 1 && 2 * A - f.b <= s;
  }
  QForm rho(const QForm& f) const {
    Int C = abs(f.c), twoC = 2 * C;
    Int b;
    if (C > s) {
      b = mod(-f.b, twoC);
      if (b > C) b -= twoC;
    } else {
      // b = -f.b mod 2C with s - 2C < b <= s
      b = s - mod(s + f.b, twoC);
    }
    return make(f.c, b, D);
  }
  QForm reduce(QForm f) const {
    while (!reduced(f)) f = rho(f);
    return f;
  }
  QForm cycle_min(const QForm& f) const {
    QForm best = f, g = rho(f);
    while (!(g == f)) {
      best = std::min(best, g);
      g = rho(g);
    }
    return best;
  }
};

}  // namespace

QForm canonical(const QForm& f) {
  Int D = f.disc();
  check_discriminant(D);
  if (D < 0) {
    if (f.a < 0) throw BadInput("only positive definite forms are supported");
    return reduce_definite(f);
  }
  Indef I{D, isqrt(D)};
  return I.cycle_min(I.reduce(f));
}

QForm principal_form(const Int& D) {
  check_discriminant(D);
  return canonical(mod(D, 4) == 0 ? QForm{1, 0, -D / 4} : QForm{1, 1, (1 - D) / 4});
}

QForm inverse(const QForm& f) { return canonical({f.a, -f.b, f.c}); }

QForm compose(const QForm& f, const QForm& g) {
  const Int D = f.disc();
  if (g.disc() != D) throw BadInput("forms of different discriminants");
  // Dirichlet composition: e = gcd(a1, a2, (b1 + b2)/2) = u a1 + v a2 + w s
  Int s = (f.b + g.b) / 2;
  Int g1, u1, v1;
  mpz_gcdext(g1.get_mpz_t(), u1.get_mpz_t(), v1.get_mpz_t(), f.a.get_mpz_t(), g.a.get_mpz_t());
  Int e, x, w;
  mpz_gcdext(e.get_mpz_t(), x.get_mpz_t(), w.get_mpz_t(), g1.get_mpz_t(), s.get_mpz_t());
  Int u = x * u1, v = x * v1;
  Int a3 = f.a * g.a / (e * e);
  Int B = (u * f.a * g.b + v * g.a * f.b + w * (f.b * g.b + D) / 2) / e;
  Int b3 = mod(B, 2 * a3);
  return canonical(make(a3, b3, D));
}

ClassGroupData class_group(const Int& D) {
  check_discriminant(D);
  std::set<QForm> reps;
  if (D < 0) {
    Int amax = isqrt(-D / 3);
    for (Int a = 1; a <= amax; ++a)
      for (Int b = -a + 1; b <= a; ++b) {
        if (!divides(4 * a, b * b - D)) continue;
        Int c = (b * b - D) / (4 * a);
        if (c < a || (c == a && b < 0)) continue;
        if (gcd(gcd(a, b), c) != 1) continue;
        reps.insert({a, b, c});
      }
  } else {
    Indef I{D, isqrt(D)};
    for (Int b = 1; b <= I.s; ++b) {
      if (!divides(4, b * b - D)) continue;
      Int N = (D - b * b) / 4;  // -ac
      for (Int A = 1; 2 * A - b <= I.s; ++A) {
        if (2 * A + b < I.s + 1 || !divides(A, N)) continue;
        for (int sgn : {1, -1}) {
          Int a = sgn * A;
          QForm f = make(a, b, D);
          if (gcd(gcd(f.a, f.b), f.c) != 1) continue;
          reps.insert(I.cycle_min(f));
        }
      }
    }
  }
  ClassGroupData out;
  out.D = D;
  out.elements.assign(reps.begin(), reps.end());
  out.h = static_cast<long>(out.elements.size());
  QForm one = principal_form(D);
  for (const auto& x : out.elements)
    if (compose(compose(x, x), x) == one) ++out.three_torsion;
  return out;
}

long three_torsion(const Int& D) { return class_group(D).three_torsion; }

namespace {

void scholz_pre(long D) {
  if (D == 1) throw BadDiscriminant("D = 1 is excluded");
  if (!is_fundamental(D)) throw BadDiscriminant("D must be a fundamental discriminant");
  if (D % 3 == 0) throw BadDiscriminant("3 must not divide D");
}

}  // namespace

Report scholz_check(long D) {
  scholz_pre(D);
  Report r;
  r.identity = "Scholz reflection on 3-torsion";
  r.range = "D=" + std::to_string(D);
  long t1 = three_torsion(D), t27 = three_torsion(-27 * Int(D)), t3 = three_torsion(-3 * Int(D)),
       t9 = three_torsion(9 * Int(D));
  long ex = D > 0 ? 3 : 1;
  r.checked = 2;
  if (t27 != t1 * ex)
    r.violations.push_back("D=" + std::to_string(D) + ": |Cl(-27D)[3]|=" + std::to_string(t27) + " vs " +
                           std::to_string(t1 * ex));
  // |Cl(-3D)[3]| = |Cl(9D)[3]| 3^{ex-1}, written without division
  if (t3 * 3 != t9 * ex)
    r.violations.push_back("D=" + std::to_string(D) + ": |Cl(-3D)[3]|=" + std::to_string(t3) + " |Cl(9D)[3]|=" +
                           std::to_string(t9));
  r.rows.push_back({std::to_string(D), std::to_string(t1), std::to_string(t27), std::to_string(t3), std::to_string(t9)});
  return r;
}

Report cross_check_maps(long D) {
  scholz_pre(D);
  if (D == -3) throw BadDiscriminant("D = -3 is excluded");
  Report r;
  r.identity = "exactly one of the two maps is an isomorphism on 3-torsion";
  r.range = "D=" + std::to_string(D);
  long t1 = three_torsion(D), t27 = three_torsion(-27 * Int(D)), t3 = three_torsion(-3 * Int(D)),
       t9 = three_torsion(9 * Int(D));
  Rat r1(t9, t1), r2(t27, t3);
  r1.canonicalize();
  r2.canonicalize();
  std::multiset<Rat> got{r1, r2}, want{Rat(1), Rat(3)};
  r.checked = 1;
  if (got != want)
    r.violations.push_back("D=" + std::to_string(D) + ": ratios " + to_str(r1) + ", " + to_str(r2));
  r.rows.push_back({std::to_string(D), to_str(r1), to_str(r2)});
  return r;
}

std::vector<long> scholz_discriminants(long max) {
  std::vector<long> Ds;
  for (long D = -max; D <= max; ++D)
    if (D != 1 && D != 0 && D % 3 != 0 && is_fundamental(D)) Ds.push_back(D);
  return Ds;
}

Report scholz_sweep(long max) {
  Report r = scholz_sweep(scholz_discriminants(max));
  r.range = "fundamental D, 3 not dividing D, 1 < |D| <= " + std::to_string(max);
  return r;
}

Report scholz_sweep(const std::vector<long>& Ds) {
  std::vector<Report> a(Ds.size()), b(Ds.size());
  parallel_for(Ds.size(), [&](std::size_t i) {
    a[i] = scholz_check(Ds[i]);
    b[i] = cross_check_maps(Ds[i]);
  });
  Report r;
  r.identity = "Scholz reflection and the two 3-torsion maps";
  r.range = std::to_string(Ds.size()) + " discriminants";
  for (std::size_t i = 0; i < Ds.size(); ++i) {
    r.checked += a[i].checked + b[i].checked;
    for (auto& v : a[i].violations) r.violations.push_back(v);
    for (auto& v : b[i].violations) r.violations.push_back(v);
    auto row = a[i].rows.front();
    row.push_back(b[i].rows.front()[1]);
    row.push_back(b[i].rows.front()[2]);
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace reflect
