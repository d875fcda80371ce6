#include "reflect/equiv.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>

namespace reflect {

using cld = std::complex<long double>;

std::vector<CRoot> numeric_roots(const std::vector<long double>& hi) {
  const int n = static_cast<int>(hi.size()) - 1;
  Eigen::Matrix<long double, Eigen::Dynamic, 1> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) coeffs[i] = hi[n - i];  // Eigen wants low degree first
  Eigen::PolynomialSolver<long double, Eigen::Dynamic> solver(coeffs);
  std::vector<CRoot> out;
  for (int i = 0; i < n; ++i) {
    cld z = solver.roots()[i];
    // a few Newton steps against the original coefficients
    for (int it = 0; it < 4; ++it) {
      cld v = 0, dv = 0;
      for (int k = 0; k <= n; ++k) {
        dv = dv * z + v;
        v = v * z + hi[k];
      }
      if (std::abs(dv) == 0) break;
      cld step = v / dv;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    out.push_back({z.real(), z.imag()});
  }
  return out;
}

static long double to_ld(const Int& v) { return static_cast<long double>(v.get_d()); }

static RealQuad compose_lower(const RealQuad& Q, long t) {
  // Q(x, -t x + y)
  long double T = static_cast<long double>(t);
  return {Q.A - Q.B * T + Q.C * T * T, Q.B - 2 * Q.C * T, Q.C};
}

RealQuad root_covariant(const BinaryForm& f) {
  if (f.degree != 3 && f.degree != 4) throw BadInput("root_covariant: degree 3 or 4");
  if (disc(f) == 0) throw ZeroDiscriminant();
  if (f.c[0] == 0) {
    // move a root away from infinity, then transport back
    for (long t = 1;; ++t) {
      for (long st : {t, -t}) {
        if (f.eval(1, st) == 0) continue;
        Mat2 s{1, 0, st, 1};
        return compose_lower(root_covariant(act(f, s)), st);
      }
    }
  }
  std::vector<long double> hi;
  for (const auto& v : f.c) hi.push_back(to_ld(v));
  return covariant_from_coeffs(hi);
}

RealQuad covariant_from_coeffs(const std::vector<long double>& hi) {
  auto roots = numeric_roots(hi);
  const int n = static_cast<int>(hi.size()) - 1;
  if (n != 3 && n != 4) throw BadInput("covariant: degree 3 or 4");
  std::vector<cld> r(n);
  for (int i = 0; i < n; ++i) r[i] = cld(roots[i].re, roots[i].im);
  auto dist = [&](int i, int j) { return std::abs(r[i] - r[j]); };

  std::vector<long double> w(n);
  if (n == 3) {
    long double a = hi[0];
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      long double d = dist(j, k);
      w[i] = a * a * d * d;
    }
  } else {
    for (int i = 0; i < 4; ++i) {
      long double acc = 1;
      for (int j = 0; j < 4; ++j)
        if (j != i) acc *= std::pow(dist(i, j), -2.0L / 3);
      for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          if (j != i && k != i) acc *= std::cbrt(dist(j, k));
      w[i] = acc;
    }
  }
  RealQuad Q;
  for (int i = 0; i < n; ++i) {
    Q.A += w[i];
    Q.B += -2 * w[i] * r[i].real();
    Q.C += w[i] * std::norm(r[i]);
  }
  return Q;
}

namespace {

struct Vec {
  long x, y;
};

// lattice vectors with |Q(v) - target| small
std::vector<Vec> shell(const RealQuad& Q, long double target) {
  std::vector<Vec> out;
  long double tol = 1e-6L * std::max<long double>(1, target);
  long double N = target + tol;
  long double delta = 4 * Q.A * Q.C - Q.B * Q.B;
  if (!(Q.A > 0) || !(delta > 0)) throw std::runtime_error("covariant not positive definite");
  long ymax = static_cast<long>(std::floor(std::sqrt(4 * Q.A * N / delta))) + 1;
  for (long y = -ymax; y <= ymax; ++y) {
    long double Y = y;
    long double dx = 4 * Q.A * N - delta * Y * Y;
    if (dx < 0) continue;
    long double s = std::sqrt(dx);
    long xlo = static_cast<long>(std::floor((-Q.B * Y - s) / (2 * Q.A))) - 1;
    long xhi = static_cast<long>(std::ceil((-Q.B * Y + s) / (2 * Q.A))) + 1;
    for (long x = xlo; x <= xhi; ++x) {
      if (x == 0 && y == 0) continue;
      if (std::fabs(Q(x, y) - target) <= tol) out.push_back({x, y});
    }
  }
  return out;
}

BinaryForm companion(const BinaryForm& f) {
  return f.degree == 3 ? cubic_hessian(f) : quartic_hessian(f);
}

}  // namespace

std::vector<Mat2> isomorphisms(const BinaryForm& f, const BinaryForm& h) {
  if (f.degree != h.degree) return {};
  if (f.degree != 3 && f.degree != 4) throw BadInput("isomorphisms: degree 3 or 4");
  Int D = disc(f);
  if (D == 0) throw ZeroDiscriminant();
  if (disc(h) != D) return {};
  const int n = f.degree;
  RealQuad Qf = root_covariant(f), Qh = root_covariant(h);
  BinaryForm Hf = companion(f), Hh = companion(h);
  const int nh = Hh.degree;

  auto pick = [&](long double target, const Int& fval, const Int& hval) {
    std::vector<Vec> vs;
    for (const auto& v : shell(Qf, target)) {
      if (std::gcd(v.x, v.y) != 1) continue;
      if (f.eval(v.x, v.y) != fval) continue;
      if (Hf.eval(v.x, v.y) != hval) continue;
      vs.push_back(v);
    }
    return vs;
  };
  auto V1 = pick(Qh.A, h.c[0], Hh.c[0]);
  if (V1.empty()) return {};
  auto V2 = pick(Qh.C, h.c[n], Hh.c[nh]);
  std::vector<Mat2> out;
  for (const auto& u : V1)
    for (const auto& v : V2) {
      long d = u.x * v.y - v.x * u.y;
      if (d != 1 && d != -1) continue;
      Mat2 g{u.x, v.x, u.y, v.y};
      if (act(f, g) == h) out.push_back(g);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool equivalent(const BinaryForm& f, const BinaryForm& h) { return !isomorphisms(f, h).empty(); }

std::vector<Mat2> stabilizer(const BinaryForm& f) { return isomorphisms(f, f); }

int stabilizer_order(const BinaryForm& f) {
  if (f.degree != 3 && f.degree != 4) throw BadInput("stabilizer_order: degree 3 or 4");
  return static_cast<int>(stabilizer(f).size());
}

std::vector<BinaryForm> cubic_candidates(const Int& D) {
  if (D == 0) throw ZeroDiscriminant();
  std::set<BinaryForm> out;
  Int absD = abs(D);
  // a = 0: f = y (b x^2 + c xy + d y^2), b > 0, b^4 <= |D|, c mod 2b
  for (Int b = 1; b * b * b * b <= absD; ++b) {
    for (Int c = -b + 1; c <= b; ++c) {
      Int num = b * b * c * c - D;
      Int den = 4 * b * b * b;
      if (!divides(den, num)) continue;
      out.insert(BinaryForm::cubic(0, b, c, num / den));
    }
  }
  // a > 0: 729 a^4 <= 64 |D|, b in (-3a/2, 3a/2], P = b^2 - 3ac with P^2 <= |D|
  Int Pmax = isqrt(absD);
  for (Int a = 1; 729 * a * a * a * a <= 64 * absD; ++a) {
    Int blo = floor_div(-3 * a, 2) + 1, bhi = floor_div(3 * a, 2);
    for (Int b = blo; b <= bhi; ++b) {
      Int b2 = b * b;
      // c = (b^2 - P) / (3a): P = b^2 - 3ac, step over c directly
      Int cmin = -floor_div(Pmax - b2, 3 * a);  // ceil((b^2 - Pmax) / 3a)
      Int cmax = floor_div(b2 + Pmax, 3 * a);
      for (Int c = cmin; c <= cmax; ++c) {
        Int P = b2 - 3 * a * c;
        if (P * P > absD) continue;
        Int G2 = 4 * P * P * P - 27 * D * a * a;
        auto g = exact_sqrt(G2);
        if (!g) continue;
        for (int sign : {1, -1}) {
          Int G = sign * *g;
          Int num = G - 2 * b2 * b + 9 * a * b * c;
          Int den = 27 * a * a;
          if (!divides(den, num)) continue;
          out.insert(BinaryForm::cubic(a, b, c, num / den));
          if (*g == 0) break;
        }
      }
    }
  }
  std::vector<BinaryForm> v(out.begin(), out.end());
  for (const auto& f : v)
    if (disc(f) != D) throw std::logic_error("cubic_candidates: disc mismatch");
  return v;
}

static std::vector<int> cheap_signature(const BinaryForm& f) {
  std::vector<int> s;
  s.push_back(static_cast<int>(f.content().get_si()));
  for (long p : {2L, 3L, 5L, 7L}) s.push_back(static_cast<int>(splitting_type(f, p)));
  return s;
}

BinaryForm reduce_cubic(const BinaryForm& f) {
  if (f.degree != 3) throw BadInput("reduce_cubic needs a cubic");
  Int D = disc(f);
  if (D == 0) throw ZeroDiscriminant();
  auto sig = cheap_signature(f);
  for (const auto& cand : cubic_candidates(D)) {
    if (cheap_signature(cand) != sig) continue;
    if (equivalent(cand, f)) return cand;
  }
  throw std::logic_error("reduce_cubic: class missed by candidate set");
}

}  // namespace reflect
