#include "reflect/forms.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace reflect {

BinaryForm::BinaryForm(int deg, std::vector<Int> coeffs) : degree(deg), c(std::move(coeffs)) {
  if (deg < 1 || static_cast<int>(c.size()) != deg + 1)
    throw BadInput("form needs degree+1 coefficients");
  if (std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; }))
    throw BadInput("zero form");
}

BinaryForm BinaryForm::quadratic(const Int& a, const Int& b, const Int& c) {
  return BinaryForm(2, {a, b, c});
}
BinaryForm BinaryForm::cubic(const Int& a, const Int& b, const Int& c, const Int& d) {
  return BinaryForm(3, {a, b, c, d});
}
BinaryForm BinaryForm::quartic(const Int& a, const Int& b, const Int& c, const Int& d,
                               const Int& e) {
  return BinaryForm(4, {a, b, c, d, e});
}

Int BinaryForm::eval(const Int& x, const Int& y) const {
  // Horner in x with y powers
  Int acc = 0, ypow = 1;
  std::vector<Int> ys(degree + 1);
  for (int i = 0; i <= degree; ++i) {
    ys[i] = ypow;
    ypow *= y;
  }
  for (int i = 0; i <= degree; ++i) acc = acc * x + c[i] * ys[i];
  return acc;
}

Int BinaryForm::content() const {
  Int g = 0;
  for (const auto& v : c) g = gcd(g, v);
  return g;
}

static std::string monomial(int xe, int ye) {
  std::string s;
  if (xe) s += xe == 1 ? "x" : "x^" + std::to_string(xe);
  if (ye) s += ye == 1 ? "y" : "y^" + std::to_string(ye);
  return s;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree; ++i) {
    if (c[i] == 0) continue;
    Int mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << "-";
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    std::string m = monomial(degree - i, i);
    if (mag != 1 || m.empty()) os << mag.get_str();
    os << m;
    first = false;
  }
  return os.str();
}

bool operator<(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

bool operator<(const Mat2& a, const Mat2& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  if (a.r != b.r) return a.r < b.r;
  return a.s < b.s;
}

Mat2 Mat2::inverse() const {
  Int d = det();
  if (d != 1 && d != -1) throw BadInput("matrix not unimodular");
  return {s * d, -q * d, -r * d, p * d};
}

// polynomial in (x, y) of fixed degree as coefficient vector indexed by y power
using Hpoly = std::vector<Int>;

static Hpoly hmul(const Hpoly& u, const Hpoly& v) {
  Hpoly w(u.size() + v.size() - 1, Int(0));
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0)
      for (std::size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
  return w;
}

BinaryForm act(const BinaryForm& f, const Mat2& g) {
  const int n = f.degree;
  // powers of X = px + qy and Y = rx + sy
  std::vector<Hpoly> xp(n + 1), yp(n + 1);
  xp[0] = yp[0] = Hpoly{1};
  for (int k = 1; k <= n; ++k) {
    xp[k] = hmul(xp[k - 1], Hpoly{g.p, g.q});
    yp[k] = hmul(yp[k - 1], Hpoly{g.r, g.s});
  }
  std::vector<Int> out(n + 1, Int(0));
  for (int i = 0; i <= n; ++i) {
    if (f.c[i] == 0) continue;
    Hpoly t = hmul(xp[n - i], yp[i]);
    for (int j = 0; j <= n; ++j) out[j] += f.c[i] * t[j];
  }
  BinaryForm r;
  r.degree = n;
  r.c = std::move(out);
  return r;
}

Int quartic_I(const BinaryForm& f) {
  const auto& [a, b, c, d, e] = std::tie(f.c[0], f.c[1], f.c[2], f.c[3], f.c[4]);
  return 12 * a * e - 3 * b * d + c * c;
}

Int quartic_J(const BinaryForm& f) {
  const auto& [a, b, c, d, e] = std::tie(f.c[0], f.c[1], f.c[2], f.c[3], f.c[4]);
  return 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
}

BinaryForm quartic_hessian(const BinaryForm& f) {
  const auto& [a, b, c, d, e] = std::tie(f.c[0], f.c[1], f.c[2], f.c[3], f.c[4]);
  BinaryForm h;
  h.degree = 4;
  h.c = {8 * a * c - 3 * b * b, 24 * a * d - 4 * b * c, 48 * a * e + 6 * b * d - 4 * c * c,
         24 * b * e - 4 * c * d, 8 * c * e - 3 * d * d};
  return h;
}

BinaryForm cubic_hessian(const BinaryForm& f) {
  const auto& [a, b, c, d] = std::tie(f.c[0], f.c[1], f.c[2], f.c[3]);
  BinaryForm h;
  h.degree = 2;
  h.c = {b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
  return h;
}

Int disc(const BinaryForm& f) {
  switch (f.degree) {
    case 2:
      return f.c[1] * f.c[1] - 4 * f.c[0] * f.c[2];
    case 3: {
      const auto& [a, b, c, d] = std::tie(f.c[0], f.c[1], f.c[2], f.c[3]);
      return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d +
             18 * a * b * c * d;
    }
    case 4: {
      Int I = quartic_I(f), J = quartic_J(f);
      Int num = 4 * I * I * I - J * J;
      return num / 27;  // exact
    }
    default:
      throw BadInput("disc: degree must be 2, 3 or 4");
  }
}

Int superdiscriminant(const BinaryForm& f) {
  if (f.degree != 2) throw BadInput("superdiscriminant needs a quadratic");
  return f.c[0] * disc(f);
}

Int MonicCubic::disc() const {
  // disc of y^3 + g2 y^2 + g1 y + g0 = (4 I^3 - J^2) / 27
  Int i = I(), j = J();
  return (4 * i * i * i - j * j) / 27;
}

MonicCubic MonicCubic::shifted(const Int& t) const {
  // (y+t)^3 + g2 (y+t)^2 + g1 (y+t) + g0
  return {g2 + 3 * t, g1 + 2 * g2 * t + 3 * t * t, eval(t)};
}

bool MonicCubic::same_shift_class(const MonicCubic& o) const {
  return I() == o.I() && J() == o.J() && mod(g2 - o.g2, 3) == 0;
}

std::string MonicCubic::str() const {
  std::ostringstream os;
  os << "y^3";
  const Int* cs[3] = {&g2, &g1, &g0};
  const char* mono[3] = {"y^2", "y", ""};
  for (int i = 0; i < 3; ++i) {
    const Int& v = *cs[i];
    if (v == 0) continue;
    os << (v < 0 ? " - " : " + ");
    Int mag = abs(v);
    if (mag != 1 || i == 2) os << mag.get_str();
    os << mono[i];
  }
  return os.str();
}

MonicCubic quartic_resolvent(const BinaryForm& f) {
  if (f.degree != 4) throw BadInput("quartic_resolvent needs a quartic");
  const auto& [a, b, c, d, e] = std::tie(f.c[0], f.c[1], f.c[2], f.c[3], f.c[4]);
  return {-c, b * d - 4 * a * e, 4 * a * c * e - b * b * e - a * d * d};
}

std::string to_string(SplittingType t) {
  switch (t) {
    case SplittingType::T111: return "111";
    case SplittingType::T12: return "12";
    case SplittingType::T3: return "3";
    case SplittingType::T1_21: return "1^21";
    case SplittingType::T1_3: return "1^3";
    case SplittingType::T0: return "0";
  }
  return "?";
}

std::optional<SplittingType> parse_splitting(const std::string& s) {
  if (s == "111") return SplittingType::T111;
  if (s == "12") return SplittingType::T12;
  if (s == "3") return SplittingType::T3;
  if (s == "1^21" || s == "121" || s == "1²1" || s == "1^2 1") return SplittingType::T1_21;
  if (s == "1^3" || s == "13" || s == "1³") return SplittingType::T1_3;
  if (s == "0") return SplittingType::T0;
  return std::nullopt;
}

std::vector<ProjRoot> roots_mod_p(const BinaryForm& f, long p) {
  const int n = f.degree;
  std::vector<long> cm(n + 1);
  for (int i = 0; i <= n; ++i) cm[i] = mod(f.c[i], p).get_si();
  std::vector<ProjRoot> out;
  if (std::all_of(cm.begin(), cm.end(), [](long v) { return v == 0; })) return out;
  int inf = 0;
  while (cm[inf] == 0) ++inf;
  // F(x) = f(x, 1), highest degree first, trimmed
  std::vector<long> F(cm.begin() + inf, cm.end());
  for (long x = 0; x < p; ++x) {
    std::vector<long> g = F;
    int m = 0;
    while (g.size() > 1) {
      // synthetic division by (X - x)
      std::vector<long> q(g.size() - 1);
      long acc = 0;
      for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        acc = (acc * x + g[i]) % p;
        q[i] = acc;
      }
      long rem = (acc * x + g.back()) % p;
      if (rem != 0) break;
      ++m;
      g = std::move(q);
    }
    if (m) out.push_back({x, 1, m});
  }
  if (inf) out.push_back({1, 0, inf});
  return out;
}

SplittingType splitting_type(const BinaryForm& f, long p) {
  if (f.degree != 3) throw BadInput("splitting_type needs a cubic");
  bool zero = std::all_of(f.c.begin(), f.c.end(), [&](const Int& v) { return divides(Int(p), v); });
  if (zero) return SplittingType::T0;
  auto roots = roots_mod_p(f, p);
  int total = 0, maxm = 0;
  for (const auto& r : roots) {
    total += r.mult;
    maxm = std::max(maxm, r.mult);
  }
  if (total == 0) return SplittingType::T3;
  if (total == 1) return SplittingType::T12;
  if (maxm == 3) return SplittingType::T1_3;
  if (maxm == 2) return SplittingType::T1_21;
  return SplittingType::T111;
}

long root_count_p1(const BinaryForm& f, long p) {
  bool zero = std::all_of(f.c.begin(), f.c.end(), [&](const Int& v) { return divides(Int(p), v); });
  if (zero) return p + 1;
  return static_cast<long>(roots_mod_p(f, p).size());
}

bool maximal_at(const BinaryForm& f, long p) {
  bool zero = std::all_of(f.c.begin(), f.c.end(), [&](const Int& v) { return divides(Int(p), v); });
  if (zero) return false;
  Int p2 = Int(p) * p;
  for (const auto& r : roots_mod_p(f, p)) {
    if (r.mult < 2) continue;
    if (divides(p2, f.eval(r.x, r.y))) return false;
  }
  return true;
}

}  // namespace reflect
