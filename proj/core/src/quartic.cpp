#include "reflect/quartic.hpp"

#include "reflect/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

namespace reflect {

std::string to_string(SignCondition c) {
  switch (c) {
    case SignCondition::Any: return "any";
    case SignCondition::Indefinite: return "indef";
    case SignCondition::PosDef: return "posdef";
    case SignCondition::NegDef: return "negdef";
    case SignCondition::FourReal: return "fourreal";
    case SignCondition::Definite: return "def";
  }
  return "?";
}

std::optional<SignCondition> parse_sign_condition(const std::string& s) {
  if (s == "any") return SignCondition::Any;
  if (s == "indef" || s == "indefinite") return SignCondition::Indefinite;
  if (s == "posdef" || s == "pos_def") return SignCondition::PosDef;
  if (s == "negdef" || s == "neg_def") return SignCondition::NegDef;
  if (s == "fourreal" || s == "four_real_roots") return SignCondition::FourReal;
  if (s == "def" || s == "definite") return SignCondition::Definite;
  return std::nullopt;
}

bool satisfies(const QuarticOrbit& o, SignCondition c) {
  switch (c) {
    case SignCondition::Any: return true;
    case SignCondition::Indefinite: return o.real_roots > 0;
    case SignCondition::PosDef: return o.real_roots == 0 && o.sign > 0;
    case SignCondition::NegDef: return o.real_roots == 0 && o.sign < 0;
    case SignCondition::FourReal: return o.real_roots == 4;
    case SignCondition::Definite: return o.real_roots == 0;
  }
  return false;
}

Rat weighted(const std::vector<QuarticOrbit>& orbits, SignCondition c) {
  Rat t = 0;
  for (const auto& o : orbits)
    if (satisfies(o, c)) t += Rat(1, o.stab);
  t.canonicalize();
  return t;
}

std::pair<Int, Int> invariants_IJ(const MonicCubic& g) {
  if (g.disc() == 0) throw SingularResolvent();
  return {g.I(), g.J()};
}

int real_root_count(const BinaryForm& f) {
  if (f.degree != 4) throw BadInput("real_root_count needs a quartic");
  Int D = disc(f);
  if (D == 0) throw ZeroDiscriminant();
  if (D < 0) return 2;
  if (f.c[0] == 0) return 4;  // the root at infinity is real
  const auto& [a, b, c, d, e] = std::tie(f.c[0], f.c[1], f.c[2], f.c[3], f.c[4]);
  Int P = 8 * a * c - 3 * b * b;
  Int D2 = 64 * a * a * a * e - 16 * a * a * c * c + 16 * a * b * b * c - 16 * a * a * b * d -
           3 * b * b * b * b;
  return (P < 0 && D2 < 0) ? 4 : 0;
}

// ---------------------------------------------------------------------------
// search bounds

namespace {

using ld = long double;

struct Ratios {
  ld f = 0, h = 0;  // sup |f|/Q^2 and sup |H|/Q^2 on the unit circle
};

Ratios sup_ratios(const std::vector<ld>& co, const RealQuad& Q) {
  const ld a = co[0], b = co[1], c = co[2], d = co[3], e = co[4];
  const ld H[5] = {8 * a * c - 3 * b * b, 24 * a * d - 4 * b * c, 48 * a * e + 6 * b * d - 4 * c * c,
                   24 * b * e - 4 * c * d, 8 * c * e - 3 * d * d};
  Ratios r;
  const int steps = 20000;
  for (int i = 0; i < steps; ++i) {
    ld th = std::acos(-1.0L) * i / steps;
    ld x = std::cos(th), y = std::sin(th);
    ld fv = 0, hv = 0, yp = 1;
    ld xs[5], ys[5];
    for (int k = 0; k <= 4; ++k) {
      ys[k] = yp;
      yp *= y;
    }
    xs[0] = 1;
    for (int k = 1; k <= 4; ++k) xs[k] = xs[k - 1] * x;
    for (int k = 0; k <= 4; ++k) {
      fv += co[k] * xs[4 - k] * ys[k];
      hv += H[k] * xs[4 - k] * ys[k];
    }
    ld q = Q(x, y);
    r.f = std::max(r.f, std::fabs(fv) / (q * q));
    r.h = std::max(r.h, std::fabs(hv) / (q * q));
  }
  return r;
}

}  // namespace

QuarticBounds quartic_bounds(const Int& I, const Int& J) {
  const ld Il = I.get_d(), Jl = J.get_d();
  // sample forms eps x^4 + c x^2y^2 + d xy^3 + e y^4 with invariants (I, J):
  // e = eps (I - c^2) / 12, 27 d^2 = eps (6 I c - 8 c^3 - J)
  std::vector<ld> crit;
  for (const auto& z : numeric_roots({-8, 0, 6 * Il, -Jl}))
    if (std::fabs(z.im) <= 1e-9L * (1 + std::fabs(z.re))) crit.push_back(z.re);
  std::sort(crit.begin(), crit.end());
  std::vector<ld> cs;
  if (crit.empty()) crit.push_back(0);
  cs.push_back(crit.front() - 1 - std::fabs(crit.front()));
  cs.push_back(crit.back() + 1 + std::fabs(crit.back()));
  for (std::size_t i = 0; i + 1 < crit.size(); ++i)
    for (ld t : {0.25L, 0.5L, 0.75L}) cs.push_back(crit[i] + t * (crit[i + 1] - crit[i]));
  QuarticBounds qb;
  for (ld c : cs) {
    for (ld eps : {1.0L, -1.0L}) {
      ld d2 = eps * (6 * Il * c - 8 * c * c * c - Jl) / 27;
      if (!(d2 > 1e-12L * (1 + std::fabs(c * c * c)))) continue;
      std::vector<ld> co{eps, 0, c, std::sqrt(d2), eps * (Il - c * c) / 12};
      RealQuad Q = covariant_from_coeffs(co);
      ld dq = 4 * Q.A * Q.C - Q.B * Q.B;
      Ratios r = sup_ratios(co, Q);
      // Hermite: the minimum of Q on primitive vectors is at most sqrt(dq/3)
      qb.a_max = std::max(qb.a_max, r.f * dq / 3);
      qb.h_max = std::max(qb.h_max, r.h * dq / 3);
    }
  }
  qb.a_max = qb.a_max * 1.05L + 1;
  qb.h_max = qb.h_max * 1.05L + 1;
  return qb;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

struct FullClass {
  QuarticOrbit orbit;
  std::vector<Mat2> stabilizer;
};

std::vector<long> signature(const BinaryForm& f, int real_roots, int sign) {
  std::vector<long> s{f.content().get_si(), real_roots, sign};
  for (long p : {2L, 3L, 5L, 7L}) {
    auto rs = roots_mod_p(f, p);
    bool zero = std::all_of(f.c.begin(), f.c.end(), [&](const Int& v) { return divides(Int(p), v); });
    if (zero) {
      s.push_back(-1);
      continue;
    }
    std::vector<long> ms;
    for (const auto& r : rs) ms.push_back(r.mult);
    std::sort(ms.begin(), ms.end());
    s.push_back(static_cast<long>(ms.size()));
    s.insert(s.end(), ms.begin(), ms.end());
    s.push_back(-2);
  }
  return s;
}

int definite_sign(const BinaryForm& f, int real_roots) {
  if (real_roots != 0) return 0;
  return f.c[0] > 0 ? 1 : -1;
}

std::vector<BinaryForm> quartic_candidates(const MonicCubic& g) {
  auto [I, J] = invariants_IJ(g);
  Int D = g.disc();
  QuarticBounds qb = quartic_bounds(I, J);
  long amax = static_cast<long>(std::floor(qb.a_max));
  Int hmax(static_cast<double>(std::floor(qb.h_max)));

  std::vector<long> as;
  for (long a = -amax; a <= amax; ++a)
    if (a != 0) as.push_back(a);
  std::vector<std::vector<BinaryForm>> found(as.size());
  auto keep = [&](std::vector<BinaryForm>& out, const BinaryForm& f) {
    if (quartic_I(f) == I && quartic_J(f) == J && quartic_resolvent(f).same_shift_class(g))
      out.push_back(f);
  };

  parallel_for(as.size(), [&](std::size_t idx) {
    Int a = as[idx];
    Int absa = abs(a), a2 = a * a, a3 = a2 * a;
    Int m = 8 * absa;
    for (Int b = -2 * absa + 1; b <= 2 * absa; ++b) {
      Int b2 = b * b;
      Int H0 = mod(-3 * b2, m);
      Int k0 = -floor_div(hmax + H0, m);  // first H >= -hmax
      for (Int H = H0 + k0 * m; H <= hmax; H += m) {
        // H^3 - 48 I a^2 H + 64 J a^3 = -27 R^2
        Int R27 = 48 * I * a2 * H - H * H * H - 64 * J * a3;
        if (!divides(Int(27), R27)) continue;
        auto R = exact_sqrt(R27 / 27);
        if (!R) continue;
        Int c = (H + 3 * b2) / (8 * a);
        for (int sgn : {1, -1}) {
          Int Rv = sgn * *R;
          Int dn = Rv - b2 * b + 4 * a * b * c;
          if (divides(8 * a2, dn)) {
            Int d = dn / (8 * a2);
            Int en = I - c * c + 3 * b * d;
            if (divides(12 * a, en)) keep(found[idx], BinaryForm::quartic(a, b, c, d, en / (12 * a)));
          }
          if (*R == 0) break;
        }
      }
    }
  });

  std::set<BinaryForm> all;
  for (auto& v : found) all.insert(v.begin(), v.end());

  // a = 0: f = y (b x^3 + c x^2y + d xy^2 + e y^3); D = b^2 disc(cubic), b > 0, c mod 3b
  for (Int b = 1; b * b <= abs(D); ++b) {
    if (!divides(b * b, D)) continue;
    for (Int c = 0; c < 3 * b; ++c) {
      Int dn = c * c - I;
      if (!divides(3 * b, dn)) continue;
      Int d = dn / (3 * b);
      Int en = 9 * b * c * d - 2 * c * c * c - J;
      if (!divides(27 * b * b, en)) continue;
      std::vector<BinaryForm> tmp;
      keep(tmp, BinaryForm::quartic(0, b, c, d, en / (27 * b * b)));
      all.insert(tmp.begin(), tmp.end());
    }
  }
  return {all.begin(), all.end()};
}

std::vector<FullClass> enumerate_full(const MonicCubic& g) {
  auto cands = quartic_candidates(g);
  const std::size_t n = cands.size();
  std::vector<int> rr(n), sg(n);
  std::vector<std::vector<long>> sig(n);
  for (std::size_t i = 0; i < n; ++i) {
    rr[i] = real_root_count(cands[i]);
    sg[i] = definite_sign(cands[i], rr[i]);
    sig[i] = signature(cands[i], rr[i], sg[i]);
  }
  std::vector<bool> used(n, false);
  std::vector<FullClass> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<std::size_t> todo;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!used[j] && sig[j] == sig[i]) todo.push_back(j);
    std::vector<char> eq(todo.size(), 0);
    parallel_for(todo.size(), [&](std::size_t t) { eq[t] = equivalent(cands[i], cands[todo[t]]); });
    for (std::size_t t = 0; t < todo.size(); ++t)
      if (eq[t]) used[todo[t]] = true;
    FullClass fc;
    fc.stabilizer = stabilizer(cands[i]);
    fc.orbit = {cands[i], static_cast<int>(fc.stabilizer.size()), rr[i], sg[i]};
    out.push_back(std::move(fc));
  }
  return out;
}

// cosets of the even group: determined by g e2 mod 2 in P^1(F_2)
int p1f2(const Int& x, const Int& y) {
  bool ox = mpz_odd_p(x.get_mpz_t()), oy = mpz_odd_p(y.get_mpz_t());
  if (!ox && oy) return 0;
  if (ox && !oy) return 1;
  return 2;  // both odd
}
const Mat2 kCosetRep[3] = {Mat2{1, 0, 0, 1}, Mat2{0, 1, 1, 0}, Mat2{1, 1, 0, 1}};
const Int kPoint[3][2] = {{0, 1}, {1, 0}, {1, 1}};

int move_point(const Mat2& s, int pt) {
  const Int& x = kPoint[pt][0];
  const Int& y = kPoint[pt][1];
  return p1f2(s.p * x + s.q * y, s.r * x + s.s * y);
}

struct EvenOrbit {
  QuarticOrbit orbit;
  int parent;     // index of the GL2(Z)-class
  int point_set;  // bitmask of P^1(F_2) points in this double coset
};

struct EvenData {
  std::vector<FullClass> full;
  std::vector<EvenOrbit> even;
};

EvenData even_orbits(const MonicCubic& g2) {
  EvenData ed;
  ed.full = enumerate_full(g2);
  for (std::size_t k = 0; k < ed.full.size(); ++k) {
    const auto& fc = ed.full[k];
    int seen = 0;
    for (int pt = 0; pt < 3; ++pt) {
      if (seen & (1 << pt)) continue;
      int mask = 0, fix = 0;
      for (const auto& s : fc.stabilizer) {
        int q = move_point(s, pt);
        mask |= 1 << q;
        if (q == pt) ++fix;
      }
      seen |= mask;
      BinaryForm F = act(fc.orbit.rep, kCosetRep[pt]);
      if (!is_supereven(F)) continue;
      ed.even.push_back({{F, fix, fc.orbit.real_roots, fc.orbit.sign}, static_cast<int>(k), mask});
    }
  }
  return ed;
}

// index into ed.even of the even orbit containing X (a supereven form of the
// same resolvent), or -1
int locate(const EvenData& ed, const BinaryForm& X) {
  for (std::size_t k = 0; k < ed.full.size(); ++k) {
    auto isos = isomorphisms(ed.full[k].orbit.rep, X);
    if (isos.empty()) continue;
    int pt = p1f2(isos.front().q, isos.front().s);
    for (std::size_t i = 0; i < ed.even.size(); ++i)
      if (ed.even[i].parent == static_cast<int>(k) && (ed.even[i].point_set & (1 << pt)))
        return static_cast<int>(i);
    return -1;
  }
  return -1;
}

}  // namespace

std::vector<QuarticOrbit> enumerate_quartics(const MonicCubic& g) {
  std::vector<QuarticOrbit> out;
  for (auto& fc : enumerate_full(g)) out.push_back(fc.orbit);
  return out;
}

Rat count_quartics(const MonicCubic& g, SignCondition c) { return weighted(enumerate_quartics(g), c); }

bool is_supereven(const BinaryForm& f) {
  if (f.degree != 4) return false;
  return divides(Int(4), f.c[1]) && divides(Int(4), f.c[2]) && divides(Int(8), f.c[3]) &&
         divides(Int(4), f.c[4]);
}

BinaryForm tau(const BinaryForm& f) {
  if (!is_supereven(f)) throw BadInput("tau needs a supereven quartic");
  return BinaryForm::quartic(f.c[4] / 4, f.c[3] / 2, f.c[2], 2 * f.c[1], 4 * f.c[0]);
}

std::vector<Rat> as_1211(const BinaryForm& f) {
  if (!is_supereven(f)) throw BadInput("as_1211 needs a supereven quartic");
  std::vector<Rat> out;
  for (int i = 4; i >= 0; --i) {
    Rat v(f.c[i], 4);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

bool evenly_equivalent(const BinaryForm& f, const BinaryForm& h) {
  for (const auto& m : isomorphisms(f, h))
    if (divides(Int(2), m.q)) return true;
  return false;
}

std::vector<QuarticOrbit> supereven_classes(const MonicCubic& g2) {
  std::vector<QuarticOrbit> out;
  for (auto& e : even_orbits(g2).even) out.push_back(e.orbit);
  return out;
}

std::vector<QuarticOrbit> classes_1211(const MonicCubic& g) {
  EvenData ed = even_orbits(g.scaled4());
  const std::size_t n = ed.even.size();
  std::vector<int> partner(n);
  parallel_for(n, [&](std::size_t i) { partner[i] = locate(ed, tau(ed.even[i].orbit.rep)); });
  std::vector<QuarticOrbit> out;
  for (std::size_t i = 0; i < n; ++i) {
    int j = partner[i];
    if (j < 0) throw std::logic_error("tau image escaped the enumerated orbits");
    if (j < static_cast<int>(i)) continue;  // merged into orbit j
    QuarticOrbit o = ed.even[i].orbit;
    if (j == static_cast<int>(i)) o.stab *= 2;
    out.push_back(o);
  }
  return out;
}

Rat count_1211q(const MonicCubic& g, SignCondition c) { return weighted(classes_1211(g), c); }

Report check_BQ(const MonicCubic& g) {
  Int D = g.disc();
  if (D == 0) throw SingularResolvent();
  Report rep;
  rep.identity = "quartic reflection identities";
  rep.range = "g = " + g.str();
  bool admissible = mpz_odd_p(D.get_mpz_t());
  if (!admissible)
    rep.warnings.push_back("disc(g) = " + to_str(D) +
                           " is even; 2-adic hypothesis not verified, identities reported only");

  auto base = enumerate_quartics(g);
  MonicCubic g2 = g.scaled4();
  EvenData ed = even_orbits(g2);
  std::vector<QuarticOrbit> ev;
  for (auto& e : ed.even) ev.push_back(e.orbit);
  auto g4 = classes_1211(g);
  long s = count_symmetric_matrices(g);

  using SC = SignCondition;
  Rat hA = weighted(base, SC::Any), hP = weighted(base, SC::PosDef), hN = weighted(base, SC::NegDef),
      hI = weighted(base, SC::Indefinite), hD = weighted(base, SC::Definite);
  Rat e2A = weighted(ev, SC::Any), e2P = weighted(ev, SC::PosDef), e2N = weighted(ev, SC::NegDef),
      e2I = weighted(ev, SC::Indefinite);
  Rat h4A = weighted(g4, SC::Any), h4P = weighted(g4, SC::PosDef), h4N = weighted(g4, SC::NegDef),
      h4I = weighted(g4, SC::Indefinite);

  auto row = [&](const std::string& name, const Rat& l, const Rat& r, bool binding) {
    Rat L = l, R = r;
    L.canonicalize();
    R.canonicalize();
    bool ok = L == R;
    rep.rows.push_back({name, to_str(L), to_str(R), ok ? "ok" : "differs", binding ? "checked" : "info"});
    ++rep.checked;
    if (ok || !binding) return;
    std::string msg = g.str() + ": " + name + ": " + to_str(L) + " != " + to_str(R);
    if (admissible)
      rep.violations.push_back(msg);
    else
      rep.warnings.push_back(msg);
  };

  rep.rows.push_back({"h (GL2 weights)", to_str(hA), "", "", "value"});
  rep.rows.push_back({"h+ h- h_indef", to_str(hP) + " " + to_str(hN) + " " + to_str(hI), "", "", "value"});
  rep.rows.push_back({"h2 (even, g2)", to_str(e2A), "", "", "value"});
  rep.rows.push_back({"h4", to_str(h4A), "", "", "value"});
  rep.rows.push_back({"s", std::to_string(s), "", "", "value"});

  row("h4 = h2/2", h4A, e2A / 2, true);
  // The theorem weights h by PGL2(Z)-stabilizers (half the GL2 size) and h4
  // by full stabilizers; the elementary statement uses GL2 weights throughout.
  Rat pA = 2 * hA, pP = 2 * hP, pN = 2 * hN, pI = 2 * hI, pD = 2 * hD;
  if (D < 0) {
    row("4h = h2(g2)", 4 * hA, e2A, true);
    row("2h = h4 (GL2 weights)", 2 * hA, h4A, true);
    row("2h = h4 (PGL2 weights)", 2 * pA, h4A, false);
    row("s = 0", Rat(s), Rat(0), true);
  } else {
    row("2h = h2_indef(g2)", 2 * hA, e2I, true);
    row("4(h+ + h_indef) = h2+ + h2_indef", 4 * (hP + hI), e2P + e2I, true);
    row("4(h- + h_indef) = h2- + h2_indef", 4 * (hN + hI), e2N + e2I, true);
    row("h = 2 h4_indef", pA, 2 * h4I, true);
    row("h_indef+pos = h4_indef+pos", pI + pP, h4I + h4P, true);
    row("h_indef+neg = h4_indef+neg", pI + pN, h4I + h4N, true);
    row("24(h_indef - h_def) = s", 24 * (pI - pD), Rat(s), true);
    bool cor = hI >= hD && ((hI == hD) == (s == 0));
    rep.rows.push_back({"h_indef >= h_def, equality iff s = 0", to_str(pI), to_str(pD),
                        cor ? "ok" : "differs", "checked"});
    ++rep.checked;
    if (!cor) (admissible ? rep.violations : rep.warnings).push_back(g.str() + ": inequality fails");
  }
  return rep;
}

}  // namespace reflect
