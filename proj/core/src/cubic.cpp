#include "reflect/cubic.hpp"

#include <algorithm>
#include <random>

namespace reflect {

namespace {

// content and root data mod small primes; class invariants used to skip
// pointless isomorphism searches
std::vector<long> signature(const BinaryForm& f) {
  std::vector<long> s{f.content().get_si()};
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    s.push_back(static_cast<long>(splitting_type(f, p)));
    s.push_back(root_count_p1(f, p));
  }
  return s;
}

}  // namespace

std::vector<CubicClass> enumerate_cubics(const Int& D) {
  if (D == 0) throw ZeroDiscriminant();
  Int r = mod(D, 4);
  if (r == 2 || r == 3) return {};
  auto cands = cubic_candidates(D);  // sorted
  std::vector<std::vector<long>> sig;
  for (const auto& f : cands) sig.push_back(signature(f));
  std::vector<bool> used(cands.size(), false);
  std::vector<CubicClass> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (!used[j] && sig[j] == sig[i] && equivalent(cands[i], cands[j])) used[j] = true;
    out.push_back({cands[i], stabilizer_order(cands[i]), D});
  }
  return out;
}

Rat condition_weight(const BinaryForm& f, const std::vector<LocalCondition>& conds) {
  Rat w = 1;
  for (const auto& c : conds) {
    switch (c.kind) {
      case LocalCondition::Kind::Traced3:
        if (!divides(Int(3), f.c[1]) || !divides(Int(3), f.c[2])) return 0;
        break;
      case LocalCondition::Kind::Splitting:
        if (splitting_type(f, c.p) != c.type) return 0;
        break;
      case LocalCondition::Kind::MarkedRoot:
        w *= root_count_p1(f, c.p);
        break;
    }
  }
  return w;
}

Rat h(const std::vector<CubicClass>& classes, const std::vector<LocalCondition>& conds) {
  Rat total = 0;
  for (const auto& k : classes) total += condition_weight(k.rep, conds) / Rat(k.stab);
  total.canonicalize();
  return total;
}

Rat h(const Int& D, const std::vector<LocalCondition>& conds) {
  return h(enumerate_cubics(D), conds);
}

Report check_cubic_ON(long B) {
  if (B < 1) throw BadInput("bound must be positive");
  std::vector<long> Ds;
  for (long D = -B; D <= B; ++D)
    if (D != 0) Ds.push_back(D);
  Report rep = check_cubic_ON(Ds);
  rep.range = "0 < |D| <= " + std::to_string(B);
  return rep;
}

Report check_cubic_ON(const std::vector<long>& Ds) {
  Report rep;
  rep.identity = "h3(-27D) = 3 h(D) (D > 0), h3(-27D) = h(D) (D < 0)";
  rep.range = std::to_string(Ds.size()) + " discriminants";
  for (long D : Ds)
    if (D == 0) throw ZeroDiscriminant();
  std::vector<std::vector<std::string>> rows(Ds.size());
  std::vector<std::string> bad(Ds.size());
  parallel_for(Ds.size(), [&](std::size_t i) {
    long D = Ds[i];
    Rat lhs = h(Int(-27 * D), {LocalCondition::traced3()});
    Rat hd = h(Int(D));
    Rat rhs = D > 0 ? Rat(3 * hd) : hd;
    rows[i] = {std::to_string(D), to_str(hd), to_str(lhs)};
    if (lhs != rhs) bad[i] = "D=" + std::to_string(D) + ": h3(-27D)=" + to_str(lhs) + " h(D)=" + to_str(hd);
  });
  for (std::size_t i = 0; i < Ds.size(); ++i) {
    rep.rows.push_back(rows[i]);
    if (!bad[i].empty()) rep.violations.push_back(bad[i]);
  }
  rep.checked = static_cast<long>(Ds.size());
  return rep;
}

// h at a possibly non-integral argument num/den
static Rat h_at(const Int& num, const Int& den, const std::vector<LocalCondition>& conds) {
  if (!divides(den, num)) return 0;
  return h(num / den, conds);
}

Report check_disc_reduction(long p, const Int& D) {
  if (!is_prime(p) || p == 3) throw BadPrimes("p must be a prime other than 3");
  if (D == 0) throw ZeroDiscriminant();
  Int p2 = Int(p) * p, p4 = p2 * p2;
  if (!divides(p2, D)) throw BadInput("p^2 must divide D");
  Report rep;
  rep.identity = "discriminant reduction";
  rep.range = "p=" + std::to_string(p) + " D=" + to_str(D);
  auto Rp = std::vector<LocalCondition>{LocalCondition::marked_root(p)};
  Rat lhs = h(D);
  Rat t1 = h_at(D, p2, Rp);
  Rat t2 = h_at(D, p4, {});
  Rat t3 = h_at(D, p4, Rp);
  Int Dr = -27 * D / p2;
  auto t111 = std::vector<LocalCondition>{LocalCondition::traced3(),
                                          LocalCondition::splitting(p, SplittingType::T111)};
  auto t3c = std::vector<LocalCondition>{LocalCondition::traced3(),
                                         LocalCondition::splitting(p, SplittingType::T3)};
  auto refl = enumerate_cubics(Dr);
  Rat t4 = 2 * h(refl, t111) - h(refl, t3c);
  Rat cinf = D > 0 ? 3 : 1;
  Rat rhs = t1 + t2 - t3 + t4 / cinf;
  rhs.canonicalize();
  rep.rows.push_back({to_str(lhs), to_str(t1), to_str(t2), to_str(t3), to_str(t4), to_str(rhs)});
  rep.checked = 1;
  Int r = mod(D / p2, 4);
  if (r == 2 || r == 3)
    rep.warnings.push_back("D/p^2 is not a discriminant: maximal rings at p may be wildly ramified, "
                           "which the last term does not count");
  if (lhs != rhs)
    rep.violations.push_back("p=" + std::to_string(p) + " D=" + to_str(D) + ": lhs=" + to_str(lhs) +
                             " rhs=" + to_str(rhs));
  return rep;
}

std::vector<std::pair<long, long>> reduction_pairs(std::uint64_t seed, int n, long max_abs) {
  std::mt19937_64 rng(seed);
  const std::vector<long> ps{2, 5, 7, 11, 13};
  std::vector<std::pair<long, long>> out;
  while (static_cast<int>(out.size()) < n) {
    long p = ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
    long m_max = max_abs / (p * p);
    long m = std::uniform_int_distribution<long>(-m_max, m_max)(rng);
    long D = m * p * p;
    if (D == 0 || ((D % 4) + 4) % 4 > 1 || ((m % 4) + 4) % 4 > 1) continue;
    out.push_back({p, D});
  }
  return out;
}

std::vector<std::pair<long, Rat>> shintani_coeffs(int sign, long N, bool traced) {
  if (N < 1) throw BadInput("N must be positive");
  if (sign != 1 && sign != -1) throw BadInput("sign must be +1 or -1");
  std::vector<std::pair<long, Rat>> out(N);
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t i) {
    long n = static_cast<long>(i) + 1;
    Rat v = traced ? h(Int(sign * 27 * n), {LocalCondition::traced3()}) : h(Int(sign * n));
    out[i] = {n, v};
  });
  return out;
}

}  // namespace reflect
