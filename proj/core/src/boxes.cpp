#include "reflect/boxes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

namespace reflect {

namespace {

using M3 = std::array<std::array<long, 3>, 3>;

M3 full(const SymInt3& s) {
  return {{{s[0], s[3], s[4]}, {s[3], s[1], s[5]}, {s[4], s[5], s[2]}}};
}
SymInt3 packed(const M3& m) { return {m[0][0], m[1][1], m[2][2], m[0][1], m[0][2], m[1][2]}; }

long det3(const M3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// X M X^T
M3 congruence(const M3& X, const M3& M) {
  M3 t{}, r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) t[i][j] += X[i][k] * M[k][j];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += t[i][k] * X[j][k];
  return r;
}

long quad_value(const std::array<long, 3>& v, const M3& M) {
  long s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += v[i] * M[i][j] * v[j];
  return s;
}
long bilinear(const std::array<long, 3>& u, const M3& M, const std::array<long, 3>& v) {
  long s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += u[i] * M[i][j] * v[j];
  return s;
}

// all X with |X_ij| <= bound, det X = +-1, X A1 X^T = A2 and X B1 X^T = B2
std::vector<M3> bounded_isos(const Box& from, const Box& to, int bound, bool first_only) {
  M3 A1 = full(from.A), B1 = full(from.B), A2 = full(to.A), B2 = full(to.B);
  std::array<std::vector<std::array<long, 3>>, 3> rows;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      for (long z = -bound; z <= bound; ++z) {
        std::array<long, 3> v{x, y, z};
        for (int i = 0; i < 3; ++i)
          if (quad_value(v, A1) == A2[i][i] && quad_value(v, B1) == B2[i][i]) rows[i].push_back(v);
      }
  std::vector<M3> out;
  for (const auto& r0 : rows[0])
    for (const auto& r1 : rows[1]) {
      if (bilinear(r0, A1, r1) != A2[0][1] || bilinear(r0, B1, r1) != B2[0][1]) continue;
      for (const auto& r2 : rows[2]) {
        if (bilinear(r0, A1, r2) != A2[0][2] || bilinear(r0, B1, r2) != B2[0][2]) continue;
        if (bilinear(r1, A1, r2) != A2[1][2] || bilinear(r1, B1, r2) != B2[1][2]) continue;
        M3 X{r0, r1, r2};
        long d = det3(X);
        if (d != 1 && d != -1) continue;
        out.push_back(X);
        if (first_only) return out;
      }
    }
  return out;
}

long rank_mod(M3 m, long p) {
  for (auto& r : m)
    for (auto& v : r) v = ((v % p) + p) % p;
  long rank = 0;
  for (int col = 0, row = 0; col < 3 && row < 3; ++col) {
    int piv = -1;
    for (int i = row; i < 3; ++i)
      if (m[i][col]) piv = i;
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    long inv = 1;
    while (m[row][col] * inv % p != 1) ++inv;
    for (int i = 0; i < 3; ++i) {
      if (i == row || !m[i][col]) continue;
      long f = m[i][col] * inv % p;
      for (int j = 0; j < 3; ++j) m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

// invariants of the GL3(Z)-class of (A, B)
std::vector<long> fingerprint(const Box& b) {
  M3 A = full(b.A), B = full(b.B);
  std::vector<long> fp;
  long ga = 0, gb = 0;
  for (long v : b.A) ga = std::gcd(ga, v);
  for (long v : b.B) gb = std::gcd(gb, v);
  fp.push_back(ga);
  fp.push_back(gb);
  for (long p : {2L, 3L, 5L})
    for (long s = 0; s < p; ++s) {
      M3 C{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) C[i][j] = A[i][j] * s + B[i][j];
      fp.push_back(rank_mod(C, p));
    }
  fp.push_back(rank_mod(A, 2));
  fp.push_back(rank_mod(A, 3));
  return fp;
}

struct BoxHash {
  std::size_t operator()(const Box& b) const {
    std::size_t h = 1469598103934665603ull;
    for (long v : b.A) h = (h ^ static_cast<std::size_t>(v + 1000)) * 1099511628211ull;
    for (long v : b.B) h = (h ^ static_cast<std::size_t>(v + 1000)) * 1099511628211ull;
    return h;
  }
};

std::vector<M3> generators() {
  std::vector<M3> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (long s : {1L, -1L}) {
        M3 X{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        X[i][j] = s;
        g.push_back(X);
      }
    }
  for (int i = 0; i < 3; ++i) {
    M3 X{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    X[i][i] = -1;
    g.push_back(X);
  }
  return g;
}

long max_abs(const Box& b) {
  long m = 0;
  for (long v : b.A) m = std::max(m, std::labs(v));
  for (long v : b.B) m = std::max(m, std::labs(v));
  return m;
}

}  // namespace

std::string to_string(const SymInt3& m) {
  M3 f = full(m);
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + std::to_string(f[i][j]);
    s += "]";
  }
  return s + "]";
}

std::array<Int, 4> box_resolvent(const Box& b) {
  // det(Ax - B) sampled at x = 0..3 and interpolated
  M3 A = full(b.A), B = full(b.B);
  Int v[4];
  for (int x = 0; x < 4; ++x) {
    M3 C{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) C[i][j] = A[i][j] * x - B[i][j];
    v[x] = det3(C);
  }
  // cubic through (0,v0)..(3,v3): forward differences
  Int d1 = v[1] - v[0], d2 = v[2] - 2 * v[1] + v[0], d3 = v[3] - 3 * v[2] + 3 * v[1] - v[0];
  Int c3 = d3 / 6;
  Int c2 = (d2 - 6 * c3) / 2;
  Int c1 = d1 - c3 - c2;
  return {c3, c2, c1, v[0]};
}

BoxSearch search_boxes(const std::array<Int, 4>& f, int entry_bound, bool even_diagonal) {
  if (entry_bound < 0) throw BadInput("entry bound must be nonnegative");
  BinaryForm F = BinaryForm::cubic(f[0], f[1], f[2], f[3]);
  if (disc(F) == 0) throw MultipleRoots();
  const long B = entry_bound;

  std::map<long, std::vector<SymInt3>> by_det;
  std::vector<long> range;
  for (long v = -B; v <= B; ++v) range.push_back(v);
  for (long a : range)
    for (long b : range)
      for (long c : range) {
        if (even_diagonal && ((a | b | c) & 1)) continue;
        for (long d : range)
          for (long e : range)
            for (long g : range) {
              SymInt3 s{a, b, c, d, e, g};
              by_det[det3(full(s))].push_back(s);
            }
      }
  // det A is the leading coefficient, det(-B) the constant term
  if (!f[0].fits_slong_p() || !f[3].fits_slong_p()) return {};
  const auto& As = by_det[f[0].get_si()];
  const auto& Bs = by_det[-f[3].get_si()];
  std::vector<Box> found;
  for (const auto& A : As)
    for (const auto& Bm : Bs) {
      Box bx{A, Bm};
      if (box_resolvent(bx) == f) found.push_back(bx);
    }
  std::sort(found.begin(), found.end());

  // merge by orbit exploration inside a slightly larger box
  const long explore = B + 2;
  const std::size_t cap = 3000000;
  const auto gens = generators();
  std::vector<int> comp(found.size(), -1);
  std::map<Box, std::size_t> index;
  for (std::size_t i = 0; i < found.size(); ++i) index[found[i]] = i;
  int ncomp = 0;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (comp[i] >= 0) continue;
    int id = ncomp++;
    std::unordered_set<Box, BoxHash> seen{found[i]};
    std::deque<Box> todo{found[i]};
    while (!todo.empty() && seen.size() < cap) {
      Box cur = todo.front();
      todo.pop_front();
      auto it = index.find(cur);
      if (it != index.end()) comp[it->second] = id;
      M3 A = full(cur.A), Bm = full(cur.B);
      for (const auto& X : gens) {
        Box nb{packed(congruence(X, A)), packed(congruence(X, Bm))};
        if (max_abs(nb) > explore) continue;
        if (seen.insert(nb).second) todo.push_back(nb);
      }
    }
  }
  // components the exploration could not connect: bounded direct search
  std::vector<std::size_t> rep_of(ncomp);
  std::vector<long> count(ncomp, 0);
  for (std::size_t i = found.size(); i-- > 0;) rep_of[comp[i]] = i;
  for (std::size_t i = 0; i < found.size(); ++i) ++count[comp[i]];
  std::vector<int> parent(ncomp);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<long>> fps(ncomp);
  for (int c = 0; c < ncomp; ++c) fps[c] = fingerprint(found[rep_of[c]]);
  for (int c = 0; c < ncomp; ++c)
    for (int d = c + 1; d < ncomp; ++d) {
      if (root(c) == root(d) || fps[c] != fps[d]) continue;
      if (!bounded_isos(found[rep_of[c]], found[rep_of[d]], 3, true).empty()) parent[root(d)] = root(c);
    }

  BoxSearch out;
  out.entry_bound = entry_bound;
  out.pairs_found = static_cast<long>(found.size());
  std::map<int, BoxClass> classes;
  for (int c = 0; c < ncomp; ++c) {
    int r = root(c);
    auto& k = classes[r];
    if (k.seen == 0 || found[rep_of[c]] < k.rep) k.rep = found[rep_of[c]];
    k.seen += count[c];
  }
  out.h = 0;
  for (auto& [r, k] : classes) {
    k.stab = static_cast<int>(bounded_isos(k.rep, k.rep, 2, false).size());
    out.h += Rat(1, k.stab);
    out.classes.push_back(k);
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const BoxClass& x, const BoxClass& y) { return x.rep < y.rep; });
  out.h.canonicalize();
  return out;
}

}  // namespace reflect
