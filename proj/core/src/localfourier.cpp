#include "reflect/localfourier.hpp"

#include <sstream>

namespace reflect {

namespace {
constexpr long kMaxGroupSize = 1L << 16;
}

Cyclo::Cyclo(long p, const Rat& r) : p_(p), c_(static_cast<std::size_t>(p), Rat(0)) {
  c_[0] = r;
  c_[0].canonicalize();
}

Cyclo Cyclo::zeta_power(long p, long k) {
  Cyclo z(p, Rat(0));
  z.c_[static_cast<std::size_t>(((k % p) + p) % p)] = 1;
  z.normalize();
  return z;
}

void Cyclo::normalize() {
  // 1 + zeta + ... + zeta^{p-1} = 0
  Rat last = c_.back();
  if (last == 0) return;
  for (auto& v : c_) v -= last;
}

bool Cyclo::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rat Cyclo::rational() const {
  if (!is_rational()) throw std::logic_error("value is not rational");
  return c_[0];
}

Cyclo Cyclo::conj() const {
  Cyclo r(p_, Rat(0));
  for (long k = 0; k < p_; ++k) r.c_[static_cast<std::size_t>((p_ - k) % p_)] += c_[static_cast<std::size_t>(k)];
  r.normalize();
  return r;
}

std::string Cyclo::str() const {
  if (is_rational()) return to_str(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << to_str(c_[k]);
    if (k) os << "*z^" << k;
    first = false;
  }
  return os.str();
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.p_ != p_) throw BadInput("cyclotomic fields differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (o.p_ != p_) throw BadInput("cyclotomic fields differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.p_ != b.p_) throw BadInput("cyclotomic fields differ");
  Cyclo r(a.p_, Rat(0));
  const long p = a.p_;
  for (long i = 0; i < p; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (long j = 0; j < p; ++j)
      r.c_[static_cast<std::size_t>((i + j) % p)] +=
          a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  r.normalize();
  return r;
}

Cyclo operator*(const Rat& s, Cyclo a) {
  for (auto& v : a.c_) v *= s;
  return a;
}

bool operator==(const Cyclo& a, const Cyclo& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

std::vector<long> FilteredGroup::digits(long index) const {
  std::vector<long> v(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    v[static_cast<std::size_t>(k)] = index % p;
    index /= p;
  }
  return v;
}

long FilteredGroup::index_of(const std::vector<long>& v) const {
  long idx = 0;
  for (int k = dim - 1; k >= 0; --k) idx = idx * p + (((v[static_cast<std::size_t>(k)] % p) + p) % p);
  return idx;
}

long FilteredGroup::pair(long a, long b) const {
  auto x = digits(a), y = digits(b);
  long s = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) s += x[static_cast<std::size_t>(i)] * pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
  return ((s % p) + p) % p;
}

long FilteredGroup::negate(long a) const {
  auto x = digits(a);
  for (auto& v : x) v = -v;
  return index_of(x);
}

FilteredGroup make_filtered_group(long p, long f, long e, long h0) {
  if (p < 2 || !is_prime(p)) throw BadParams("p must be prime");
  if (f < 1 || e < 0 || h0 < 1) throw BadParams("need f >= 1, e >= 0, h0 >= 1");
  long k0 = 0;
  for (long t = h0; t > 1; t /= p, ++k0)
    if (t % p) throw BadParams("h0 must be a power of p");
  FilteredGroup G;
  G.p = p;
  G.f = f;
  G.e = e;
  G.h0 = h0;
  G.q = 1;
  for (long k = 0; k < f; ++k) G.q *= p;
  G.dim = static_cast<int>(2 * k0 + f * e);
  G.size = 1;
  for (int k = 0; k < G.dim; ++k) {
    G.size *= p;
    if (G.size > kMaxGroupSize) throw BadParams("group too large for exact transforms");
  }
  const int N = G.dim;
  G.pairing.assign(static_cast<std::size_t>(N), std::vector<long>(static_cast<std::size_t>(N), 0));
  for (int j = 0; j < N; ++j) G.pairing[static_cast<std::size_t>(j)][static_cast<std::size_t>(N - 1 - j)] = 1;
  // L_i = span(u_1 .. u_m) with m = k0 + f (e - i) for 0 <= i <= e
  auto span_first = [&](long m) {
    std::vector<bool> in(static_cast<std::size_t>(G.size));
    for (long a = 0; a < G.size; ++a) {
      auto d = G.digits(a);
      bool ok = true;
      for (long k = m; k < N; ++k) ok = ok && d[static_cast<std::size_t>(k)] == 0;
      in[static_cast<std::size_t>(a)] = ok;
    }
    return in;
  };
  G.levels.push_back(span_first(N));
  for (long i = 0; i <= e; ++i) G.levels.push_back(span_first(k0 + f * (e - i)));
  G.levels.push_back(span_first(0));
  Report r = validate(G);
  if (!r.pass()) throw std::logic_error("filtered group construction failed validation");
  return G;
}

Report validate(const FilteredGroup& G) {
  Report r;
  r.identity = "filtered group invariants";
  r.range = "p=" + std::to_string(G.p) + " f=" + std::to_string(G.f) + " e=" + std::to_string(G.e) +
            " h0=" + std::to_string(G.h0);
  // pairing nondegenerate
  for (long a = 1; a < G.size; ++a) {
    bool zero = true;
    for (long b = 0; b < G.size && zero; ++b) zero = G.pair(a, b) == 0;
    if (zero) {
      r.violations.push_back("pairing degenerate");
      break;
    }
  }
  ++r.checked;
  auto count = [](const std::vector<bool>& s) {
    long n = 0;
    for (bool b : s) n += b;
    return n;
  };
  for (long i = -1; i <= G.e + 1; ++i) {
    const auto& L = G.level(i);
    if (i > -1) {
      const auto& prev = G.level(i - 1);
      for (long a = 0; a < G.size; ++a)
        if (L[static_cast<std::size_t>(a)] && !prev[static_cast<std::size_t>(a)])
          r.violations.push_back("levels not nested at " + std::to_string(i));
    }
    ++r.checked;
  }
  for (long i = 0; i <= G.e; ++i) {
    const auto& L = G.level(i);
    long expect = G.h0;
    for (long k = 0; k < G.e - i; ++k) expect *= G.q;
    if (count(L) != expect)
      r.violations.push_back("|L_" + std::to_string(i) + "| = " + std::to_string(count(L)) + ", expected " +
                             std::to_string(expect));
    // subgroup
    auto sum = [&](long a, long b) {
      auto x = G.digits(a), y = G.digits(b);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
      return G.index_of(x);
    };
    for (long a = 0; a < G.size; ++a) {
      if (!L[static_cast<std::size_t>(a)]) continue;
      for (long b = 0; b < G.size; ++b)
        if (L[static_cast<std::size_t>(b)] && !L[static_cast<std::size_t>(sum(a, b))]) {
          r.violations.push_back("L_" + std::to_string(i) + " not closed");
          a = G.size;
          break;
        }
    }
    // perp
    const auto& D = G.level(G.e - i);
    for (long b = 0; b < G.size; ++b) {
      bool perp = true;
      for (long a = 0; a < G.size && perp; ++a)
        if (L[static_cast<std::size_t>(a)]) perp = G.pair(a, b) == 0;
      if (perp != D[static_cast<std::size_t>(b)]) {
        r.violations.push_back("L_" + std::to_string(i) + "^perp != L_" + std::to_string(G.e - i));
        break;
      }
    }
    r.checked += 3;
  }
  long total = G.h0 * G.h0;
  for (long k = 0; k < G.e; ++k) total *= G.q;
  if (total != G.size) r.violations.push_back("|H| != h0^2 q^e");
  ++r.checked;
  return r;
}

LevelFunction indicator(const FilteredGroup& G, long level) {
  LevelFunction f;
  const auto& L = G.level(level);
  for (long a = 0; a < G.size; ++a) f.values.emplace_back(G.p, Rat(L[static_cast<std::size_t>(a)] ? 1 : 0));
  return f;
}

LevelFunction from_rationals(const FilteredGroup& G, const std::vector<Rat>& v) {
  if (static_cast<long>(v.size()) != G.size) throw BadInput("value table has wrong length");
  LevelFunction f;
  for (const auto& x : v) f.values.emplace_back(G.p, x);
  return f;
}

LevelFunction fourier(const LevelFunction& f, const FilteredGroup& G) {
  if (static_cast<long>(f.values.size()) != G.size) throw BadInput("function not defined on this group");
  LevelFunction out;
  out.values.resize(static_cast<std::size_t>(G.size));
  // pairing matrix applied once per beta
  const Rat scale(1, G.h0);
  std::vector<Cyclo> zeta;
  for (long k = 0; k < G.p; ++k) zeta.push_back(Cyclo::zeta_power(G.p, k));
  std::vector<std::vector<long>> digs(static_cast<std::size_t>(G.size));
  for (long a = 0; a < G.size; ++a) digs[static_cast<std::size_t>(a)] = G.digits(a);
  parallel_for(static_cast<std::size_t>(G.size), [&](std::size_t b) {
    // B beta
    std::vector<long> Bb(static_cast<std::size_t>(G.dim), 0);
    for (int i = 0; i < G.dim; ++i)
      for (int j = 0; j < G.dim; ++j)
        Bb[static_cast<std::size_t>(i)] += G.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * digs[b][static_cast<std::size_t>(j)];
    std::vector<Cyclo> bucket(static_cast<std::size_t>(G.p), Cyclo(G.p, Rat(0)));
    for (long a = 0; a < G.size; ++a) {
      long s = 0;
      for (int i = 0; i < G.dim; ++i) s += digs[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] * Bb[static_cast<std::size_t>(i)];
      bucket[static_cast<std::size_t>(((s % G.p) + G.p) % G.p)] += f.values[static_cast<std::size_t>(a)];
    }
    Cyclo acc(G.p, Rat(0));
    for (long k = 0; k < G.p; ++k) acc += zeta[static_cast<std::size_t>(k)] * bucket[static_cast<std::size_t>(k)];
    out.values[b] = scale * acc;
  });
  return out;
}

Report check_level_transform(const FilteredGroup& G, long i) {
  if (i < 0 || i > G.e) throw BadParams("level index must lie in [0, e]");
  Report r;
  r.identity = "fourier(1_{L_i}) = q^{e-i} 1_{L_{e-i}}";
  r.range = "p=" + std::to_string(G.p) + " f=" + std::to_string(G.f) + " e=" + std::to_string(G.e) +
            " h0=" + std::to_string(G.h0) + " i=" + std::to_string(i);
  auto hat = fourier(indicator(G, i), G);
  Rat c = 1;
  for (long k = 0; k < G.e - i; ++k) c *= G.q;
  auto target = indicator(G, G.e - i);
  for (long b = 0; b < G.size; ++b) {
    Cyclo want = c * target.values[static_cast<std::size_t>(b)];
    ++r.checked;
    if (!(hat.values[static_cast<std::size_t>(b)] == want))
      r.violations.push_back("at element " + std::to_string(b) + ": " + hat.values[static_cast<std::size_t>(b)].str() +
                             " != " + want.str());
  }
  r.rows.push_back({"|L_i|", std::to_string(G.h0) + "*" + std::to_string(G.q) + "^" + std::to_string(G.e - i)});
  r.rows.push_back({"scalar", to_str(c)});
  return r;
}

Report check_double_transform(const FilteredGroup& G, const LevelFunction& f) {
  Report r;
  r.identity = "fourier(fourier(f))(g) = q^e f(-g)";
  auto ff = fourier(fourier(f, G), G);
  Rat c = 1;
  for (long k = 0; k < G.e; ++k) c *= G.q;
  for (long g = 0; g < G.size; ++g) {
    ++r.checked;
    Cyclo want = c * f.values[static_cast<std::size_t>(G.negate(g))];
    if (!(ff.values[static_cast<std::size_t>(g)] == want)) r.violations.push_back("at element " + std::to_string(g));
  }
  return r;
}

Report check_parseval(const FilteredGroup& G, const LevelFunction& f) {
  Report r;
  r.identity = "sum |f^|^2 = q^e sum |f|^2";
  auto hat = fourier(f, G);
  Cyclo lhs(G.p, Rat(0)), rhs(G.p, Rat(0));
  for (const auto& v : hat.values) lhs += v * v.conj();
  for (const auto& v : f.values) rhs += v * v.conj();
  Rat c = 1;
  for (long k = 0; k < G.e; ++k) c *= G.q;
  rhs = c * rhs;
  ++r.checked;
  if (!(lhs == rhs)) r.violations.push_back(lhs.str() + " != " + rhs.str());
  r.rows.push_back({"sum |f^|^2", lhs.str()});
  r.rows.push_back({"q^e sum |f|^2", rhs.str()});
  return r;
}

}  // namespace reflect
