// reflect: command-line front end for the reflection library.
//
// JSON goes to stdout with every number as a decimal string; wall time goes to
// stderr so identical inputs give byte-identical output.  Exit status: 0 when
// every assertion holds, 1 on a violated identity, 2 on usage or input errors.

#include "cli_output.hpp"

#include "reflect/boxes.hpp"
#include "reflect/classgroup.hpp"
#include "reflect/cubic.hpp"
#include "reflect/localfourier.hpp"
#include "reflect/quad.hpp"
#include "reflect/quartic.hpp"
#include "reflect/subring.hpp"
#include "reflect/symmat.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace reflect;
using cli::Json;

namespace {

struct Outcome {
  Json body;
  bool pass = true;
  std::optional<std::string> csv;  // emitted instead of JSON when the format asks for it
};

struct Globals {
  bool pretty = false;
  std::string format = "auto";
  std::uint64_t seed = 20240601;
  std::optional<std::string> resume;
  long max_chunks = 0;
};

std::vector<Int> parse_ints(const std::string& s, std::size_t n, const std::string& what) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Int v;
    if (tok.empty() || v.set_str(tok, 10) != 0) throw BadInput(what + ": not an integer: '" + tok + "'");
    out.push_back(v);
  }
  if (out.size() != n) throw BadInput(what + ": expected " + std::to_string(n) + " comma-separated integers");
  return out;
}

Int parse_int(const std::string& s, const std::string& what) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) throw BadInput(what + ": not an integer: '" + s + "'");
  return v;
}

// g0,g1,g2 for y^3 + g2 y^2 + g1 y + g0
MonicCubic parse_monic(const std::string& s, const std::string& what) {
  auto v = parse_ints(s, 3, what);
  return {v[2], v[1], v[0]};
}

Json report_body(const Report& r) { return cli::report_json(r); }

Outcome from_report(const Report& r) { return {report_body(r), r.pass(), std::nullopt}; }

Outcome from_sweep(cli::SweepResult s, const std::string& range) {
  s.report.range = range;
  Outcome o = from_report(s.report);
  if (!s.complete()) {
    o.body["status"] = "incomplete";
    o.body["done"] = std::to_string(s.done);
    o.body["total"] = std::to_string(s.total);
    o.pass = false;
  }
  return o;
}

Json form_json(const BinaryForm& f) {
  Json c = Json::array();
  for (const auto& x : f.c) c.push_back(to_str(x));
  return c;
}

std::string rat(const Rat& r) {
  Rat x = r;
  x.canonicalize();
  return to_str(x);
}

// ---------------------------------------------------------------- quadratic

Outcome quad_superdisc(const std::string& inv, bool even_b, bool real) {
  Int I = parse_int(inv, "--invariant");
  auto classes = enumerate_quadratics(I);
  Json cl = Json::array();
  for (const auto& c : classes) {
    bool eb = mpz_even_p(c.b.get_mpz_t());
    if (even_b && !eb) continue;
    if (real && !c.real_roots()) continue;
    cl.push_back({{"a", to_str(c.a)}, {"b", to_str(c.b)}, {"c", to_str(c.c)},
                  {"real_roots", c.real_roots()}, {"even_b", eb}});
  }
  Json body;
  body["I"] = to_str(I);
  body["filter"] = {{"even_b", even_b}, {"real", real}};
  body["classes"] = cl;
  body["count"] = std::to_string(count_q(I, {even_b, real}));
  body["q"] = std::to_string(count_q(I, {false, false}));
  body["q2"] = std::to_string(count_q(I, {true, false}));
  body["qplus"] = std::to_string(count_q(I, {false, true}));
  body["q2plus"] = std::to_string(count_q(I, {true, true}));
  return {body, true, std::nullopt};
}

std::vector<long> symmetric_range(long N) {
  std::vector<long> v;
  for (long n = -N; n <= N; ++n)
    if (n != 0) v.push_back(n);
  return v;
}

Outcome quad_on_check(long N, const Globals& g) {
  if (N < 1) throw BadInput("--max must be positive");
  Json params = {{"max", std::to_string(N)}};
  auto s = cli::resumable_sweep("quad-on-check", params, symmetric_range(N),
                                [](const std::vector<long>& b) { return check_quadratic_ON(b); }, g.resume,
                                g.max_chunks);
  return from_sweep(s, "0 < |n| <= " + std::to_string(N));
}

Outcome legendre_sweep(std::optional<long> p1, std::optional<long> p3, long max) {
  Report total;
  total.identity = "q+(p1 p3) = 5 + (p1|p3), q2(4 p1 p3) = 10 + 2 (p3|p1)";
  if (p1 || p3) {
    if (!p1 || !p3) throw BadInput("give both --p1 and --p3, or neither");
    total.merge(legendre_check(*p1, *p3));
    total.range = "p1=" + std::to_string(*p1) + " p3=" + std::to_string(*p3);
  } else {
    if (max < 7) throw BadInput("--max must be at least 7");
    for (long a : primes_up_to(max))
      for (long b : primes_up_to(max))
        if (a % 4 == 1 && b % 4 == 3) {
          Report r = legendre_check(a, b);
          r.rows[0].insert(r.rows[0].begin(), {std::to_string(a), std::to_string(b)});
          total.merge(r);
        }
    total.range = "primes p1 = 1, p3 = 3 mod 4 below " + std::to_string(max);
  }
  return from_report(total);
}

// ---------------------------------------------------------------- cubic

Outcome cubic_count(const std::string& Ds, bool traced, const std::vector<std::string>& splits,
                    const std::vector<long>& marked) {
  Int D = parse_int(Ds, "--disc");
  std::vector<LocalCondition> conds;
  if (traced) conds.push_back(LocalCondition::traced3());
  for (const auto& s : splits) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw BadInput("--split expects p:TYPE");
    long p = parse_int(s.substr(0, colon), "--split prime").get_si();
    auto t = parse_splitting(s.substr(colon + 1));
    if (!t || !is_prime(p)) throw BadInput("--split: bad prime or splitting type '" + s + "'");
    conds.push_back(LocalCondition::splitting(p, *t));
  }
  for (long p : marked) {
    if (!is_prime(p)) throw BadInput("--marked-root needs a prime");
    conds.push_back(LocalCondition::marked_root(p));
  }
  if (D == 0) throw ZeroDiscriminant();
  auto classes = enumerate_cubics(D);
  Json cl = Json::array();
  for (const auto& c : classes) {
    Rat w = condition_weight(c.rep, conds);
    cl.push_back({{"coeffs", form_json(c.rep)}, {"form", c.rep.str()}, {"stab", std::to_string(c.stab)},
                  {"weight", rat(w)}});
  }
  Json body;
  body["D"] = to_str(D);
  Json cj = Json::array();
  if (traced) cj.push_back("traced");
  for (const auto& s : splits) cj.push_back("split " + s);
  for (long p : marked) cj.push_back("marked-root " + std::to_string(p));
  body["conditions"] = cj;
  body["classes"] = cl;
  body["h"] = rat(h(classes, conds));
  return {body, true, std::nullopt};
}

Outcome cubic_on_check(long B, const Globals& g) {
  if (B < 1) throw BadInput("--max must be positive");
  Json params = {{"max", std::to_string(B)}};
  auto s = cli::resumable_sweep("cubic-on-check", params, symmetric_range(B),
                                [](const std::vector<long>& b) { return check_cubic_ON(b); }, g.resume,
                                g.max_chunks, 16);
  return from_sweep(s, "0 < |D| <= " + std::to_string(B));
}

Outcome disc_reduction(long p, const std::string& Ds) {
  Report r = check_disc_reduction(p, parse_int(Ds, "--disc"));
  Json body = report_body(r);
  body["columns"] = {"h(D)", "h(D/p^2, R_p)", "h(D/p^4)", "h(D/p^4, R_p)", "2 h3(T111) - h3(T3)", "rhs"};
  return {body, r.pass(), std::nullopt};
}

Outcome shintani(const std::string& sign, long N, bool traced) {
  int s = sign == "+" ? 1 : sign == "-" ? -1 : 0;
  if (s == 0) throw BadInput("--sign must be + or -");
  auto coeffs = shintani_coeffs(s, N, traced);
  std::vector<std::vector<std::string>> rows;
  Json jr = Json::array();
  for (const auto& [n, v] : coeffs) {
    rows.push_back({std::to_string(n), rat(v)});
    jr.push_back({std::to_string(n), rat(v)});
  }
  Json body;
  body["sign"] = sign;
  body["traced"] = traced;
  body["columns"] = {"n", "h"};
  body["rows"] = jr;
  return {body, true, cli::csv({"n", "h"}, rows)};
}

// ---------------------------------------------------------------- quartic

Json orbit_json(const QuarticOrbit& o) {
  return {{"coeffs", form_json(o.rep)}, {"form", o.rep.str()}, {"stab", std::to_string(o.stab)},
          {"real_roots", std::to_string(o.real_roots)}, {"sign", std::to_string(o.sign)}};
}

Outcome quartic_count(const std::string& res, const std::string& cond) {
  MonicCubic g = parse_monic(res, "--resolvent");
  auto c = parse_sign_condition(cond);
  if (!c) throw BadInput("--cond: unknown condition '" + cond + "'");
  if (g.disc() == 0) throw SingularResolvent();
  auto orbits = enumerate_quartics(g);
  Json cl = Json::array();
  for (const auto& o : orbits)
    if (satisfies(o, *c)) cl.push_back(orbit_json(o));
  Json body;
  body["resolvent"] = g.str();
  body["cond"] = to_string(*c);
  body["weights"] = "1/|Stab| in GL2(Z), -I included";
  body["classes"] = cl;
  body["h"] = rat(weighted(orbits, *c));
  return {body, true, std::nullopt};
}

Outcome symmat_count(const std::string& cp) {
  MonicCubic g = parse_monic(cp, "--charpoly");
  auto ms = symmetric_matrices(g);
  Json list = Json::array();
  for (const auto& m : ms) {
    Json row = Json::array();
    for (long x : m) row.push_back(std::to_string(x));
    list.push_back(row);
  }
  Json body;
  body["charpoly"] = g.str();
  body["layout"] = "d1,d2,d3,u,v,w for [[d1,u,v],[u,d2,w],[v,w,d3]]";
  body["matrices"] = list;
  body["s"] = std::to_string(ms.size());
  return {body, true, std::nullopt};
}

Outcome bq_check(const std::string& res) {
  Report r = check_BQ(parse_monic(res, "--resolvent"));
  Json body = report_body(r);
  body["columns"] = {"quantity", "lhs", "rhs", "result", "kind"};
  return {body, r.pass(), std::nullopt};
}

Outcome box_search(const std::string& cubic, int bound, bool even) {
  auto v = parse_ints(cubic, 4, "--cubic");
  std::array<Int, 4> f{v[3], v[2], v[1], v[0]};
  if (bound < 1) throw BadInput("--bound must be positive");
  BoxSearch s = search_boxes(f, bound, even);
  Json cl = Json::array();
  for (const auto& c : s.classes)
    cl.push_back({{"A", to_string(c.rep.A)}, {"B", to_string(c.rep.B)}, {"stab", std::to_string(c.stab)},
                  {"seen", std::to_string(c.seen)}});
  Json body;
  body["f"] = BinaryForm::cubic(f[0], f[1], f[2], f[3]).str();
  body["entry_bound"] = std::to_string(bound);
  body["even_diagonal"] = even;
  body["pairs_found"] = std::to_string(s.pairs_found);
  body["classes"] = cl;
  body["h"] = rat(s.h);
  body["complete_certified"] = s.complete_certified;
  body["note"] = "classes are those with a representative inside the entry bound; merging uses a bounded search";
  return {body, true, std::nullopt};
}

// ---------------------------------------------------------------- local

Outcome fourier_level(long p, long f, long e, long h0, std::optional<long> i) {
  FilteredGroup G = make_filtered_group(p, f, e, h0);
  Report total = validate(G);
  if (i) {
    if (*i < 0 || *i > e) throw BadInput("--i must lie in [0, e]");
    total.merge(check_level_transform(G, *i));
  } else {
    for (long k = 0; k <= e; ++k) total.merge(check_level_transform(G, k));
  }
  total.identity = "fourier(1_{L_i}) = q^{e-i} 1_{L_{e-i}}";
  total.range = "p=" + std::to_string(p) + " f=" + std::to_string(f) + " e=" + std::to_string(e) +
                " h0=" + std::to_string(h0) + (i ? " i=" + std::to_string(*i) : std::string(" all i"));
  Json body = report_body(total);
  body["group"] = {{"q", std::to_string(G.q)}, {"dim", std::to_string(G.dim)}, {"size", std::to_string(G.size)}};
  return {body, total.pass(), std::nullopt};
}

SplittingType parse_sigma(const std::string& s) {
  auto t = parse_splitting(s);
  if (!t || *t == SplittingType::T0) throw BadInput("--sigma: expected 111, 12, 3, 1^21 or 1^3");
  return *t;
}

long prime_of(long q) {
  for (long p = 2; p <= q; ++p)
    if (q % p == 0) {
      long r = q;
      while (r % p == 0) r /= p;
      if (r != 1) break;
      return p;
    }
  throw BadInput("--q must be a prime power");
}

Outcome subring_zeta(const std::string& sig, long q, int terms, bool traced, std::optional<long> t_opt,
                     std::optional<long> d0_opt, std::optional<long> e_opt) {
  SplittingType sigma = parse_sigma(sig);
  if (q < 2) throw BadInput("--q must be a prime power");
  long p = prime_of(q);
  long t = t_opt ? *t_opt : (traced ? 1 : 0);
  long e = e_opt ? *e_opt : (p == 3 ? 1 : 0);
  bool ramified = sigma == SplittingType::T1_21 || sigma == SplittingType::T1_3;
  long d0 = d0_opt ? *d0_opt : (sigma == SplittingType::T1_3 ? 2 : ramified ? 1 : 0);
  if (terms < 1) throw BadInput("--terms must be positive");
  auto counts = subring_series(sigma, d0, q, t, e, terms);
  std::vector<std::vector<std::string>> rows;
  Json jr = Json::array();
  for (int k = 0; k < terms; ++k) {
    std::string d = std::to_string(d0 + 2 * k);
    rows.push_back({d, to_str(counts[static_cast<std::size_t>(k)])});
    jr.push_back({d, to_str(counts[static_cast<std::size_t>(k)])});
  }
  Json body;
  body["sigma"] = to_string(sigma);
  body["q"] = std::to_string(q);
  body["d0"] = std::to_string(d0);
  body["t"] = std::to_string(t);
  body["e"] = std::to_string(e);
  body["columns"] = {"d", "count"};
  body["rows"] = jr;
  return {body, true, cli::csv({"d", "count"}, rows)};
}

CubicRing read_ring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open ring file '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw BadInput("ring file is not valid JSON");
  auto num = [](const Json& v) {
    Int x;
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (x.set_str(s, 10) != 0) throw BadInput("ring file: not an integer: " + s);
    return x;
  };
  if (j.contains("form")) {
    const Json& f = j["form"];
    if (!f.is_array() || f.size() != 4) throw BadInput("ring file: form needs [a, b, c, d]");
    return ring_of_form(BinaryForm::cubic(num(f[0]), num(f[1]), num(f[2]), num(f[3])));
  }
  if (!j.contains("structure")) throw BadInput("ring file needs \"structure\" (3x3x3) or \"form\"");
  const Json& s = j["structure"];
  CubicRing R;
  if (!s.is_array() || s.size() != 3) throw BadInput("ring file: structure must be 3x3x3");
  for (int i = 0; i < 3; ++i) {
    if (!s[i].is_array() || s[i].size() != 3) throw BadInput("ring file: structure must be 3x3x3");
    for (int k = 0; k < 3; ++k) {
      if (!s[i][k].is_array() || s[i][k].size() != 3) throw BadInput("ring file: structure must be 3x3x3");
      for (int l = 0; l < 3; ++l) R.c[i][k][l] = num(s[i][k][l]);
    }
  }
  validate_ring(R);
  return R;
}

Outcome subring_oracle_cmd(const std::string& path, long p, int k, int t) {
  CubicRing R = read_ring(path);
  if (!is_prime(p)) throw BadInput("--p must be prime");
  if (k < 0) throw BadInput("--k must be nonnegative");
  Json body;
  body["disc"] = to_str(R.disc());
  body["p"] = std::to_string(p);
  body["k"] = std::to_string(k);
  body["t"] = std::to_string(t);
  body["count"] = to_str(subring_oracle(R, p, k, t));
  return {body, true, std::nullopt};
}

// ---------------------------------------------------------------- class groups

Outcome classgroup_cmd(const std::string& Ds) {
  ClassGroupData cg = class_group(parse_int(Ds, "--disc"));
  Json el = Json::array();
  for (const auto& f : cg.elements) el.push_back(to_string(f));
  Json body;
  body["D"] = to_str(cg.D);
  body["h"] = std::to_string(cg.h);
  body["three_torsion"] = std::to_string(cg.three_torsion);
  body["elements"] = el;
  return {body, true, std::nullopt};
}

Outcome scholz_cmd(long max, const Globals& g) {
  if (max < 2) throw BadInput("--max must be at least 2");
  Json params = {{"max", std::to_string(max)}};
  auto s = cli::resumable_sweep("scholz-check", params, scholz_discriminants(max),
                                [](const std::vector<long>& b) { return scholz_sweep(b); }, g.resume,
                                g.max_chunks, 16);
  return from_sweep(s, "fundamental D, 3 not dividing D, 1 < |D| <= " + std::to_string(max));
}

// ---------------------------------------------------------------- verify-all

Outcome verify_all(double budget, const Globals& g) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  std::vector<std::pair<std::string, std::function<Report()>>> steps;
  steps.push_back({"quad-on-check --max 300", [] { return check_quadratic_ON(300); }});
  steps.push_back({"legendre-check --max 40", [] {
                     Report r;
                     for (long a : primes_up_to(40))
                       for (long b : primes_up_to(40))
                         if (a % 4 == 1 && b % 4 == 3) r.merge(legendre_check(a, b));
                     r.identity = "Legendre sample";
                     return r;
                   }});
  steps.push_back({"cubic-on-check --max 100", [] { return check_cubic_ON(100); }});
  steps.push_back({"disc-reduction fixtures", [&g] {
                     Report r;
                     r.merge(check_disc_reduction(5, -575));
                     r.merge(check_disc_reduction(2, -92));
                     r.merge(check_disc_reduction(5, 25));
                     for (auto [p, D] : reduction_pairs(g.seed, 20, 2000)) r.merge(check_disc_reduction(p, D));
                     r.identity = "discriminant reduction";
                     return r;
                   }});
  steps.push_back({"bq-check fixtures", [] {
                     Report r;
                     for (auto gg : {MonicCubic{0, -1, -1}, MonicCubic{-2, -3, 6}, MonicCubic{0, -1, 0},
                                     MonicCubic{0, 1, 0}, MonicCubic{0, -4, -1}})
                       r.merge(check_BQ(gg));
                     r.identity = "quartic reflection identities";
                     return r;
                   }});
  steps.push_back({"fourier-level fixtures", [] {
                     Report r;
                     for (auto [p, f, e, h0] : std::vector<std::array<long, 4>>{
                              {3, 1, 1, 1}, {3, 1, 1, 3}, {2, 1, 2, 2}, {2, 2, 1, 4}}) {
                       FilteredGroup G = make_filtered_group(p, f, e, h0);
                       r.merge(validate(G));
                       for (long i = 0; i <= e; ++i) r.merge(check_level_transform(G, i));
                     }
                     r.identity = "level transforms";
                     return r;
                   }});
  steps.push_back({"subring counts", [] { return check_subring_counts({2, 3, 5}, 4); }});
  steps.push_back({"subring series", [] { return check_subring_series({2, 3, 5, 7, 23}, 10); }});
  steps.push_back({"scholz-check --max 200", [] { return scholz_sweep(200); }});

  Json results = Json::array();
  bool pass = true;
  for (auto& [name, fn] : steps) {
    double elapsed = std::chrono::duration<double>(clock::now() - start).count();
    if (elapsed > budget) {
      results.push_back({{"step", name}, {"status", "skipped"}, {"checked", "0"}, {"violations", "0"}});
      pass = false;
      continue;
    }
    auto t0 = clock::now();
    Report r = fn();
    std::cerr << name << ": " << std::chrono::duration<double>(clock::now() - t0).count() << " s\n";
    results.push_back({{"step", name}, {"status", r.pass() ? "pass" : "fail"},
                       {"checked", std::to_string(r.checked)}, {"violations", std::to_string(r.violations.size())}});
    pass = pass && r.pass();
  }
  Json body;
  body["budget"] = std::to_string(static_cast<long>(budget));
  body["seed"] = std::to_string(g.seed);
  body["status"] = pass ? "pass" : "fail";
  body["steps"] = results;
  return {body, pass, std::nullopt};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact class counts and reflection identities for integral forms"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--pretty", g.pretty, "human-readable table instead of JSON");
  app.add_option("--format", g.format, "json, csv or auto (csv for tables)")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  app.add_option("--seed", g.seed, "seed for randomized parameter choices");
  std::string resume;
  app.add_option("--resume", resume, "state file for resumable sweeps");
  app.add_option("--max-chunks", g.max_chunks, "stop a sweep after this many chunks (resume later)");

  std::function<Outcome()> run;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string s_inv, s_disc, s_res, s_cubic, s_ring, s_sign = "+", s_sigma, s_cond = "any";
  bool f_even = false, f_real = false, f_traced = false;
  long n_max = 0, n_p = 0, n_f = 1, n_e = 0, n_h0 = 1, n_q = 0;
  int n_bound = 2, n_terms = 10, n_k = 0, n_t = 0;
  double budget = 600;
  std::optional<long> o_i, o_p1, o_p3, o_t, o_d0, o_e;
  std::vector<std::string> v_split;
  std::vector<long> v_marked;

  auto* c = sub("quad-superdisc", "quadratics of given superdiscriminant up to translation");
  c->add_option("--invariant", s_inv, "superdiscriminant I")->required();
  c->add_flag("--even-b", f_even, "middle coefficient even");
  c->add_flag("--real", f_real, "real roots only");
  c->callback([&] { run = [&] { return quad_superdisc(s_inv, f_even, f_real); }; });

  c = sub("quad-on-check", "q2+(4n) = q(n) and q2(4n) = 2 q+(n) for 0 < |n| <= N");
  c->add_option("--max", n_max)->required();
  c->callback([&] { run = [&] { return quad_on_check(n_max, g); }; });

  c = sub("legendre-check", "q+(p1 p3) and q2(4 p1 p3) against Legendre symbols");
  c->add_option("--p1", o_p1, "prime = 1 mod 4");
  c->add_option("--p3", o_p3, "prime = 3 mod 4");
  n_max = 50;
  c->add_option("--max", n_max, "sweep all prime pairs below this bound");
  c->callback([&] { run = [&] { return legendre_sweep(o_p1, o_p3, n_max); }; });

  c = sub("cubic-count", "GL2(Z)-classes of binary cubics of discriminant D");
  c->add_option("--disc", s_disc)->required();
  c->add_flag("--traced", f_traced, "middle coefficients divisible by 3");
  c->add_option("--split", v_split, "p:TYPE splitting condition (111, 12, 3, 1^21, 1^3, 0)");
  c->add_option("--marked-root", v_marked, "weight by roots in P^1(F_p)");
  c->callback([&] { run = [&] { return cubic_count(s_disc, f_traced, v_split, v_marked); }; });

  c = sub("cubic-on-check", "h3(-27D) = 3h(D) or h(D) for 0 < |D| <= B");
  c->add_option("--max", n_max)->required();
  c->callback([&] { run = [&] { return cubic_on_check(n_max, g); }; });

  c = sub("disc-reduction", "discriminant reduction identity at p for D");
  c->add_option("--p", n_p)->required();
  c->add_option("--disc", s_disc)->required();
  c->callback([&] { run = [&] { return disc_reduction(n_p, s_disc); }; });

  c = sub("shintani", "coefficient table n -> h(+-n) or h3(+-27n)");
  c->add_option("--sign", s_sign)->required();
  c->add_option("--max", n_max)->required();
  c->add_flag("--traced", f_traced);
  c->callback([&] { run = [&] { return shintani(s_sign, n_max, f_traced); }; });

  c = sub("quartic-count", "binary quartics with resolvent in the shift class of g");
  c->add_option("--resolvent", s_res, "g0,g1,g2 for y^3 + g2 y^2 + g1 y + g0")->required();
  c->add_option("--cond", s_cond, "any, indef, posdef, negdef, fourreal, def");
  c->callback([&] { run = [&] { return quartic_count(s_res, s_cond); }; });

  c = sub("symmat-count", "integer symmetric 3x3 matrices with characteristic polynomial g");
  c->add_option("--charpoly", s_res, "g0,g1,g2")->required();
  c->callback([&] { run = [&] { return symmat_count(s_res); }; });

  c = sub("bq-check", "quartic reflection identities for one resolvent");
  c->add_option("--resolvent", s_res, "g0,g1,g2")->required();
  c->callback([&] { run = [&] { return bq_check(s_res); }; });

  c = sub("box-search", "bounded search for pairs of symmetric 3x3 matrices with det(Ax - B) = f");
  c->add_option("--cubic", s_cubic, "c0,c1,c2,c3 for c3 x^3 + c2 x^2 + c1 x + c0")->required();
  c->add_option("--bound", n_bound)->required();
  c->add_flag("--even-diagonal", f_even);
  c->callback([&] { run = [&] { return box_search(s_cubic, n_bound, f_even); }; });

  c = sub("fourier-level", "transform of level indicators on a filtered group");
  c->add_option("--p", n_p)->required();
  c->add_option("--f", n_f)->required();
  c->add_option("--e", n_e)->required();
  c->add_option("--h0", n_h0)->required();
  c->add_option("--i", o_i, "level index; all levels when omitted");
  c->callback([&] { run = [&] { return fourier_level(n_p, n_f, n_e, n_h0, o_i); }; });

  c = sub("subring-zeta", "closed-form counts of traced orders by discriminant exponent");
  c->add_option("--sigma", s_sigma)->required();
  c->add_option("--q", n_q)->required();
  c->add_option("--terms", n_terms)->required();
  c->add_flag("--traced", f_traced, "t = 1");
  c->add_option("--t", o_t, "trace exponent");
  c->add_option("--d0", o_d0, "discriminant exponent of the maximal order");
  c->add_option("--e", o_e, "valuation of 3");
  c->callback([&] { run = [&] { return subring_zeta(s_sigma, n_q, n_terms, f_traced, o_t, o_d0, o_e); }; });

  c = sub("subring-oracle", "brute-force count of index p^k subrings of a cubic ring");
  c->add_option("--ring", s_ring, "JSON file with \"structure\" or \"form\"")->required();
  c->add_option("--p", n_p)->required();
  c->add_option("--k", n_k)->required();
  c->add_option("--t", n_t);
  c->callback([&] { run = [&] { return subring_oracle_cmd(s_ring, n_p, n_k, n_t); }; });

  c = sub("classgroup", "form class group of discriminant D");
  c->add_option("--disc", s_disc)->required();
  c->callback([&] { run = [&] { return classgroup_cmd(s_disc); }; });

  c = sub("scholz-check", "3-torsion reflection over fundamental discriminants");
  c->add_option("--max", n_max)->required();
  c->callback([&] { run = [&] { return scholz_cmd(n_max, g); }; });

  c = sub("verify-all", "every module check at fixture scale");
  c->add_option("--budget", budget, "seconds; later steps are skipped once exceeded");
  c->callback([&] { run = [&] { return verify_all(budget, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!resume.empty()) g.resume = resume;

  std::string command = app.get_subcommands().front()->get_name();
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = run();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool want_csv = g.format == "csv" || (g.format == "auto" && out.csv && !g.pretty);
  if (want_csv) {
    if (!out.csv) {
      std::cerr << "error: " << command << " has no CSV form\n";
      return 2;
    }
    std::cout << *out.csv;
  } else {
    Json doc = cli::envelope(command, out.body);
    std::cout << (g.pretty ? cli::pretty(doc) : doc.dump(2) + "\n");
  }
  std::cerr << "wall_time: " << wall << " s\n";
  return out.pass ? 0 : 1;
}
