#pragma once
// Finite Fourier analysis on a filtered elementary-abelian p-group.
//
// H = F_p^N carries a nondegenerate symmetric pairing <,> and a chain of level
// subspaces L_{-1} = H, L_0, ..., L_e, L_{e+1} = 0 with
//   |L_i| = h0 q^{e-i},   L_i^perp = L_{e-i},   |H| = h0^2 q^e.
// The transform is f^(b) = (1/h0) sum_a zeta_p^{<a,b>} f(a), exact in Q(zeta_p).

#include "reflect/arith.hpp"
#include "reflect/report.hpp"

#include <string>
#include <vector>

namespace reflect {

// element of Q(zeta_p): sum c_k zeta^k, normalized so that c_{p-1} = 0
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long p, const Rat& r);
  static Cyclo zeta_power(long p, long k);

  long p() const { return p_; }
  bool is_rational() const;
  Rat rational() const;  // throws unless is_rational()
  Cyclo conj() const;
  std::string str() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Rat& r, Cyclo a);
  friend bool operator==(const Cyclo& a, const Cyclo& b);

 private:
  void normalize();
  long p_ = 2;
  std::vector<Rat> c_{Rat(0), Rat(0)};
};

struct FilteredGroup {
  long p = 2, f = 1, e = 0, h0 = 1;
  long q = 2;    // p^f
  int dim = 0;   // N
  long size = 1; // p^N
  std::vector<std::vector<long>> pairing;  // N x N over F_p
  // level(i) for i = -1 .. e+1, stored at index i + 1
  std::vector<std::vector<bool>> levels;

  const std::vector<bool>& level(long i) const { return levels.at(static_cast<std::size_t>(i + 1)); }
  std::vector<long> digits(long index) const;
  long index_of(const std::vector<long>& v) const;
  long pair(long a, long b) const;  // <a, b> in [0, p)
  long negate(long a) const;
};

// Builds the group with an antidiagonal pairing and coordinate flags as levels;
// throws BadParams on inconsistent sizes.  Validates every stated invariant.
FilteredGroup make_filtered_group(long p, long f, long e, long h0);
// Re-checks subgroup, nesting, size and perp conditions by brute force.
Report validate(const FilteredGroup& G);

struct LevelFunction {
  std::vector<Cyclo> values;  // indexed by element index
};
LevelFunction indicator(const FilteredGroup& G, long level);
LevelFunction from_rationals(const FilteredGroup& G, const std::vector<Rat>& v);

LevelFunction fourier(const LevelFunction& f, const FilteredGroup& G);

// fourier(1_{L_i}) = q^{e-i} 1_{L_{e-i}}
Report check_level_transform(const FilteredGroup& G, long i);
// fourier(fourier(f))(g) = q^e f(-g) and sum |f^|^2 = q^e sum |f|^2
Report check_double_transform(const FilteredGroup& G, const LevelFunction& f);
Report check_parseval(const FilteredGroup& G, const LevelFunction& f);

}  // namespace reflect
