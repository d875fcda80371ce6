#pragma once
// Exact integer/rational helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflect {

using Int = mpz_class;
using Rat = mpq_class;

struct ZeroDiscriminant : std::domain_error {
  ZeroDiscriminant() : std::domain_error("zero discriminant") {}
};
struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroInvariant : BadInput {
  ZeroInvariant() : BadInput("invariant must be nonzero") {}
};
struct BadPrimes : BadInput {
  using BadInput::BadInput;
};
struct SingularResolvent : BadInput {
  SingularResolvent() : BadInput("resolvent has zero discriminant") {}
};
struct MultipleRoots : BadInput {
  MultipleRoots() : BadInput("cubic has a multiple root") {}
};
struct BadParams : BadInput {
  using BadInput::BadInput;
};
struct NotARing : BadInput {
  using BadInput::BadInput;
};
struct BadDiscriminant : BadInput {
  using BadInput::BadInput;
};

// floor(sqrt(n)) for n >= 0
Int isqrt(const Int& n);
// exact square root if n is a perfect square
std::optional<Int> exact_sqrt(const Int& n);
Int floor_div(const Int& a, const Int& b);
Int mod(const Int& a, const Int& b);  // result in [0, |b|)
bool divides(const Int& d, const Int& n);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);
// largest e with p^e | n (n != 0)
int valuation(const Int& n, long p);
bool is_fundamental(long D);
int legendre(long a, long p);  // Euler's criterion, p odd prime

std::string to_str(const Int& v);
std::string to_str(const Rat& v);

// Threads available to sweeps: REFLECT_RINGS_THREADS caps hardware_concurrency.
unsigned worker_count();
// Runs body(i) for i in [0, n) over worker_count() threads; results land by index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace reflect
