#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace f1 {

using Int = mpz_class;
using Rat = mpq_class;

/// Rational in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<long, int>> factorize(long n);

bool is_prime(long n);

/// True iff n is 1 or p^k for a prime p (1 = p^0 counts).
bool is_prime_power(long n);

long euler_phi(long n);

/// Divisors of n in ascending order.
std::vector<long> divisors(long n);

Int factorial(long n);

Int binomial(long n, long k);

} // namespace f1
