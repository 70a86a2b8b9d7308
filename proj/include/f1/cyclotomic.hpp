#pragma once

#include <set>
#include <string>
#include <vector>

#include "f1/poly.hpp"

namespace f1 {

/// n-th cyclotomic polynomial, integer coefficients, computed by exact
/// division of q^n - 1 by the proper-divisor cyclotomics. Memoized behind a
/// mutex; contents are deterministic.
const Poly& cyclotomic_poly(long n);

/// q^n - 1.
Poly q_int(long n);

/// {N}_q! = (q^N - 1)(q^{N-1} - 1) ... (q - 1); empty product 1 for N = 0.
Poly q_factorial(long n);

/// Exact primitive root of unity e^{2*pi*i*k/m} as the reduced fraction k/m
/// with 0 <= k < m. The identity root is 0/1.
struct RootOfUnity {
  long k = 0;
  long m = 1;

  static RootOfUnity make(long k, long m); // reduces; m may not be 0
  long order() const { return m; }

  RootOfUnity inverse() const;
  RootOfUnity operator*(const RootOfUnity& o) const;
  bool operator==(const RootOfUnity& o) const = default;
  auto operator<=>(const RootOfUnity& o) const = default;

  std::string str() const; // zeta(k/m)
  static RootOfUnity parse(const std::string& text);
};

/// Order of xi * eta^{-1}, computed exactly from the difference fraction.
long ratio_order(const RootOfUnity& xi, const RootOfUnity& eta);

/// Habiro adjacency: xi and eta are adjacent iff their ratio has order 1 or a
/// prime power (order 1 keeps adjacency reflexive).
bool adjacent(const RootOfUnity& xi, const RootOfUnity& eta);

/// Describable families of roots of unity. Arbitrary infinite subsets are
/// deliberately not representable.
struct RootSetDescription {
  enum class Kind { FiniteList, AllOrdersIn, PrimePowerOrders, AllPrimeOrders };
  Kind kind = Kind::FiniteList;
  std::vector<RootOfUnity> list; // FiniteList: pairwise distinct
  std::set<long> orders;         // AllOrdersIn
  long p = 2;                    // PrimePowerOrders

  static RootSetDescription finite(std::vector<RootOfUnity> roots);
  static RootSetDescription all_orders_in(std::set<long> orders);
  static RootSetDescription prime_power_orders(long p);
  static RootSetDescription all_prime_orders();
};

/// Does the described set contain infinitely many points adjacent to xi?
/// Finite descriptions always answer false; the symbolic families are decided
/// by order arithmetic.
bool is_limit_point(const RootOfUnity& xi, const RootSetDescription& s);

} // namespace f1
