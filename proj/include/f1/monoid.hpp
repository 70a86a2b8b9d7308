#pragma once

#include <string>
#include <vector>

#include "f1/linalg.hpp"
#include "f1/poly.hpp"

namespace f1 {

/// Finitely generated commutative monoid in one of four shapes: N^k, Z^k,
/// Z/n, or the integer points of the dual of a smooth cone (stored with the
/// splitting N^k x Z^m).
struct MonoidPresentation {
  enum class Kind { FreeMonoid, FreeAbelian, Cyclic, ToricSmooth };
  Kind kind = Kind::FreeMonoid;
  int k = 1;  // free/monoid rank
  int m = 0;  // group rank (ToricSmooth)
  long n = 1; // Cyclic modulus

  // ToricSmooth provenance: the defining rays and the dual basis splitting
  // (columns v_1..v_r of a unimodular matrix; the first k are the monoid
  // generators, the rest generate the group part).
  ZMat rays;
  ZMat dual_basis;

  static MonoidPresentation free_monoid(int k);
  static MonoidPresentation free_abelian(int k);
  static MonoidPresentation cyclic(long n);

  /// Count of N-type coordinates (prime support lives here).
  int monoid_rank() const;
  /// Count of Z-type coordinates.
  int group_rank() const;
  bool is_group() const;

  std::string str() const; // N^k | Z^k | Z/n | cone[[...],[...]]
  static MonoidPresentation parse(const std::string& text);
};

/// Prime ideal P_S = {x : x_i > 0 for some i in S}, S a subset of the free
/// coordinates. The empty set is the generic point.
struct PrimeIdeal {
  std::vector<int> coords; // sorted, 0-based
  bool operator==(const PrimeIdeal& o) const = default;
  std::string str() const; // P{}, P{1,3}
};

struct SpecResult {
  std::vector<PrimeIdeal> points;              // sorted by (size, lex)
  std::vector<std::pair<int, int>> order;      // (i,j) with points[i] < points[j], covering pairs
};

/// All prime ideals with their specialization poset (inclusion).
SpecResult spec(const MonoidPresentation& mp);

/// Direct verification of ideal-ness and primality on generator pairs.
bool verify_prime(const MonoidPresentation& mp, const PrimeIdeal& p);

/// Base change to Z: a symbolic presentation of the monoid ring Z[M].
struct RingPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relations; // e.g. "q^5 - 1"
  bool laurent = false;               // generators come with inverses
  std::string str() const;            // Z[q]/(q^5 - 1), Z[q,q^-1], ...
};

RingPresentation base_change(const MonoidPresentation& mp);

/// Monomial matrix: exactly one nonzero entry per row and column; entries in
/// Z/m written additively as exponents of the generator a.
struct MonomialMatrix {
  int n = 1;
  long mod = 1;
  std::vector<int> perm;  // row i has its entry in column perm[i]
  std::vector<long> ent;  // exponent of a at (i, perm[i])

  static MonomialMatrix identity(int n, long mod);
  MonomialMatrix compose(const MonomialMatrix& o) const; // this * o
  MonomialMatrix inverse() const;
  bool operator==(const MonomialMatrix& o) const = default;
  std::string str() const; // [[0,a],[1,0]]
};

/// Full enumeration of GL(n) over the unit group of A, with composition,
/// identity and inverses; cardinality n! * m^n. A must have a finite unit
/// group (Cyclic, or anything whose units are trivial).
std::vector<MonomialMatrix> gl_points(int n, const MonoidPresentation& a);

/// Monoid of integer points of the dual of the cone spanned by the given
/// rays. The rays must extend to a lattice basis (smooth cone); otherwise an
/// invalid_argument carries the sublattice-index diagnostic.
MonoidPresentation toric_monoid_from_cone(const ZMat& rays);

} // namespace f1
