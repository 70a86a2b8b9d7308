#pragma once

#include <string>
#include <vector>

#include "f1/cyclotomic.hpp"
#include "f1/poly.hpp"

namespace f1 {

/// Element of the cyclotomic field Q(zeta_m), stored as the canonical residue
/// modulo Phi_m: a dense coefficient vector of length phi(m). Conductor 1 is
/// plain Q. Products are reduced immediately so equality stays structural.
class Cyclo {
public:
  Cyclo() : m_(1), c_(1, Rat(0)) {}

  static Cyclo from_rational(const Rat& r, long m = 1);
  static Cyclo root(const RootOfUnity& z); // zeta_m^k in conductor ord(z)
  /// Residue of a univariate polynomial in x = zeta_m.
  static Cyclo from_poly(const Poly& p, long m);

  long conductor() const { return m_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const; // requires is_rational()
  bool is_integral() const;   // all residue coefficients have denominator 1

  /// Same value in the larger field Q(zeta_M); m | M required.
  Cyclo lifted(long M) const;

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(const Rat& r) const;
  Cyclo div_exact(long n) const; // divide by a nonzero integer
  Cyclo pow(unsigned long e) const;

  bool operator==(const Cyclo& o) const;

  /// Is this value a root of unity? (zero answers false). Roots of unity in
  /// Q(zeta_m) form mu_{lcm(2,m)}, so one exact power test decides.
  bool is_root_of_unity() const;

  /// Residue polynomial in the variable x.
  Poly residue_poly() const;
  std::string str() const;

  const std::vector<Rat>& coeffs() const { return c_; }

private:
  Cyclo(long m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
  void reduce(std::vector<Rat>& v) const; // mod Phi_m, in place
  long m_;
  std::vector<Rat> c_; // length phi(m)
};

/// Evaluate an integer-coefficient univariate polynomial at a root of unity;
/// the result lives in the conductor-ord(zeta) field.
Cyclo eval_at_root(const Poly& p, const RootOfUnity& zeta);

/// Multivariate evaluation at a tuple of roots; the result lives in the
/// conductor lcm(ord(zeta_i)) field.
Cyclo eval_at_roots(const Poly& p, const std::vector<RootOfUnity>& zetas);

bool cyclo_is_zero(const Cyclo& e);

} // namespace f1
