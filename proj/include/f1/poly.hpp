#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "f1/errors.hpp"
#include "f1/nt.hpp"

namespace f1 {

/// Sparse multivariate polynomial over the rationals. Terms map exponent
/// vectors (length = variable count) to nonzero coefficients in lowest terms;
/// zero coefficients are purged eagerly so equality is structural.
class Poly {
public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rat>;

  explicit Poly(int nvars = 1);

  static Poly zero(int nvars = 1);
  static Poly constant(const Rat& c, int nvars = 1);
  static Poly variable(int index = 0, int nvars = 1); // q_{index+1}
  static Poly monomial(Exponents e, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// All coefficients have denominator 1.
  bool is_integral() const;
  bool is_constant() const;
  Rat constant_value() const; // 0 for the zero polynomial

  /// Degree in one variable; -1 for the zero polynomial.
  long degree(int var = 0) const;
  long total_degree() const;

  Rat coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const = default;

  Poly pow(unsigned long e) const;

  /// Exact division with remainder by a monic univariate polynomial; both
  /// operands univariate in the same variable.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

  /// Remainder of this modulo f (monic, univariate as a 1-variable Poly)
  /// applied in variable `var` of this polynomial.
  Poly reduce_mod_univariate(const Poly& f, int var) const;

  Rat eval(const std::vector<Rat>& point) const;

  /// Ring map q_i -> (monomial in out_nvars variables given by images[i]).
  Poly substitute_monomials(int out_nvars, const std::vector<Exponents>& images) const;

  /// Univariate composition this(inner); both univariate.
  Poly compose(const Poly& inner) const;

  /// Widen/renumber into a ring with more variables; variable i maps to
  /// variable map[i].
  Poly embed(int out_nvars, const std::vector<int>& var_map) const;

  /// Canonical text form: signed sum of `c*q^e` terms in descending
  /// lexicographic exponent order, coefficient 1 elided, `q^0` elided.
  /// Multivariate terms look like `2*q1^3*q2`. `var` overrides the variable
  /// stem for univariate polynomials (used for t- and s-polynomials).
  std::string str(const std::string& var = "") const;

  /// Parse the grammar printed by str(). nvars_hint forces the variable
  /// count; -1 infers it (univariate `q` gives 1).
  static Poly parse(const std::string& text, int nvars_hint = -1,
                    const std::string& var = "");

private:
  void purge();
  int nvars_;
  TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// Dense coefficient vector (constant first) of a univariate polynomial.
std::vector<Rat> to_dense(const Poly& p);
Poly from_dense(const std::vector<Rat>& c);

} // namespace f1
