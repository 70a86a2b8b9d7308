#include "f1/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace f1 {

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("Poly: variable count must be positive");
}

Poly Poly::zero(int nvars) { return Poly(nvars); }

Poly Poly::constant(const Rat& c, int nvars) {
  Poly p(nvars);
  if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int index, int nvars) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_[e] = 1;
  return p;
}

Poly Poly::monomial(Exponents e, const Rat& c) {
  Poly p(static_cast<int>(e.size()));
  if (c != 0) p.terms_[std::move(e)] = c;
  return p;
}

bool Poly::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

Rat Poly::constant_value() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

long Poly::degree(int var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
  return d;
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long t = 0;
    for (unsigned x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

Rat Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set_coeff(const Exponents& e, const Rat& c) {
  if (e.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("Poly::set_coeff: exponent arity mismatch");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

void Poly::purge() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: mixed variable counts");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = r.terms_.try_emplace(e, c);
    if (!fresh) it->second += c;
  }
  r.purge();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: mixed variable counts");
  Poly r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      auto [it, fresh] = r.terms_.try_emplace(std::move(e), c1 * c2);
      if (!fresh) it->second += c1 * c2;
    }
  r.purge();
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

Poly Poly::pow(unsigned long e) const {
  Poly result = Poly::constant(1, nvars_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<Rat> to_dense(const Poly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("to_dense: univariate only");
  std::vector<Rat> c(static_cast<size_t>(std::max(p.degree(0), 0L)) + 1, Rat(0));
  if (p.is_zero()) return {Rat(0)};
  for (const auto& [e, k] : p.terms()) c[e[0]] = k;
  return c;
}

Poly from_dense(const std::vector<Rat>& c) {
  Poly p(1);
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) p.set_coeff({static_cast<unsigned>(i)}, c[i]);
  return p;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (a.nvars_ != 1 || b.nvars_ != 1)
    throw std::invalid_argument("divrem: operands must be univariate");
  long db = b.degree(0);
  if (db < 0) throw std::invalid_argument("divrem: division by zero polynomial");
  if (b.coeff({static_cast<unsigned>(db)}) != 1)
    throw std::invalid_argument("divrem: divisor must be monic");
  std::vector<Rat> r = to_dense(a);
  std::vector<Rat> g = to_dense(b);
  long da = a.degree(0);
  if (da < db) return {Poly::zero(1), a};
  std::vector<Rat> q(static_cast<size_t>(da - db) + 1, Rat(0));
  for (long d = da; d >= db; --d) {
    Rat lead = r[d];
    if (lead == 0) continue;
    q[d - db] = lead;
    for (long j = 0; j <= db; ++j) r[d - db + j] -= lead * g[j];
  }
  r.resize(db > 0 ? db : 1);
  return {from_dense(q), from_dense(r)};
}

Poly Poly::reduce_mod_univariate(const Poly& f, int var) const {
  if (f.nvars() != 1) throw std::invalid_argument("reduce_mod_univariate: modulus must be univariate");
  long df = f.degree(0);
  if (df < 0 || f.coeff({static_cast<unsigned>(df)}) != 1)
    throw std::invalid_argument("reduce_mod_univariate: modulus must be monic");
  if (var < 0 || var >= nvars_) throw std::invalid_argument("reduce_mod_univariate: bad variable");
  long dmax = degree(var);
  if (dmax < df) return *this;
  std::vector<Rat> g = to_dense(f);
  // bucket terms by the exponent in `var`
  std::vector<TermMap> slice(static_cast<size_t>(dmax) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    unsigned d = rest[var];
    rest[var] = 0;
    slice[d][std::move(rest)] = c;
  }
  for (long d = dmax; d >= df; --d) {
    if (slice[d].empty()) continue;
    for (auto& [rest, c] : slice[d]) {
      for (long j = 0; j < df; ++j) {
        if (g[j] == 0) continue;
        auto [it, fresh] = slice[d - df + j].try_emplace(rest, Rat(0));
        it->second -= c * g[j];
      }
    }
    slice[d].clear();
  }
  Poly out(nvars_);
  for (long d = 0; d < df; ++d)
    for (const auto& [rest, c] : slice[d]) {
      if (c == 0) continue;
      Exponents e = rest;
      e[var] = static_cast<unsigned>(d);
      out.terms_[std::move(e)] = c;
    }
  return out;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (point.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("Poly::eval: point arity mismatch");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

Poly Poly::substitute_monomials(int out_nvars, const std::vector<Exponents>& images) const {
  if (images.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("substitute_monomials: image arity mismatch");
  Poly r(out_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents out(out_nvars, 0);
    for (int i = 0; i < nvars_; ++i)
      for (int j = 0; j < out_nvars; ++j) out[j] += e[i] * images[i][j];
    auto [it, fresh] = r.terms_.try_emplace(std::move(out), c);
    if (!fresh) it->second += c;
  }
  r.purge();
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  if (nvars_ != 1 || inner.nvars() != 1)
    throw std::invalid_argument("compose: univariate only");
  // Horner over descending degrees
  std::vector<Rat> c = to_dense(*this);
  Poly acc = Poly::zero(1);
  for (long d = static_cast<long>(c.size()) - 1; d >= 0; --d)
    acc = acc * inner + Poly::constant(c[d], 1);
  return acc;
}

Poly Poly::embed(int out_nvars, const std::vector<int>& var_map) const {
  if (var_map.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("embed: variable map arity mismatch");
  Poly r(out_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents out(out_nvars, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (var_map[i] < 0 || var_map[i] >= out_nvars)
        throw std::invalid_argument("embed: image variable out of range");
      out[var_map[i]] += e[i];
    }
    r.terms_[std::move(out)] = c;
  }
  return r;
}

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string term_str(const Poly::Exponents& e, const Rat& coeff_abs, int nvars,
                     const std::string& var) {
  std::string stem = var.empty() ? "q" : var;
  std::vector<std::string> factors;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    std::string v = (nvars == 1) ? stem : stem + std::to_string(i + 1);
    if (e[i] > 1) v += "^" + std::to_string(e[i]);
    factors.push_back(v);
  }
  std::string body;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) body += "*";
    body += factors[i];
  }
  if (body.empty()) return rat_str(coeff_abs);
  if (coeff_abs == 1) return body;
  return rat_str(coeff_abs) + "*" + body;
}

} // namespace

std::string Poly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat& c = it->second;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_str(it->first, mag, nvars_, var);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw parse_error("polynomial: " + what + " at position " + std::to_string(i) +
                      " in '" + s + "'");
  }
};

Int parse_uint(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected a number");
  return Int(c.s.substr(start, c.i - start));
}

} // namespace

Poly Poly::parse(const std::string& text, int nvars_hint, const std::string& var) {
  std::string stem = var.empty() ? "q" : var;
  struct RawTerm {
    Rat coeff;
    std::map<int, unsigned> exps; // var index -> exponent
  };
  std::vector<RawTerm> raw;
  int max_var = 0; // highest 1-based index seen; 0 when only plain stem used
  bool saw_plain = false;

  Cursor c{text};
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;
    RawTerm t;
    t.coeff = sign;
    bool have_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      c.skip_ws();
      if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        Int num = parse_uint(c);
        Int den = 1;
        if (c.peek() == '/') {
          ++c.i;
          den = parse_uint(c);
          if (den == 0) c.fail("zero denominator");
        }
        t.coeff *= make_rat(num, den);
        have_factor = true;
      } else if (c.i + stem.size() <= c.s.size() &&
                 c.s.compare(c.i, stem.size(), stem) == 0) {
        c.i += stem.size();
        int idx = 0; // 0 = plain stem
        if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
          idx = static_cast<int>(parse_uint(c).get_si());
        unsigned exp = 1;
        if (c.i < c.s.size() && c.s[c.i] == '^') {
          ++c.i;
          exp = static_cast<unsigned>(parse_uint(c).get_ui());
        }
        if (idx == 0)
          saw_plain = true;
        else
          max_var = std::max(max_var, idx);
        t.exps[idx == 0 ? 0 : idx - 1] += exp;
        have_factor = true;
      } else {
        c.fail("unexpected token '" + std::string(1, c.peek()) + "'");
      }
      // a '*' continues the term
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '*') {
        ++c.i;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!have_factor) c.fail("empty term");
    raw.push_back(std::move(t));
  }
  if (saw_plain && max_var > 0)
    throw parse_error("polynomial: cannot mix '" + stem + "' and indexed '" + stem +
                      "k' variables in '" + text + "'");
  int nvars = nvars_hint > 0 ? nvars_hint : std::max(max_var, 1);
  Poly p(nvars);
  for (const auto& t : raw) {
    Exponents e(nvars, 0);
    for (auto [idx, exp] : t.exps) {
      if (idx >= nvars)
        throw parse_error("polynomial: variable index " + std::to_string(idx + 1) +
                          " exceeds variable count " + std::to_string(nvars));
      e[idx] = exp;
    }
    auto [it, fresh] = p.terms_.try_emplace(std::move(e), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  p.purge();
  return p;
}

} // namespace f1
