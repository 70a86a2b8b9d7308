#include "f1/cyclo.hpp"

#include <map>
#include <mutex>

namespace f1 {

namespace {

std::mutex coeff_mutex;
std::map<long, std::vector<Rat>> phi_dense_memo;

// dense coefficients of Phi_m (constant first)
const std::vector<Rat>& phi_dense(long m) {
  std::lock_guard<std::mutex> lock(coeff_mutex);
  auto it = phi_dense_memo.find(m);
  if (it != phi_dense_memo.end()) return it->second;
  std::vector<Rat> c = to_dense(cyclotomic_poly(m));
  return phi_dense_memo.emplace(m, std::move(c)).first->second;
}

} // namespace

void Cyclo::reduce(std::vector<Rat>& v) const {
  const std::vector<Rat>& f = phi_dense(m_);
  size_t df = f.size() - 1; // = phi(m), monic
  for (size_t d = v.size(); d-- > df;) {
    if (v[d] == 0) continue;
    Rat lead = v[d];
    v[d] = 0;
    for (size_t j = 0; j < df; ++j)
      if (f[j] != 0) v[d - df + j] -= lead * f[j];
  }
  v.resize(df > 0 ? df : 1);
}

Cyclo Cyclo::from_rational(const Rat& r, long m) {
  long phi = euler_phi(m);
  std::vector<Rat> c(static_cast<size_t>(phi > 0 ? phi : 1), Rat(0));
  c[0] = r;
  if (m == 1) {
    // Phi_1 = q - 1, so the residue is the value itself
    return Cyclo(1, std::move(c));
  }
  return Cyclo(m, std::move(c));
}

Cyclo Cyclo::root(const RootOfUnity& z) {
  long m = z.order();
  std::vector<Rat> v(static_cast<size_t>(z.k) + 1, Rat(0));
  v[z.k] = 1;
  Cyclo out(m, std::vector<Rat>(std::max<long>(euler_phi(m), 1), Rat(0)));
  out.reduce(v);
  out.c_ = std::move(v);
  return out;
}

Cyclo Cyclo::from_poly(const Poly& p, long m) {
  if (p.nvars() != 1) throw std::invalid_argument("Cyclo::from_poly: univariate required");
  std::vector<Rat> v = to_dense(p);
  Cyclo out(m, std::vector<Rat>(std::max<long>(euler_phi(m), 1), Rat(0)));
  // exponents first reduced mod m (zeta^m = 1), then mod Phi_m
  std::vector<Rat> w(static_cast<size_t>(m), Rat(0));
  for (size_t e = 0; e < v.size(); ++e)
    if (v[e] != 0) w[e % m] += v[e];
  out.reduce(w);
  out.c_ = std::move(w);
  return out;
}

bool Cyclo::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw std::invalid_argument("Cyclo: value is irrational");
  return c_[0];
}

bool Cyclo::is_integral() const {
  for (const Rat& x : c_)
    if (!is_integer(x)) return false;
  return true;
}

Cyclo Cyclo::lifted(long M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw std::invalid_argument("Cyclo::lifted: conductor must be a multiple");
  long step = M / m_;
  std::vector<Rat> w(static_cast<size_t>(M), Rat(0));
  for (size_t e = 0; e < c_.size(); ++e)
    if (c_[e] != 0) w[(e * step) % M] += c_[e];
  Cyclo out(M, std::vector<Rat>(std::max<long>(euler_phi(M), 1), Rat(0)));
  out.reduce(w);
  out.c_ = std::move(w);
  return out;
}

Cyclo Cyclo::operator-() const {
  std::vector<Rat> w = c_;
  for (Rat& x : w) x = -x;
  return Cyclo(m_, std::move(w));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (m_ != o.m_) {
    long l = lcm_long(m_, o.m_);
    return lifted(l) + o.lifted(l);
  }
  std::vector<Rat> w = c_;
  for (size_t i = 0; i < w.size(); ++i) w[i] += o.c_[i];
  return Cyclo(m_, std::move(w));
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (m_ != o.m_) {
    long l = lcm_long(m_, o.m_);
    return lifted(l) * o.lifted(l);
  }
  std::vector<Rat> w(c_.size() + o.c_.size(), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) w[i + j] += c_[i] * o.c_[j];
  }
  Cyclo out(m_, std::vector<Rat>());
  out.reduce(w);
  out.c_ = std::move(w);
  return out;
}

Cyclo Cyclo::operator*(const Rat& r) const {
  std::vector<Rat> w = c_;
  for (Rat& x : w) x *= r;
  return Cyclo(m_, std::move(w));
}

Cyclo Cyclo::div_exact(long n) const {
  if (n == 0) throw std::invalid_argument("Cyclo::div_exact: zero divisor");
  return *this * make_rat(1, n);
}

Cyclo Cyclo::pow(unsigned long e) const {
  Cyclo result = from_rational(1, m_);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  long l = lcm_long(m_, o.m_);
  return lifted(l).c_ == o.lifted(l).c_;
}

bool Cyclo::is_root_of_unity() const {
  if (is_zero()) return false;
  unsigned long e = static_cast<unsigned long>(lcm_long(2, m_));
  return pow(e) == from_rational(1, m_);
}

Poly Cyclo::residue_poly() const {
  Poly p(1);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) p.set_coeff({static_cast<unsigned>(i)}, c_[i]);
  return p;
}

std::string Cyclo::str() const {
  if (m_ == 1) return c_[0].get_str();
  return residue_poly().str("x") + " mod Phi(" + std::to_string(m_) + ")";
}

Cyclo eval_at_root(const Poly& p, const RootOfUnity& zeta) {
  if (p.nvars() != 1) throw std::invalid_argument("eval_at_root: univariate required");
  if (!p.is_integral())
    throw std::invalid_argument("eval_at_root: polynomial must have integer coefficients");
  return eval_at_roots(p, {zeta});
}

Cyclo eval_at_roots(const Poly& p, const std::vector<RootOfUnity>& zetas) {
  if (zetas.size() != static_cast<size_t>(p.nvars()))
    throw std::invalid_argument("eval_at_roots: arity mismatch");
  long l = 1;
  for (const auto& z : zetas) l = lcm_long(l, z.order());
  // q_i -> x^{k_i * L / m_i}; accumulate exponents mod L then reduce mod Phi_L
  std::vector<Rat> acc(static_cast<size_t>(l), Rat(0));
  for (const auto& [e, c] : p.terms()) {
    long exp = 0;
    for (size_t i = 0; i < zetas.size(); ++i)
      exp = (exp + static_cast<long>(e[i]) % l * ((zetas[i].k * (l / zetas[i].m)) % l)) % l;
    acc[exp] += c;
  }
  Poly v(1);
  for (long i = 0; i < l; ++i)
    if (acc[i] != 0) v.set_coeff({static_cast<unsigned>(i)}, acc[i]);
  return Cyclo::from_poly(v, l);
}

bool cyclo_is_zero(const Cyclo& e) { return e.is_zero(); }

} // namespace f1
