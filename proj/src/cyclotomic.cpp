#include "f1/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace f1 {

namespace {
std::mutex phi_mutex;
std::map<long, Poly> phi_memo;
} // namespace

const Poly& cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_memo.find(n);
  if (it != phi_memo.end()) return it->second;
  // Phi_n = (q^n - 1) / prod_{d|n, d<n} Phi_d, all divisions exact.
  // Compute missing divisors first (recursion depth is the divisor chain).
  std::vector<long> need;
  for (long d : divisors(n))
    if (d < n && !phi_memo.count(d)) need.push_back(d);
  for (long d : need) {
    // inline recursion without re-locking
    Poly f = q_int(d);
    for (long e : divisors(d))
      if (e < d) f = Poly::divrem(f, phi_memo.at(e)).first;
    phi_memo.emplace(d, std::move(f));
  }
  Poly f = q_int(n);
  for (long d : divisors(n))
    if (d < n) f = Poly::divrem(f, phi_memo.at(d)).first;
  return phi_memo.emplace(n, std::move(f)).first->second;
}

Poly q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
  Poly p(1);
  p.set_coeff({static_cast<unsigned>(n)}, 1);
  p.set_coeff({0}, p.coeff({0}) - 1);
  return p;
}

Poly q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be >= 0");
  Poly p = Poly::constant(1, 1);
  for (long j = 1; j <= n; ++j) p = p * q_int(j);
  return p;
}

RootOfUnity RootOfUnity::make(long k, long m) {
  if (m == 0) throw std::invalid_argument("RootOfUnity: zero order");
  if (m < 0) { m = -m; k = -k; }
  k %= m;
  if (k < 0) k += m;
  long g = gcd_long(k, m);
  if (g > 1) { k /= g; m /= g; }
  return RootOfUnity{k, m};
}

RootOfUnity RootOfUnity::inverse() const { return make(m - k, m); }

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  // k/m + k'/m' as a reduced fraction mod 1
  long l = lcm_long(m, o.m);
  return make(k * (l / m) + o.k * (l / o.m), l);
}

std::string RootOfUnity::str() const {
  return "zeta(" + std::to_string(k) + "/" + std::to_string(m) + ")";
}

RootOfUnity RootOfUnity::parse(const std::string& text) {
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip();
  if (text.compare(i, 5, "zeta(") != 0)
    throw parse_error("root of unity: expected 'zeta(k/m)' in '" + text + "'");
  i += 5;
  size_t slash = text.find('/', i);
  size_t close = text.find(')', i);
  if (slash == std::string::npos || close == std::string::npos || slash > close)
    throw parse_error("root of unity: expected 'zeta(k/m)' in '" + text + "'");
  long k, m;
  try {
    k = std::stol(text.substr(i, slash - i));
    m = std::stol(text.substr(slash + 1, close - slash - 1));
  } catch (const std::exception&) {
    throw parse_error("root of unity: bad integers in '" + text + "'");
  }
  if (m < 1) throw parse_error("root of unity: order must be positive in '" + text + "'");
  RootOfUnity z = make(k, m);
  if (z.k != k || z.m != m)
    throw parse_error("root of unity: '" + text + "' is not reduced; canonical form is " + z.str());
  size_t rest = close + 1;
  while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) ++rest;
  if (rest != text.size())
    throw parse_error("root of unity: trailing input after '" + text.substr(0, close + 1) + "'");
  return z;
}

long ratio_order(const RootOfUnity& xi, const RootOfUnity& eta) {
  return (xi * eta.inverse()).order();
}

bool adjacent(const RootOfUnity& xi, const RootOfUnity& eta) {
  return is_prime_power(ratio_order(xi, eta));
}

RootSetDescription RootSetDescription::finite(std::vector<RootOfUnity> roots) {
  std::set<RootOfUnity> seen(roots.begin(), roots.end());
  if (seen.size() != roots.size())
    throw std::invalid_argument("RootSetDescription: finite list entries must be distinct");
  RootSetDescription d;
  d.kind = Kind::FiniteList;
  d.list = std::move(roots);
  return d;
}

RootSetDescription RootSetDescription::all_orders_in(std::set<long> orders) {
  for (long m : orders)
    if (m < 1) throw std::invalid_argument("RootSetDescription: orders must be positive");
  RootSetDescription d;
  d.kind = Kind::AllOrdersIn;
  d.orders = std::move(orders);
  return d;
}

RootSetDescription RootSetDescription::prime_power_orders(long p) {
  if (!is_prime(p)) throw std::invalid_argument("RootSetDescription: p must be prime");
  RootSetDescription d;
  d.kind = Kind::PrimePowerOrders;
  d.p = p;
  return d;
}

RootSetDescription RootSetDescription::all_prime_orders() {
  RootSetDescription d;
  d.kind = Kind::AllPrimeOrders;
  return d;
}

bool is_limit_point(const RootOfUnity& xi, const RootSetDescription& s) {
  switch (s.kind) {
  case RootSetDescription::Kind::FiniteList:
  case RootSetDescription::Kind::AllOrdersIn:
    // finitely many roots altogether, so never a limit point
    return false;
  case RootSetDescription::Kind::PrimePowerOrders: {
    // eta of order p^j (j large) is adjacent to xi iff ord(xi) is itself a
    // power of p: the ratio's reduced denominator is p^a * m0 with m0 the
    // p-free part of ord(xi), and a unit numerator can never absorb m0.
    long m0 = xi.order();
    while (m0 % s.p == 0) m0 /= s.p;
    return m0 == 1;
  }
  case RootSetDescription::Kind::AllPrimeOrders:
    // for eta of prime order r with r not dividing ord(xi), the ratio has
    // order r * ord(xi); prime-power only when ord(xi) = 1. Orders r | ord(xi)
    // contribute finitely many candidates.
    return xi.order() == 1;
  }
  return false;
}

} // namespace f1
