#include "f1/monoid.hpp"

#include <algorithm>
#include <numeric>

#include "f1/cyclotomic.hpp"
#include "f1/errors.hpp"

namespace f1 {

MonoidPresentation MonoidPresentation::free_monoid(int k) {
  if (k < 0) throw std::invalid_argument("free_monoid: rank must be >= 0");
  MonoidPresentation m;
  m.kind = Kind::FreeMonoid;
  m.k = k;
  return m;
}

MonoidPresentation MonoidPresentation::free_abelian(int k) {
  if (k < 0) throw std::invalid_argument("free_abelian: rank must be >= 0");
  MonoidPresentation m;
  m.kind = Kind::FreeAbelian;
  m.k = k;
  return m;
}

MonoidPresentation MonoidPresentation::cyclic(long n) {
  if (n < 1) throw std::invalid_argument("cyclic: modulus must be >= 1");
  MonoidPresentation m;
  m.kind = Kind::Cyclic;
  m.k = 0;
  m.n = n;
  return m;
}

int MonoidPresentation::monoid_rank() const {
  switch (kind) {
  case Kind::FreeMonoid: return k;
  case Kind::FreeAbelian: return 0;
  case Kind::Cyclic: return 0;
  case Kind::ToricSmooth: return k;
  }
  return 0;
}

int MonoidPresentation::group_rank() const {
  switch (kind) {
  case Kind::FreeMonoid: return 0;
  case Kind::FreeAbelian: return k;
  case Kind::Cyclic: return 0;
  case Kind::ToricSmooth: return m;
  }
  return 0;
}

bool MonoidPresentation::is_group() const {
  return monoid_rank() == 0;
}

std::string MonoidPresentation::str() const {
  switch (kind) {
  case Kind::FreeMonoid: return "N^" + std::to_string(k);
  case Kind::FreeAbelian: return "Z^" + std::to_string(k);
  case Kind::Cyclic: return "Z/" + std::to_string(n);
  case Kind::ToricSmooth: {
    std::string s = "cone[";
    for (size_t i = 0; i < rays.size(); ++i) {
      if (i) s += ",";
      s += "[";
      for (size_t j = 0; j < rays[i].size(); ++j) {
        if (j) s += ",";
        s += rays[i][j].get_str();
      }
      s += "]";
    }
    return s + "]";
  }
  }
  return "";
}

MonoidPresentation MonoidPresentation::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  try {
    if (s.rfind("N^", 0) == 0) return free_monoid(std::stoi(s.substr(2)));
    if (s == "N") return free_monoid(1);
    if (s.rfind("Z^", 0) == 0) return free_abelian(std::stoi(s.substr(2)));
    if (s == "Z") return free_abelian(1);
    if (s.rfind("Z/", 0) == 0) return cyclic(std::stol(s.substr(2)));
    if (s.rfind("cone[", 0) == 0 && s.back() == ']') {
      std::string body = s.substr(5, s.size() - 6);
      ZMat rays;
      size_t i = 0;
      while (i < body.size()) {
        if (body[i] == ',') { ++i; continue; }
        if (body[i] != '[') throw parse_error("monoid: expected '[' in '" + text + "'");
        size_t close = body.find(']', i);
        if (close == std::string::npos) throw parse_error("monoid: unbalanced '[' in '" + text + "'");
        std::string row = body.substr(i + 1, close - i - 1);
        ZVec v;
        size_t start = 0;
        while (start <= row.size()) {
          size_t comma = row.find(',', start);
          std::string tok = row.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
          if (!tok.empty()) v.push_back(Int(tok));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        if (v.empty()) throw parse_error("monoid: empty ray in '" + text + "'");
        rays.push_back(std::move(v));
        i = close + 1;
      }
      if (rays.empty()) throw parse_error("monoid: no rays in '" + text + "'");
      return toric_monoid_from_cone(rays);
    }
  } catch (const std::invalid_argument& e) {
    throw parse_error("monoid: " + std::string(e.what()) + " in '" + text + "'");
  }
  throw parse_error("monoid: unknown literal '" + text +
                    "' (expected N^k, Z^k, Z/n or cone[[...],...])");
}

std::string PrimeIdeal::str() const {
  std::string s = "P{";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i] + 1); // 1-based display
  }
  return s + "}";
}

SpecResult spec(const MonoidPresentation& mp) {
  int k = mp.monoid_rank();
  if (k > 20)
    throw std::invalid_argument("spec: 2^" + std::to_string(k) + " points is too large to enumerate");
  SpecResult out;
  // primes are P_S for S a subset of the N-type coordinates; groups have
  // only the empty ideal
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    PrimeIdeal p;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) p.coords.push_back(i);
    out.points.push_back(std::move(p));
  }
  std::sort(out.points.begin(), out.points.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
    return a.coords < b.coords;
  });
  // covering pairs of the inclusion order: S < S u {i}
  for (size_t i = 0; i < out.points.size(); ++i)
    for (size_t j = 0; j < out.points.size(); ++j) {
      const auto& a = out.points[i].coords;
      const auto& b = out.points[j].coords;
      if (a.size() + 1 != b.size()) continue;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
        out.order.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

bool verify_prime(const MonoidPresentation& mp, const PrimeIdeal& p) {
  // Generators as exponent vectors: e_i for the monoid part, +-e_j for the
  // group part (the cyclic generator counts as a unit). Membership in P_S:
  // some S-coordinate > 0.
  int k = mp.monoid_rank();
  int g = mp.group_rank() + (mp.kind == MonoidPresentation::Kind::Cyclic ? 1 : 0);
  int dim = k + g;
  for (int i : p.coords)
    if (i < 0 || i >= k) return false; // S must index N-type coordinates
  std::vector<std::vector<long>> gens;
  for (int i = 0; i < dim; ++i) {
    std::vector<long> v(dim, 0);
    v[i] = 1;
    gens.push_back(v);
    if (i >= k) {
      v[i] = -1;
      gens.push_back(v);
    }
  }
  auto in_p = [&](const std::vector<long>& x) {
    for (int i : p.coords)
      if (x[i] > 0) return true;
    return false;
  };
  // ideal property: the ideal generators e_i (i in S) stay inside P under
  // multiplication by any monoid generator
  for (int i : p.coords)
    for (const auto& b : gens) {
      std::vector<long> x(dim, 0);
      x[i] = 1;
      for (int t = 0; t < dim; ++t) x[t] += b[t];
      if (!in_p(x)) return false;
    }
  // primality on generator pairs
  for (const auto& a : gens)
    for (const auto& b : gens) {
      std::vector<long> ab(dim);
      for (int t = 0; t < dim; ++t) ab[t] = a[t] + b[t];
      if (in_p(ab) && !in_p(a) && !in_p(b)) return false;
    }
  return true;
}

std::string RingPresentation::str() const {
  std::string s = "Z[";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ",";
    s += generators[i];
  }
  s += "]";
  if (!relations.empty()) {
    s += "/(";
    for (size_t i = 0; i < relations.size(); ++i) {
      if (i) s += ", ";
      s += relations[i];
    }
    s += ")";
  }
  return s;
}

RingPresentation base_change(const MonoidPresentation& mp) {
  RingPresentation r;
  switch (mp.kind) {
  case MonoidPresentation::Kind::FreeMonoid:
    if (mp.k == 1) {
      r.generators = {"q"};
    } else {
      for (int i = 1; i <= mp.k; ++i) r.generators.push_back("q" + std::to_string(i));
    }
    return r;
  case MonoidPresentation::Kind::FreeAbelian:
    r.laurent = true;
    if (mp.k == 1) {
      r.generators = {"q", "q^-1"};
    } else {
      for (int i = 1; i <= mp.k; ++i) {
        r.generators.push_back("q" + std::to_string(i));
        r.generators.push_back("q" + std::to_string(i) + "^-1");
      }
    }
    return r;
  case MonoidPresentation::Kind::Cyclic:
    r.generators = {"q"};
    r.relations = {q_int(mp.n).str()};
    return r;
  case MonoidPresentation::Kind::ToricSmooth: {
    int total = mp.k + mp.m;
    for (int i = 1; i <= mp.k; ++i)
      r.generators.push_back(total == 1 ? "q" : "q" + std::to_string(i));
    for (int j = mp.k + 1; j <= total; ++j) {
      std::string name = total == 1 ? "q" : "q" + std::to_string(j);
      r.generators.push_back(name);
      r.generators.push_back(name + "^-1");
    }
    r.laurent = mp.m > 0;
    return r;
  }
  }
  return r;
}

MonomialMatrix MonomialMatrix::identity(int n, long mod) {
  MonomialMatrix m;
  m.n = n;
  m.mod = mod;
  m.perm.resize(n);
  std::iota(m.perm.begin(), m.perm.end(), 0);
  m.ent.assign(n, 0);
  return m;
}

MonomialMatrix MonomialMatrix::compose(const MonomialMatrix& o) const {
  if (n != o.n || mod != o.mod)
    throw std::invalid_argument("MonomialMatrix: size/coefficient mismatch");
  MonomialMatrix r;
  r.n = n;
  r.mod = mod;
  r.perm.resize(n);
  r.ent.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[i] = o.perm[perm[i]];
    r.ent[i] = (ent[i] + o.ent[perm[i]]) % mod;
  }
  return r;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix r;
  r.n = n;
  r.mod = mod;
  r.perm.resize(n);
  r.ent.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[perm[i]] = i;
    r.ent[perm[i]] = (mod - ent[i]) % mod;
  }
  return r;
}

std::string MonomialMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < n; ++j) {
      if (j) s += ",";
      if (j != perm[i]) {
        s += "0";
      } else if (ent[i] == 0) {
        s += "1";
      } else if (ent[i] == 1) {
        s += "a";
      } else {
        s += "a^" + std::to_string(ent[i]);
      }
    }
    s += "]";
  }
  return s + "]";
}

std::vector<MonomialMatrix> gl_points(int n, const MonoidPresentation& a) {
  if (n < 1) throw std::invalid_argument("gl_points: size must be >= 1");
  long mod;
  switch (a.kind) {
  case MonoidPresentation::Kind::Cyclic: mod = a.n; break;
  case MonoidPresentation::Kind::FreeMonoid: mod = 1; break; // units are trivial
  default:
    throw std::invalid_argument("gl_points: unit group of " + a.str() + " is infinite");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MonomialMatrix> out;
  do {
    std::vector<long> ent(n, 0);
    while (true) {
      MonomialMatrix m;
      m.n = n;
      m.mod = mod;
      m.perm = perm;
      m.ent = ent;
      out.push_back(std::move(m));
      int i = n - 1;
      while (i >= 0 && ent[i] == mod - 1) ent[i--] = 0;
      if (i < 0) break;
      ++ent[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const MonomialMatrix& x, const MonomialMatrix& y) {
    if (x.perm != y.perm) return x.perm < y.perm;
    return x.ent < y.ent;
  });
  return out;
}

MonoidPresentation toric_monoid_from_cone(const ZMat& rays) {
  if (rays.empty()) throw std::invalid_argument("toric_monoid_from_cone: no rays");
  size_t r = rays[0].size();
  for (const auto& v : rays)
    if (v.size() != r)
      throw std::invalid_argument("toric_monoid_from_cone: rays of mixed dimension");
  if (rays.size() > r)
    throw std::invalid_argument("toric_monoid_from_cone: more rays than ambient rank");
  Int index;
  auto v = unimodular_complement(rays, &index);
  if (!v) {
    if (index == 0)
      throw std::invalid_argument("toric_monoid_from_cone: rays are linearly dependent");
    throw std::invalid_argument(
        "toric_monoid_from_cone: cone is not smooth (rays span an index-" +
        index.get_str() + " sublattice)");
  }
  MonoidPresentation mp;
  mp.kind = MonoidPresentation::Kind::ToricSmooth;
  mp.k = static_cast<int>(rays.size());
  mp.m = static_cast<int>(r - rays.size());
  mp.rays = rays;
  mp.dual_basis = *v;
  return mp;
}

} // namespace f1
