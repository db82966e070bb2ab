/*
   Copyright 2026 The rootless Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rootless/cft.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "rootless/errors.hpp"

namespace rootless {

namespace {

uint64_t factorial(int n) {
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<uint64_t>(i);
  return r;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw InvalidInput("");
    return x;
  } catch (const std::exception&) {
    throw InvalidInput("config: " + key + " expects a non-negative integer, got '" + v + "'");
  }
}

std::string class_string(const ArtinClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

std::vector<uint64_t> CftConfig::modulus_primes() const { return prime_factors(modulus); }

std::string CftConfig::to_string() const {
  std::string s = "l=" + std::to_string(l) + " n=" + std::to_string(n) + " k=" +
                  std::to_string(k()) + " modulus=" + std::to_string(modulus);
  for (const auto& m : fields) s += "\n  " + m.to_string();
  return s;
}

CftConfig default_config(int l, int n) {
  CftConfig cfg;
  cfg.l = l;
  cfg.n = n;
  if (l == 2 && n == 2) {
    for (long d : {2L, 5L}) cfg.fields.push_back(quadratic_field(d));
  } else if (l == 2 && n == 4) {
    for (long d : {2L, 5L, 13L, 17L, 29L}) cfg.fields.push_back(quadratic_field(d));
  } else if (l == 3 && n == 3) {
    for (uint64_t c : {uint64_t{7}, uint64_t{9}}) cfg.fields.push_back(cyclic_cubic(c));
  } else {
    throw UnsupportedConfig("default_config: no default for l=" + std::to_string(l) +
                            ", n=" + std::to_string(n));
  }
  cfg.modulus = 1;
  for (const auto& m : cfg.fields) cfg.modulus = std::lcm(cfg.modulus, m.conductor);
  return cfg;
}

void validate(const CftConfig& cfg) {
  if (cfg.l < 2 || !is_prime(static_cast<uint64_t>(cfg.l))) throw SpecMismatch("config: l must be prime");
  if (cfg.n < 1) throw SpecMismatch("config: n must be positive");
  if (cfg.fields.empty()) throw SpecMismatch("config: no fields");
  uint64_t mod = 1;
  for (const auto& m : cfg.fields) {
    if (m.l != cfg.l) throw SpecMismatch("config: field degree differs from l: " + m.to_string());
    validate(m, true);
    mod = std::lcm(mod, m.conductor);
  }
  if (mod != cfg.modulus)
    throw SpecMismatch("config: modulus " + std::to_string(cfg.modulus) + " is not the lcm " +
                       std::to_string(mod) + " of the conductors");
  if (cfg.k() > 20 || ipow(static_cast<uint64_t>(cfg.l), cfg.k()) <= factorial(cfg.n))
    throw SpecMismatch("config: l^k must exceed n!");
  std::set<ArtinClass> image;
  for (uint64_t r = 1; r < cfg.modulus; ++r) {
    if (std::gcd(r, cfg.modulus) != 1) continue;
    ArtinClass c;
    for (const auto& m : cfg.fields) c.push_back(m.character_table[r % m.conductor]);
    image.insert(std::move(c));
  }
  if (image.size() != ipow(static_cast<uint64_t>(cfg.l), cfg.k()))
    throw SpecMismatch("config: characters are not jointly surjective onto (Z/l)^k");
}

CftConfig parse_config(const std::string& text) {
  struct Partial {
    std::optional<PolyQ> poly, sigma;
    std::optional<uint64_t> conductor;
    std::optional<std::vector<int>> chi;
  };
  CftConfig cfg;
  std::optional<int> l, n;
  std::map<uint64_t, Partial> fields;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "l") {
      l = static_cast<int>(parse_u64(key, val));
    } else if (key == "n") {
      n = static_cast<int>(parse_u64(key, val));
    } else if (key.rfind("field.", 0) == 0) {
      auto dot = key.find('.', 6);
      if (dot == std::string::npos) throw InvalidInput("config: malformed key " + key);
      uint64_t idx = parse_u64(key, key.substr(6, dot - 6));
      std::string attr = key.substr(dot + 1);
      Partial& f = fields[idx];
      if (attr == "poly") {
        f.poly = PolyQ::parse(val);
      } else if (attr == "sigma") {
        f.sigma = PolyQ::parse(val);
      } else if (attr == "conductor") {
        f.conductor = parse_u64(key, val);
      } else if (attr == "chi") {
        std::vector<int> t;
        std::istringstream vs(val);
        std::string item;
        while (std::getline(vs, item, ',')) {
          item = trim(item);
          try {
            t.push_back(std::stoi(item));
          } catch (const std::exception&) {
            throw InvalidInput("config: " + key + " has a non-integer entry '" + item + "'");
          }
        }
        f.chi = std::move(t);
      } else {
        throw InvalidInput("config: unknown key " + key);
      }
    } else {
      throw InvalidInput("config: unknown key " + key);
    }
  }
  if (!l || !n) throw InvalidInput("config: l and n are required");
  cfg.l = *l;
  cfg.n = *n;
  for (auto& [idx, f] : fields) {
    if (!f.poly || !f.sigma || !f.conductor)
      throw InvalidInput("config: field." + std::to_string(idx) + " needs poly, sigma and conductor");
    if (*f.conductor < 2) throw InvalidInput("config: conductor must be at least 2");
    CyclicFieldSpec m;
    m.l = f.poly->degree();
    m.defining_poly = *f.poly;
    m.sigma = *f.sigma;
    m.conductor = *f.conductor;
    if (f.chi) {
      if (f.chi->size() != m.conductor)
        throw InvalidInput("config: field." + std::to_string(idx) + ".chi needs one entry per residue");
      m.character_table = *f.chi;
    } else {
      m.character_table = derive_character_table(m.defining_poly, m.sigma, m.l, m.conductor);
    }
    cfg.fields.push_back(std::move(m));
  }
  cfg.modulus = 1;
  for (const auto& m : cfg.fields) cfg.modulus = std::lcm(cfg.modulus, m.conductor);
  validate(cfg);
  return cfg;
}

CftConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::optional<ArtinClass> artin_class(const CftConfig& cfg, const Rational& x) {
  if (x == 0) throw InvalidInput("artin_class: x must be nonzero");
  ArtinClass c(static_cast<std::size_t>(cfg.k()), 0);
  auto accumulate = [&](const Integer& n, int sign) {
    for (const auto& pp : factor_integer(n).factors) {
      if (pp.prime.fits_ulong_p() && cfg.modulus % pp.prime.get_ui() == 0) return false;
      long e = sign * static_cast<long>(pp.exponent % static_cast<unsigned>(cfg.l));
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<int>(((c[i] + e * cfg.fields[i].chi(pp.prime)) % cfg.l + cfg.l) % cfg.l);
    }
    return true;
  };
  if (!accumulate(x.get_num(), 1) || !accumulate(x.get_den(), -1)) return std::nullopt;
  return c;
}

bool in_Im(const CftConfig& cfg, const Rational& x) { return artin_class(cfg, x).has_value(); }

bool in_H(const CftConfig& cfg, const Rational& x) {
  auto c = artin_class(cfg, x);
  return c && std::all_of(c->begin(), c->end(), [](int v) { return v == 0; });
}

std::string GoodPrimeReport::to_string() const {
  std::string s = "L=" + L.to_string() + " l=" + std::to_string(l) + " bound=" +
                  std::to_string(bound) + " good=" + std::to_string(good_primes.size()) +
                  " scanned=" + std::to_string(scanned) + " density=" + sampled_density.get_str() +
                  " threshold=" + std::to_string(threshold) +
                  " admissible=" + (admissible ? "true" : "false");
  return s;
}

GoodPrimeReport good_primes(const ExtensionSpec& L, int l, uint64_t bound) {
  if (bound < 100) throw InvalidInput("good_primes: bound must be at least 100");
  if (l < 2 || !is_prime(static_cast<uint64_t>(l))) throw InvalidInput("good_primes: l must be prime");
  GoodPrimeReport r;
  r.L = L;
  r.l = l;
  r.bound = bound;
  for (uint64_t p : primes_up_to(bound)) {
    if (ramified_in(L, p)) continue;
    ++r.scanned;
    if (factor_mod_p(L.defining_poly, p).cycle_type.all_divisible_by(l)) r.good_primes.push_back(p);
  }
  r.sampled_density = r.scanned ? Rational(static_cast<unsigned long>(r.good_primes.size()),
                                           static_cast<unsigned long>(r.scanned))
                                 : Rational(0);
  r.sampled_density.canonicalize();
  r.threshold = 1.0 / static_cast<double>(factorial(L.degree())) -
                (r.scanned ? 2.0 / std::sqrt(static_cast<double>(r.scanned)) : 0.0);
  r.admissible = !r.good_primes.empty() && r.sampled_density.get_d() >= r.threshold;
  return r;
}

int select_admissible(const ExtensionSpec& L, int n, uint64_t bound) {
  if (L.degree() != n || n < 2) throw InvalidInput("select_admissible: L must have degree n >= 2");
  std::string densities;
  for (uint64_t b : {bound, 4 * bound}) {
    for (uint64_t l : prime_factors(static_cast<uint64_t>(n))) {
      auto rep = good_primes(L, static_cast<int>(l), b);
      if (rep.admissible) return static_cast<int>(l);
      densities += " [" + rep.to_string() + "]";
    }
  }
  throw NoAdmissibleFound("select_admissible: no admissible l for " + L.to_string() + ":" + densities);
}

Rational find_witness_a(const CftConfig& cfg, std::vector<uint64_t> P) {
  if (P.empty()) throw InvalidInput("find_witness_a: P is empty");
  std::sort(P.begin(), P.end());
  P.erase(std::unique(P.begin(), P.end()), P.end());
  std::vector<ArtinClass> cls;
  for (uint64_t p : P) {
    auto c = artin_class(cfg, Rational(static_cast<unsigned long>(p)));
    if (!c) throw InvalidInput("find_witness_a: " + std::to_string(p) + " divides the modulus");
    cls.push_back(*c);
  }
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      if (cls[i] != cls[j]) {
        Rational a(static_cast<unsigned long>(P[i]), static_cast<unsigned long>(P[j]));
        a.canonicalize();
        return a;
      }
  throw AllSameClass("find_witness_a: all " + std::to_string(P.size()) +
                     " primes lie in the class " + class_string(cls[0]));
}

std::map<ArtinClass, uint64_t> class_representatives(const CftConfig& cfg) {
  const uint64_t want = ipow(static_cast<uint64_t>(cfg.l), cfg.k()) - 1;
  std::map<ArtinClass, uint64_t> reps;
  uint64_t lo = 2;
  for (uint64_t hi = 1024; hi <= (uint64_t{1} << 26); hi *= 4) {
    for (uint64_t p : primes_up_to(hi)) {
      if (p < lo || cfg.modulus % p == 0) continue;
      auto c = *artin_class(cfg, Rational(static_cast<unsigned long>(p)));
      if (std::all_of(c.begin(), c.end(), [](int v) { return v == 0; })) continue;
      reps.emplace(c, p);
      if (reps.size() == want) return reps;
    }
    lo = hi + 1;
  }
  throw SearchExhausted("class_representatives: some Artin class has no small prime");
}

std::vector<uint64_t> kernel_residues(const CyclicFieldSpec& m) {
  std::vector<uint64_t> out;
  for (uint64_t r = 0; r < m.conductor; ++r)
    if (m.character_table[r] == 0) out.push_back(r);
  return out;
}

}  // namespace rootless
