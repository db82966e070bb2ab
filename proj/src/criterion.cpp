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

#include "rootless/criterion.hpp"

#include <algorithm>

#include "rootless/errors.hpp"

namespace rootless {

namespace {

bool nonzero(const ArtinClass& c) {
  return std::any_of(c.begin(), c.end(), [](int v) { return v != 0; });
}

// Products of up to r distinct primes from ps with exponents +-1, both signs.
void enumerate_candidates(const std::vector<uint64_t>& ps, int r, std::vector<Rational>& out) {
  std::vector<std::size_t> idx;
  auto emit = [&]() {
    const std::size_t m = idx.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
      Integer num = 1, den = 1;
      for (std::size_t i = 0; i < m; ++i) {
        Integer p = static_cast<unsigned long>(ps[idx[i]]);
        if (mask >> i & 1) den *= p; else num *= p;
      }
      Rational a(num, den);
      a.canonicalize();
      out.push_back(a);
      out.push_back(-a);
    }
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) emit();
    if (static_cast<int>(idx.size()) == r) return;
    for (std::size_t i = start; i < ps.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

DaggerVerdict check_rational(const ExtensionSpec& L, const CftConfig& cfg, const DaggerBounds& b) {
  DaggerVerdict v;
  v.l = cfg.l;
  std::vector<uint64_t> ps;
  for (uint64_t p : primes_up_to(b.candidate_bound))
    if (cfg.modulus % p) ps.push_back(p);
  std::vector<Rational> cands;
  enumerate_candidates(ps, b.max_support, cands);
  v.trace.push_back("candidate primes <= " + std::to_string(b.candidate_bound) +
                    ", support <= " + std::to_string(b.max_support));
  for (const Rational& a : cands) {
    auto cls = artin_class(cfg, a);
    if (!cls || !nonzero(*cls)) continue;
    ++v.candidates;
    std::optional<Refutation> ref;
    for (int i = 0; i < cfg.k() && !ref; ++i) {
      const auto& m = cfg.fields[static_cast<std::size_t>(i)];
      auto tm = t_membership(AlgebraSpec::cyclic(m, a), L, a);
      if (tm.member) continue;
      for (const auto& r : tm.trace) {
        if (r.all_split()) continue;
        uint64_t p = r.place.prime();
        long e = *padic_valuation(a, p);
        // The non-split place must be the one predicted by the characters.
        if (e % cfg.l != 0 && m.chi(Integer(static_cast<unsigned long>(p))) != 0) {
          ref = Refutation{a, p, i};
          break;
        }
      }
    }
    if (ref) {
      v.refutations.push_back(*ref);
    } else {
      v.unrefuted.push_back(a);
      if (!v.witness && audit_witness(L, cfg, a)) v.witness = a;
    }
  }
  v.holds = v.witness.has_value();
  v.trace.push_back(std::to_string(v.candidates) + " candidates, " +
                    std::to_string(v.refutations.size()) + " refuted");
  return v;
}

}  // namespace

std::string DaggerVerdict::to_string() const {
  std::string s = std::string("holds=") + (holds ? "true" : "false") + " l=" + std::to_string(l);
  if (witness) s += " witness=" + witness->get_str();
  if (candidates) {
    s += " candidates=" + std::to_string(candidates) +
         " refuted=" + std::to_string(refutations.size()) +
         " unrefuted=" + std::to_string(unrefuted.size());
  }
  return s;
}

bool audit_witness(const ExtensionSpec& L, const CftConfig& cfg, const Rational& a,
                   std::vector<std::string>* trace) {
  auto cls = artin_class(cfg, a);
  bool ok = cls && nonzero(*cls);
  if (trace) trace->push_back("a=" + a.get_str() + " in_Im=" + (cls ? "true" : "false") +
                              " in_H=" + (cls && !nonzero(*cls) ? "true" : "false"));
  if (!cls) return false;
  for (int i = 0; i < cfg.k(); ++i) {
    const auto& m = cfg.fields[static_cast<std::size_t>(i)];
    auto A = AlgebraSpec::cyclic(m, a);
    auto tm = t_membership(A, L, a);
    ok = ok && tm.member && !tm.real_ramified;
    if (trace) trace->push_back("M" + std::to_string(i + 1) + ": " + tm.to_string());
  }
  return ok;
}

DaggerVerdict dagger_check(const ExtensionSpec& L, int l, const CftConfig& cfg, const DaggerBounds& bounds) {
  if (cfg.l != l) throw InvalidInput("dagger_check: configuration is for l=" + std::to_string(cfg.l));
  if (L.degree() == 1) return check_rational(L, cfg, bounds);
  if (L.degree() % l != 0)
    throw InvalidInput("dagger_check: l=" + std::to_string(l) + " does not divide deg L");
  DaggerVerdict v;
  v.l = l;
  GoodPrimeReport rep = good_primes(L, l, bounds.good_prime_bound);
  if (!rep.admissible) rep = good_primes(L, l, 4 * bounds.good_prime_bound);
  v.trace.push_back(rep.to_string());
  if (!rep.admissible) throw NoAdmissibleFound("dagger_check: " + rep.to_string());
  std::vector<uint64_t> P;
  for (uint64_t p : rep.good_primes)
    if (cfg.modulus % p) P.push_back(p);
  if (P.empty()) throw AllSameClass("dagger_check: every good prime divides the modulus");
  Rational a = find_witness_a(cfg, P);
  v.holds = audit_witness(L, cfg, a, &v.trace);
  if (v.holds) v.witness = a;
  return v;
}

bool psi_semantic(const ExtensionSpec& L, int n, const DaggerBounds& bounds) {
  if (n < 2 || n > 4) throw UnsupportedConfig("psi_semantic: n must be 2, 3 or 4");
  if (L.degree() != 1 && L.degree() != n) throw InvalidInput("psi_semantic: deg L must be 1 or n");
  for (uint64_t l : prime_factors(static_cast<uint64_t>(n))) {
    int li = static_cast<int>(l);
    if (dagger_check(L, li, default_config(li, n), bounds).holds) return true;
  }
  return false;
}

bool no_root_semantic(const PolyQ& f, const DaggerBounds& bounds) {
  if (!f.is_monic() || f.degree() < 2 || f.degree() > 4)
    throw InvalidInput("no_root_semantic: f must be monic of degree 2, 3 or 4");
  auto factors = factor_quartic_or_less(f);
  for (const auto& g : factors)
    if (g.poly.degree() == 1) return false;
  if (factors.size() == 1) return psi_semantic(ExtensionSpec::from_poly(f), f.degree(), bounds);
  return std::all_of(factors.begin(), factors.end(),
                     [&](const QFactor& g) { return no_root_semantic(g.poly, bounds); });
}

}  // namespace rootless
