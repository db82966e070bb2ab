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

#include "rootless/local_global.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rootless/errors.hpp"

namespace rootless {

namespace {

// x = p^v * u with u a p-adic unit, for nonzero integers.
std::pair<long, Integer> split_off(const Integer& x, uint64_t p) {
  Integer u = x;
  long v = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), p);
    ++v;
  }
  return {v, u};
}

// Integer in the same square class as the nonzero rational x.
Integer square_class_rep(const Rational& x) { return x.get_num() * x.get_den(); }

int mod8(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return static_cast<int>(r.get_ui());
}

std::set<uint64_t> support(const Rational& x) {
  std::set<uint64_t> out;
  for (const Integer* part : {&x.get_num(), &x.get_den()}) {
    if (*part == 0 || abs(*part) == 1) continue;
    for (const auto& pp : factor_integer(*part).factors) out.insert(pp.prime.get_ui());
  }
  return out;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw InvalidInput("hilbert_symbol: arguments must be nonzero");
  if (v.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const uint64_t p = v.prime();
  auto [alpha, u] = split_off(square_class_rep(a), p);
  auto [beta, w] = split_off(square_class_rep(b), p);
  if (p == 2) {
    int uu = mod8(u), ww = mod8(w);
    int eps_u = ((uu - 1) / 2) & 1, eps_w = ((ww - 1) / 2) & 1;
    int om_u = ((uu * uu - 1) / 8) & 1, om_w = ((ww * ww - 1) / 8) & 1;
    int e = eps_u * eps_w + static_cast<int>(alpha & 1) * om_w + static_cast<int>(beta & 1) * om_u;
    return (e & 1) ? -1 : 1;
  }
  int sign = ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) ? -1 : 1;
  if (beta & 1) sign *= legendre(u, p);
  if (alpha & 1) sign *= legendre(w, p);
  return sign;
}

bool DeltaSet::contains(const Place& v) const {
  return std::find(places.begin(), places.end(), v) != places.end();
}

std::string DeltaSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (i) out += ",";
    out += places[i].to_string();
  }
  return out + "}";
}

ExtensionSpec ExtensionSpec::rational() { return {PolyQ::parse("X")}; }

ExtensionSpec ExtensionSpec::from_poly(const PolyQ& f) {
  if (f.degree() < 1 || !f.is_monic()) throw InvalidInput("extension: defining polynomial must be monic of positive degree");
  bool irreducible = f.degree() <= 4 ? factor_quartic_or_less(f).size() == 1
                                     : mod_p_irreducibility_witness(f, 1000).has_value();
  if (!irreducible) throw InvalidInput("extension: " + f.to_string() + " is not certified irreducible");
  return {f};
}

std::string ExtensionSpec::to_string() const {
  return degree() == 1 ? std::string("Q") : "Q[X]/(" + defining_poly.to_string() + ")";
}

bool ramified_in(const ExtensionSpec& L, uint64_t p) {
  if (L.degree() == 1) return false;
  for (const auto& c : L.defining_poly.coeffs())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p) != 0) return true;
  Rational d = discriminant(L.defining_poly);
  return mpz_divisible_ui_p(d.get_num_mpz_t(), p) != 0;
}

bool LocalSplitReport::all_split() const {
  return std::all_of(splits.begin(), splits.end(), [](bool s) { return s; });
}

DeltaSet ramified_places(const AlgebraSpec& A) {
  if (A.kind != AlgebraSpec::Kind::Quaternion)
    throw UnsupportedConfig("ramified_places: full sets only for quaternion algebras over Q; use local_split");
  DeltaSet out;
  std::set<uint64_t> primes{2};
  for (uint64_t p : support(A.a)) primes.insert(p);
  for (uint64_t p : support(A.b)) primes.insert(p);
  for (uint64_t p : primes)
    if (hilbert_symbol(A.a, A.b, Place::finite(p)) == -1) out.places.push_back(Place::finite(p));
  if (hilbert_symbol(A.a, A.b, Place::infinite()) == -1) out.places.push_back(Place::infinite());
  return out;
}

bool splits_at_infinity(const AlgebraSpec& A) {
  if (A.kind == AlgebraSpec::Kind::Quaternion) return hilbert_symbol(A.a, A.b, Place::infinite()) == 1;
  const auto& m = *A.field;
  // Odd character: M is complex, and for l = 2 the algebra is (disc, a).
  bool totally_real = m.conductor <= 2 || m.character_table[m.conductor - 1] == 0;
  return totally_real || sgn(A.a) > 0;
}

LocalSplitReport local_split(const AlgebraSpec& A, const ExtensionSpec& L, uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("local_split: " + std::to_string(p) + " is not prime");
  LocalSplitReport r;
  r.place = Place::finite(p);
  if (ramified_in(L, p))
    throw RamifiedQuery("prime " + std::to_string(p) + " is ramified in " + L.to_string());
  if (A.kind == AlgebraSpec::Kind::Quaternion) {
    r.splits_over_q = hilbert_symbol(A.a, A.b, r.place) == 1;
  } else {
    const auto& m = *A.field;
    if (m.conductor % p == 0)
      throw RamifiedQuery("prime " + std::to_string(p) + " is ramified in " + m.to_string());
    bool inert = m.chi(Integer(static_cast<unsigned long>(p))) != 0;
    long v = *padic_valuation(A.a, p);
    r.splits_over_q = !(inert && v % m.l != 0);
  }
  const int l = A.degree();
  if (L.degree() == 1) {
    r.local_degrees = {1};
  } else {
    r.local_degrees = factor_mod_p(L.defining_poly, p).cycle_type.degrees;
  }
  for (int f : r.local_degrees) r.splits.push_back(r.splits_over_q || f % l == 0);
  return r;
}

std::string TMembership::to_string() const {
  std::string out = std::string("member=") + (member ? "true" : "false");
  if (real_ramified) out += " real_ramified=true";
  for (const auto& r : trace) {
    out += " [p=" + r.place.to_string() + " degrees=";
    for (std::size_t i = 0; i < r.local_degrees.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(r.local_degrees[i]) + (r.splits[i] ? ":split" : ":ramified");
    }
    out += "]";
  }
  return out;
}

namespace {

TMembership membership(const AlgebraSpec& A, const ExtensionSpec& L, const Rational& x, bool negative_only) {
  TMembership out;
  out.member = true;
  out.real_ramified = !splits_at_infinity(A);
  if (x == 0) {
    if (!negative_only) throw InvalidInput("t_membership: x must be nonzero");
    return out;
  }
  for (uint64_t p : support(x)) {
    if (negative_only && *padic_valuation(x, p) >= 0) continue;
    auto r = local_split(A, L, p);
    out.member = out.member && r.all_split();
    out.trace.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TMembership t_membership(const AlgebraSpec& A, const ExtensionSpec& L, const Rational& x) {
  return membership(A, L, x, false);
}

TMembership in_T(const AlgebraSpec& A, const ExtensionSpec& L, const Rational& x) {
  return membership(A, L, x, true);
}

std::optional<AlgebraElement> s_witness_search(const AlgebraSpec& A, const Rational& target, long height) {
  if (A.kind != AlgebraSpec::Kind::Quaternion) throw UnsupportedConfig("s_witness_search: quaternion algebras only");
  auto alg = Algebra::create(A);
  const Rational x0 = target / 2;
  const Rational ab = A.a * A.b;
  const Rational base = 1 - x0 * x0;
  // Search x1, x2 by increasing denominator, then by increasing |numerator|.
  std::vector<long> nums;
  for (long k = 0; k <= height; ++k) {
    nums.push_back(k);
    if (k) nums.push_back(-k);
  }
  for (long d = 1; d <= height; ++d) {
    for (long n1 : nums) {
      for (long n2 : nums) {
        // Pairs with a smaller common denominator were already tried.
        if (std::gcd(std::gcd(n1, n2), d) != 1) continue;
        Rational x1(n1, d), x2(n2, d);
        x1.canonicalize();
        x2.canonicalize();
        Rational rhs = (base + A.a * x1 * x1 + A.b * x2 * x2) / ab;
        auto x3 = rational_sqrt(rhs);
        if (!x3) continue;
        auto el = alg->element({x0, x1, x2, *x3});
        auto tn = reduced_trace_norm(el);
        if (tn.nrd != 1 || tn.trd != target) throw SpecMismatch("s_witness_search: inconsistent witness");
        return el;
      }
    }
  }
  return std::nullopt;
}

PolyQ find_global_polynomial(int l, const Rational& a, const std::vector<LocalConstraint>& constraints,
                             long search_limit) {
  if (l == 2) return PolyQ({Rational(1), -a, Rational(1)});
  if (l != 3) throw UnsupportedConfig("find_global_polynomial: degree must be 2 or 3");
  // CRT for b.
  Integer modulus = 1, residue = 0;
  std::set<uint64_t> seen;
  for (const auto& c : constraints) {
    if (!is_prime(c.p) || c.precision < 1) throw InvalidInput("find_global_polynomial: bad constraint");
    if (!seen.insert(c.p).second) throw NoCrtSolution("find_global_polynomial: repeated prime " + std::to_string(c.p));
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), c.p, c.precision);
    Integer r = c.residue % pk;
    if (r < 0) r += pk;
    // x = residue (mod modulus), x = r (mod pk)
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pk.get_mpz_t()) == 0 && pk != 1)
      throw NoCrtSolution("find_global_polynomial: moduli not coprime");
    Integer t = ((r - residue) % pk) * inv % pk;
    if (t < 0) t += pk;
    residue += modulus * t;
    modulus *= pk;
  }
  auto poly = [&](const Integer& b) { return PolyQ({Rational(-1), Rational(b), -a, Rational(1)}); };
  // Local rootlessness depends on b mod p only, so one check per constraint.
  for (const auto& c : constraints) {
    auto h = hensel_roots_padic(poly(residue), c.p, c.precision);
    if (!h.decided())
      throw LocalUndecided("find_global_polynomial: repeated root mod " + std::to_string(c.p));
    if (!h.roots.empty())
      throw LocalReducible("find_global_polynomial: cubic has a root in Q_" + std::to_string(c.p));
  }
  // Candidates b = residue + t * modulus ordered by |b|, non-negative first.
  Integer down = residue - modulus, up = residue;
  for (long step = 0; step < search_limit; ++step) {
    Integer b;
    if (abs(up) <= abs(down)) {
      b = up;
      up += modulus;
    } else {
      b = down;
      down -= modulus;
    }
    PolyQ f = poly(b);
    if (rational_roots(f).empty()) return f;
  }
  throw SearchExhausted("find_global_polynomial: no irreducible candidate within the search limit");
}

}  // namespace rootless
