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

#include "rootless/qpoly.hpp"

#include <algorithm>
#include <set>

#include "rootless/errors.hpp"

namespace rootless {

Place Place::finite(uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("Place: " + std::to_string(p) + " is not prime");
  return Place(p);
}

uint64_t Place::prime() const {
  if (is_infinite()) throw InvalidInput("Place: the real place has no prime");
  return p_;
}

std::string Place::to_string() const { return is_infinite() ? "inf" : std::to_string(p_); }

bool Place::operator<(const Place& o) const {
  if (is_infinite() != o.is_infinite()) return !is_infinite();
  return p_ < o.p_;
}

std::optional<long> padic_valuation(const Integer& x, uint64_t p) {
  if (x == 0) return std::nullopt;
  Integer t = x;
  long v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::optional<long> padic_valuation(const Rational& x, uint64_t p) {
  if (x == 0) return std::nullopt;
  return *padic_valuation(x.get_num(), p) - *padic_valuation(x.get_den(), p);
}

Valuation valuation(const Rational& x, const Place& v) {
  Valuation out;
  if (v.is_infinite()) {
    out.sign = sgn(x);
    return out;
  }
  auto val = padic_valuation(x, v.prime());
  out.is_infinite = !val.has_value();
  out.value = val.value_or(0);
  return out;
}

bool CycleType::all_divisible_by(int l) const {
  return !degrees.empty() &&
         std::all_of(degrees.begin(), degrees.end(), [l](int d) { return d % l == 0; });
}

std::string CycleType::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(degrees[i]);
  }
  return out + "}";
}

PolyFp reduce_mod_p(const PolyQ& f, uint64_t p) {
  std::vector<uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) {
    if (mpz_divisible_ui_p(a.get_den_mpz_t(), p) != 0)
      throw DenominatorClash("prime " + std::to_string(p) + " divides a denominator of " +
                             f.to_string());
    c.push_back(reduce_mod(a, p));
  }
  return PolyFp(p, std::move(c));
}

ModPFactorization factor_mod_p(const PolyQ& f, uint64_t p) {
  if (!f.is_monic()) throw InvalidInput("factor_mod_p: polynomial must be monic");
  PolyFp g = reduce_mod_p(f, p);
  if (g.degree() >= 1) {
    PolyFp d = g.derivative();
    if (d.is_zero() || gcd(g, d).degree() > 0)
      throw RamifiedPrime(f.to_string() + " is not squarefree mod " + std::to_string(p));
  }
  ModPFactorization out;
  out.cycle_type.p = p;
  for (const auto& [deg, part] : distinct_degree_factor(g)) {
    for (auto& fac : equal_degree_factor(part, deg)) {
      out.cycle_type.degrees.push_back(deg);
      out.factors.push_back(std::move(fac));
    }
  }
  std::sort(out.cycle_type.degrees.begin(), out.cycle_type.degrees.end());
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::optional<uint64_t> mod_p_irreducibility_witness(const PolyQ& f, uint64_t pmax) {
  PolyQ g = f.monic();
  if (g.degree() < 1) return std::nullopt;
  for (uint64_t p : primes_up_to(pmax)) {
    try {
      PolyFp r = reduce_mod_p(g, p);
      if (r.degree() != g.degree()) continue;
      PolyFp d = r.derivative();
      if (d.is_zero() || gcd(r, d).degree() > 0) continue;
      if (is_irreducible(r)) return p;
    } catch (const DenominatorClash&) {
      continue;
    }
  }
  return std::nullopt;
}

namespace {

// Integer coefficients of c * f with c > 0 minimal.
std::vector<Integer> clear_denominators(const PolyQ& f) {
  Integer l = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& a : f.coeffs()) {
    Rational t = a * l;
    out.push_back(t.get_num());
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const PolyQ& f, uint64_t budget) {
  if (f.is_zero()) throw InvalidInput("rational_roots: zero polynomial");
  std::vector<Integer> c = clear_denominators(f);
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (c.size() - low >= 2) {
    PolyQ g;
    {
      std::vector<Rational> gc;
      for (std::size_t i = low; i < c.size(); ++i) gc.emplace_back(c[i]);
      g = PolyQ(std::move(gc));
    }
    auto num_divs = divisors(c[low], budget);
    auto den_divs = divisors(c.back(), budget);
    for (const auto& r : num_divs) {
      for (const auto& s : den_divs) {
        for (int sign : {1, -1}) {
          Rational cand(r * sign, s);
          cand.canonicalize();
          if (g.eval(cand) == 0) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

HenselResult hensel_roots_padic(const PolyQ& f, uint64_t p, unsigned k) {
  if (!f.is_monic()) throw InvalidInput("hensel_roots_padic: polynomial must be monic");
  if (k < 1) throw InvalidInput("hensel_roots_padic: precision must be at least 1");
  if (!is_prime(p)) throw InvalidInput("hensel_roots_padic: modulus must be prime");
  HenselResult out;
  out.p = p;
  out.precision = k;
  mpz_ui_pow_ui(out.modulus.get_mpz_t(), p, k);

  // Integer representatives of the p-integral coefficients mod p^k.
  std::vector<Integer> c;
  for (const auto& a : f.coeffs()) {
    if (mpz_divisible_ui_p(a.get_den_mpz_t(), p) != 0)
      throw DenominatorClash("hensel_roots_padic: coefficient not " + std::to_string(p) +
                             "-integral");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.get_den_mpz_t(), out.modulus.get_mpz_t());
    Integer v = a.get_num() * inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), out.modulus.get_mpz_t());
    c.push_back(v);
  }
  auto eval = [&](const std::vector<Integer>& coeffs, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = acc * x + *it;
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
  };
  std::vector<Integer> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<unsigned long>(i));

  Integer pz = static_cast<unsigned long>(p);
  for (uint64_t r = 0; r < p; ++r) {
    Integer x = static_cast<unsigned long>(r);
    if (eval(c, x, pz) != 0) continue;
    if (eval(dc, x, pz) == 0) {
      out.undecided.push_back(r);
      continue;
    }
    // Newton: precision doubles each step.
    unsigned prec = 1;
    while (prec < k) {
      prec = std::min(k, prec * 2);
      Integer m;
      mpz_ui_pow_ui(m.get_mpz_t(), p, prec);
      Integer fx = eval(c, x, m);
      Integer dfx = eval(dc, x, m);
      Integer inv;
      mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m.get_mpz_t());
      x = x - fx * inv;
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    out.roots.push_back(x);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

PolyQ resolvent_cubic(const PolyQ& quartic) {
  if (quartic.degree() != 4 || !quartic.is_monic())
    throw InvalidInput("resolvent_cubic: expects a monic quartic");
  Rational a = quartic.coeff(3), b = quartic.coeff(2), c = quartic.coeff(1), d = quartic.coeff(0);
  return PolyQ({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rational(1)});
}

namespace {

// Monic quadratic factor pair of a rootless quartic, if one exists.
std::optional<std::pair<PolyQ, PolyQ>> split_into_quadratics(const PolyQ& f, uint64_t budget) {
  Rational a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  std::vector<std::pair<PolyQ, PolyQ>> found;
  for (const auto& y : rational_roots(resolvent_cubic(f), budget)) {
    // (X^2 + pX + q)(X^2 + rX + s): q + s = y, qs = d, p + r = a, pr = b - y.
    auto sq1 = rational_sqrt(y * y - 4 * d);
    auto sq2 = rational_sqrt(a * a - 4 * (b - y));
    if (!sq1 || !sq2) continue;
    Rational q = (y + *sq1) / 2, s = (y - *sq1) / 2;
    Rational pp = (a + *sq2) / 2, r = (a - *sq2) / 2;
    for (int swap = 0; swap < 2; ++swap) {
      Rational qq = swap ? s : q, ss = swap ? q : s;
      if (pp * ss + qq * r == c) {
        PolyQ g({qq, pp, Rational(1)}), h({ss, r, Rational(1)});
        if (h < g) std::swap(g, h);
        found.emplace_back(g, h);
      }
    }
  }
  if (found.empty()) return std::nullopt;
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    if (x.first == y.first) return x.second < y.second;
    return x.first < y.first;
  });
  return found.front();
}

}  // namespace

std::vector<QFactor> factor_quartic_or_less(const PolyQ& f, uint64_t budget) {
  if (f.degree() < 1 || f.degree() > 4 || !f.is_monic())
    throw InvalidInput("factor_quartic_or_less: expects a monic polynomial of degree 1..4");
  std::vector<QFactor> out;
  PolyQ rest = f;
  bool progress = true;
  while (rest.degree() >= 1 && progress) {
    progress = false;
    for (const auto& r : rational_roots(rest, budget)) {
      PolyQ lin({-r, Rational(1)});
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) continue;
      out.push_back({lin, IrreducibilityCertificate::Linear});
      rest = q;
      progress = true;
      break;
    }
  }
  if (rest.degree() == 2 || rest.degree() == 3) {
    out.push_back({rest, IrreducibilityCertificate::NoRationalRoot});
  } else if (rest.degree() == 4) {
    if (auto split = split_into_quadratics(rest, budget)) {
      out.push_back({split->first, IrreducibilityCertificate::NoRationalRoot});
      out.push_back({split->second, IrreducibilityCertificate::NoRationalRoot});
    } else {
      out.push_back({rest, IrreducibilityCertificate::Resolvent});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const QFactor& x, const QFactor& y) { return x.poly < y.poly; });
  return out;
}

}  // namespace rootless
