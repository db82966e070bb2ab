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

#include <map>
#include <random>

#include "doctest.h"
#include "rootless/criterion.hpp"
#include "rootless/errors.hpp"

using namespace rootless;

namespace {

// Rational roots of a monic integer polynomial are integer divisors of a0.
bool has_integer_root(const std::vector<long>& c) {
  long a0 = c[0];
  if (a0 == 0) return true;
  for (long r = -std::labs(a0); r <= std::labs(a0); ++r) {
    if (r == 0 || a0 % r != 0) continue;
    long v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + *it;
    if (v == 0) return true;
  }
  return false;
}

PolyQ from_coeffs(const std::vector<long>& c) {
  std::vector<Rational> q;
  for (long x : c) q.emplace_back(x);
  return PolyQ(q);
}

std::vector<uint64_t> support_primes(const Rational& a) {
  std::vector<uint64_t> out;
  for (const Integer& part : {a.get_num(), a.get_den()})
    for (const auto& pp : factor_integer(part).factors) out.push_back(pp.prime.get_ui());
  return out;
}

}  // namespace

TEST_CASE("criterion fails over Q with quaternion-checked refutations") {
  auto cfg = default_config(2, 2);
  DaggerBounds b;
  b.candidate_bound = 60;
  auto v = dagger_check(ExtensionSpec::rational(), 2, cfg, b);
  CHECK_FALSE(v.holds);
  CHECK(v.unrefuted.empty());
  CHECK(v.candidates > 0);
  CHECK(v.refutations.size() == v.candidates);
  const long ds[] = {2, 5};
  std::map<Rational, Refutation> by_a;
  for (const auto& r : v.refutations) {
    // (Q(sqrt d), sigma, a) is the quaternion algebra (d, a).
    CHECK(hilbert_symbol(ds[r.field_index], r.a, Place::finite(r.p)) == -1);
    CHECK(*padic_valuation(r.a, r.p) % 2 != 0);
    by_a.emplace(r.a, r);
  }
  auto r11 = by_a.at(Rational(11, 13));
  CHECK(r11.p == 11);
  CHECK(r11.field_index == 0);
  // Refutations are stable under units and inversion.
  for (const auto& [a, r] : by_a) {
    CHECK(by_a.count(-a) == 1);
    CHECK(by_a.count(1 / a) == 1);
  }
}

TEST_CASE("criterion fails over Q for cubic characters") {
  auto cfg = default_config(3, 3);
  DaggerBounds b;
  b.candidate_bound = 50;
  auto v = dagger_check(ExtensionSpec::rational(), 3, cfg, b);
  CHECK_FALSE(v.holds);
  CHECK(v.refutations.size() == v.candidates);
  for (const auto& r : v.refutations) {
    const auto& m = cfg.fields[static_cast<std::size_t>(r.field_index)];
    CHECK(*padic_valuation(r.a, r.p) % 3 != 0);
    // p inert in M: the defining polynomial stays irreducible mod p.
    CHECK(factor_mod_p(m.defining_poly, r.p).cycle_type.degrees == std::vector<int>{3});
  }
}

TEST_CASE("criterion holds for proper extensions") {
  auto cfg = default_config(2, 2);
  auto v = dagger_check(ExtensionSpec::from_poly(PolyQ::parse("X^2-7")), 2, cfg);
  CHECK(v.holds);
  REQUIRE(v.witness);
  CHECK(*v.witness == Rational(11, 13));

  for (const char* f : {"X^2-2", "X^2-3", "X^2-7", "X^2+1", "X^2+2"}) {
    auto L = ExtensionSpec::from_poly(PolyQ::parse(f));
    auto w = dagger_check(L, 2, cfg);
    REQUIRE(w.witness);
    const Rational a = *w.witness;
    CHECK_FALSE(in_H(cfg, a));
    CHECK(in_Im(cfg, a));
    // Every quaternion algebra (d_i, a) splits over L above supp(a).
    for (uint64_t p : support_primes(a)) {
      bool even_degrees = factor_mod_p(L.defining_poly, p).cycle_type.all_divisible_by(2);
      for (long d : {2L, 5L}) CHECK((hilbert_symbol(d, a, Place::finite(p)) == 1 || even_degrees));
    }
  }

  auto c33 = default_config(3, 3);
  auto cube = ExtensionSpec::from_poly(PolyQ::parse("X^3-2"));
  auto w3 = dagger_check(cube, 3, c33);
  REQUIRE(w3.witness);
  auto sp = support_primes(*w3.witness);
  CHECK(sp.size() == 2);
  for (uint64_t p : sp) CHECK(factor_mod_p(cube.defining_poly, p).cycle_type.degrees == std::vector<int>{3});
  CHECK(audit_witness(cube, c33, *w3.witness));
  CHECK(audit_witness(cube, c33, 1 / *w3.witness));

  auto c24 = default_config(2, 4);
  for (const char* f : {"X^4-2", "X^4+1", "X^4-X-1", "X^4-10X^2+1"}) {
    auto L = ExtensionSpec::from_poly(PolyQ::parse(f));
    auto w = dagger_check(L, 2, c24);
    CHECK(w.holds);
  }
  CHECK_THROWS_AS(dagger_check(cube, 2, cfg), InvalidInput);
}

TEST_CASE("psi semantic") {
  DaggerBounds small;
  small.candidate_bound = 40;
  CHECK_FALSE(psi_semantic(ExtensionSpec::rational(), 2, small));
  CHECK_FALSE(psi_semantic(ExtensionSpec::rational(), 3, small));
  CHECK_FALSE(psi_semantic(ExtensionSpec::rational(), 4, small));
  CHECK(psi_semantic(ExtensionSpec::from_poly(PolyQ::parse("X^2-7")), 2));
  CHECK(psi_semantic(ExtensionSpec::from_poly(PolyQ::parse("X^3-2")), 3));
  CHECK(psi_semantic(ExtensionSpec::from_poly(PolyQ::parse("X^4-2")), 4));
  CHECK_THROWS_AS(psi_semantic(ExtensionSpec::rational(), 5), UnsupportedConfig);
}

TEST_CASE("no-root criterion") {
  CHECK(no_root_semantic(PolyQ::parse("X^2-2")));
  CHECK_FALSE(no_root_semantic(PolyQ::parse("X^2-1")));
  CHECK(no_root_semantic(PolyQ::parse("X^2+1") * PolyQ::parse("X^2+2")));
  CHECK(no_root_semantic(PolyQ::parse("X^4+1")));
  CHECK_FALSE(no_root_semantic(PolyQ::parse("X^4-1")));
  CHECK_THROWS_AS(no_root_semantic(PolyQ::parse("2X^2-1")), InvalidInput);
  CHECK_THROWS_AS(no_root_semantic(PolyQ::parse("X-1")), InvalidInput);

  std::mt19937_64 rng(3);
  for (int deg = 2; deg <= 4; ++deg) {
    for (int t = 0; t < 40; ++t) {
      std::vector<long> c;
      for (int i = 0; i < deg; ++i) c.push_back(static_cast<long>(rng() % 21) - 10);
      c.push_back(1);
      CHECK_MESSAGE(no_root_semantic(from_coeffs(c)) == !has_integer_root(c), from_coeffs(c).to_string());
    }
  }
  // Products of two rootless quadratics.
  for (long b0 : {1L, 2L, 3L})
    for (long c1 : {-1L, 0L, 1L}) {
      PolyQ g = PolyQ::parse("X^2+" + std::to_string(b0));
      PolyQ h = from_coeffs({5, c1, 1});
      CHECK(no_root_semantic(g * h));
    }
}
