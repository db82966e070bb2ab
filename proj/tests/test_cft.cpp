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

#include <cmath>
#include <random>

#include "doctest.h"
#include "rootless/cft.hpp"
#include "rootless/errors.hpp"

using namespace rootless;

namespace {

// chi_d(p) for Q(sqrt d) from the Legendre symbol: zero iff p splits.
int quadratic_chi(long d, uint64_t p) { return legendre(Integer(d), p) == 1 ? 0 : 1; }

int roots_mod_p(const PolyQ& f, uint64_t p) {
  int n = 0;
  for (uint64_t x = 0; x < p; ++x)
    if (reduce_mod(f.eval(Rational(static_cast<unsigned long>(x))), p) == 0) ++n;
  return n;
}

bool is_zero_class(const ArtinClass& c) {
  for (int v : c)
    if (v) return false;
  return true;
}

}  // namespace

TEST_CASE("default configurations") {
  auto c22 = default_config(2, 2);
  CHECK(c22.k() == 2);
  CHECK(c22.modulus == 40);
  auto c33 = default_config(3, 3);
  CHECK(c33.k() == 2);
  CHECK(c33.modulus == 63);
  auto c24 = default_config(2, 4);
  CHECK(c24.k() == 5);
  CHECK(c24.modulus == 8 * 5 * 13 * 17 * 29);
  for (const auto& cfg : {c22, c33, c24}) {
    CHECK_NOTHROW(validate(cfg));
    for (const auto& m : cfg.fields) CHECK(m.chi(Integer(-1)) == 0);
  }
  CHECK_THROWS_AS(default_config(2, 3), UnsupportedConfig);
  CHECK_THROWS_AS(default_config(5, 5), UnsupportedConfig);

  auto bad = c22;
  bad.fields.pop_back();
  bad.modulus = 8;
  CHECK_THROWS_AS(validate(bad), SpecMismatch);  // 2^1 = 2! is not larger
  bad = c22;
  bad.fields[1] = quadratic_field(2);
  bad.modulus = 8;
  CHECK_THROWS_AS(validate(bad), SpecMismatch);  // not jointly surjective
}

TEST_CASE("artin classes") {
  auto cfg = default_config(2, 2);
  CHECK(*artin_class(cfg, 1) == ArtinClass{0, 0});
  CHECK(*artin_class(cfg, 11) == ArtinClass{1, 0});
  CHECK(*artin_class(cfg, 13) == ArtinClass{1, 1});
  CHECK_FALSE(artin_class(cfg, 10).has_value());
  CHECK_FALSE(artin_class(cfg, Rational(3, 5)).has_value());
  CHECK_FALSE(in_Im(cfg, 10));
  CHECK_FALSE(in_H(cfg, 11));
  CHECK_THROWS_AS(artin_class(cfg, 0), InvalidInput);
  for (long x = 1; x < 4000; x += 40) CHECK(in_H(cfg, x));

  auto c24 = default_config(2, 4);
  const long ds[] = {2, 5, 13, 17, 29};
  for (uint64_t p : primes_up_to(1000)) {
    if (c24.modulus % p == 0) continue;
    auto c = *artin_class(c24, Rational(static_cast<unsigned long>(p)));
    for (int i = 0; i < 5; ++i) CHECK(c[static_cast<std::size_t>(i)] == quadratic_chi(ds[i], p));
  }

  // Cubic characters vanish exactly at primes splitting completely.
  auto c33 = default_config(3, 3);
  for (uint64_t p : primes_up_to(1000)) {
    if (c33.modulus % p == 0) continue;
    auto c = *artin_class(c33, Rational(static_cast<unsigned long>(p)));
    for (int i = 0; i < 2; ++i) {
      const auto& m = c33.fields[static_cast<std::size_t>(i)];
      CHECK((c[static_cast<std::size_t>(i)] == 0) == (roots_mod_p(m.defining_poly, p) == 3));
    }
  }
}

TEST_CASE("artin map is a homomorphism depending only on the ideal") {
  std::mt19937_64 rng(7);
  for (const auto& cfg : {default_config(2, 2), default_config(3, 3), default_config(2, 4)}) {
    int checked = 0;
    while (checked < 300) {
      Rational x(static_cast<long>(rng() % 2000) + 1, static_cast<long>(rng() % 50) + 1);
      Rational y(static_cast<long>(rng() % 2000) + 1, static_cast<long>(rng() % 50) + 1);
      x.canonicalize();
      y.canonicalize();
      auto cx = artin_class(cfg, x), cy = artin_class(cfg, y);
      if (!cx || !cy) continue;
      ++checked;
      auto cxy = *artin_class(cfg, x * y);
      auto inv = *artin_class(cfg, 1 / x);
      for (int i = 0; i < cfg.k(); ++i) {
        auto s = static_cast<std::size_t>(i);
        CHECK(cxy[s] == ((*cx)[s] + (*cy)[s]) % cfg.l);
        CHECK((inv[s] + (*cx)[s]) % cfg.l == 0);
      }
      CHECK(*artin_class(cfg, -x) == *cx);
    }
  }
}

TEST_CASE("characters against splitting and Chebotarev sampling") {
  auto m = quadratic_field(2);
  for (uint64_t p : primes_up_to(1000)) {
    if (p == 2) continue;
    bool split = factor_mod_p(PolyQ::parse("X^2-2"), p).cycle_type.degrees.size() == 2;
    CHECK((m.chi(Integer(static_cast<unsigned long>(p))) == 0) == split);
  }
  for (const auto& cfg : {default_config(2, 2), default_config(3, 3), default_config(2, 4)}) {
    for (const auto& f : cfg.fields) {
      uint64_t total = 0, kernel = 0;
      for (uint64_t p : primes_up_to(10000)) {
        if (f.conductor % p == 0) continue;
        ++total;
        kernel += f.chi(Integer(static_cast<unsigned long>(p))) == 0;
      }
      double density = static_cast<double>(kernel) / static_cast<double>(total);
      CHECK(std::abs(density - 1.0 / f.l) <= 0.05 / f.l);
    }
  }
}

TEST_CASE("good primes") {
  auto gi = good_primes(ExtensionSpec::from_poly(PolyQ::parse("X^2+1")), 2, 1000);
  std::vector<uint64_t> want;
  for (uint64_t p : primes_up_to(1000))
    if (p % 4 == 3) want.push_back(p);
  CHECK(gi.good_primes == want);
  CHECK(std::abs(gi.sampled_density.get_d() - 0.5) < 0.05);
  CHECK(gi.admissible);

  auto cube = good_primes(ExtensionSpec::from_poly(PolyQ::parse("X^3-2")), 3, 2000);
  want.clear();
  for (uint64_t p : primes_up_to(2000)) {
    if (p <= 3) continue;
    bool is_cube = false;
    for (uint64_t x = 1; x < p && !is_cube; ++x) is_cube = x * x % p * x % p == 2 % p;
    if (!is_cube && p % 3 == 1) want.push_back(p);
  }
  CHECK(cube.good_primes == want);
  CHECK(std::abs(cube.sampled_density.get_d() - 1.0 / 3) < 0.05);
  CHECK(cube.admissible);

  auto q = good_primes(ExtensionSpec::rational(), 2, 500);
  CHECK(q.good_primes.empty());
  CHECK_FALSE(q.admissible);
  CHECK_THROWS_AS(good_primes(ExtensionSpec::rational(), 2, 50), InvalidInput);
}

TEST_CASE("admissible primes") {
  CHECK(select_admissible(ExtensionSpec::from_poly(PolyQ::parse("X^2-7")), 2) == 2);
  CHECK(select_admissible(ExtensionSpec::from_poly(PolyQ::parse("X^2+2")), 2) == 2);
  CHECK(select_admissible(ExtensionSpec::from_poly(PolyQ::parse("X^3-2")), 3) == 3);
  CHECK(select_admissible(ExtensionSpec::from_poly(PolyQ::parse("X^4-2")), 4) == 2);
  CHECK_THROWS_AS(select_admissible(ExtensionSpec::from_poly(PolyQ::parse("X^2-7")), 3), InvalidInput);
}

TEST_CASE("witness elements") {
  auto cfg = default_config(2, 2);
  auto L = ExtensionSpec::from_poly(PolyQ::parse("X^2-7"));
  auto rep = good_primes(L, 2, 500);
  std::vector<uint64_t> P;
  for (uint64_t p : rep.good_primes)
    if (cfg.modulus % p) P.push_back(p);
  REQUIRE(P.size() >= 2);
  CHECK(P[0] == 11);
  CHECK(P[1] == 13);
  Rational a = find_witness_a(cfg, P);
  CHECK(a == Rational(11, 13));
  CHECK(in_Im(cfg, a));
  CHECK_FALSE(in_H(cfg, a));

  CHECK_THROWS_AS(find_witness_a(cfg, {11, 19}), AllSameClass);
  CHECK_THROWS_AS(find_witness_a(cfg, {5, 11}), InvalidInput);
  CHECK_THROWS_AS(find_witness_a(cfg, {}), InvalidInput);

  for (const char* poly : {"X^2-2", "X^2-3", "X^2+1", "X^2+2", "X^2-7"}) {
    auto Lq = ExtensionSpec::from_poly(PolyQ::parse(poly));
    auto gp = good_primes(Lq, 2, 1000);
    std::vector<uint64_t> Pq;
    for (uint64_t p : gp.good_primes)
      if (cfg.modulus % p) Pq.push_back(p);
    Rational w = find_witness_a(cfg, Pq);
    CHECK(in_Im(cfg, w));
    CHECK_FALSE(in_H(cfg, w));
    for (const Integer& part : {w.get_num(), w.get_den()})
      for (const auto& pp : factor_integer(part).factors)
        CHECK(factor_mod_p(Lq.defining_poly, pp.prime.get_ui()).cycle_type.all_divisible_by(2));
  }
}

TEST_CASE("class representatives") {
  for (const auto& cfg : {default_config(2, 2), default_config(3, 3), default_config(2, 4)}) {
    auto reps = class_representatives(cfg);
    uint64_t want = 1;
    for (int i = 0; i < cfg.k(); ++i) want *= static_cast<uint64_t>(cfg.l);
    CHECK(reps.size() == want - 1);
    for (const auto& [cls, p] : reps) {
      CHECK_FALSE(is_zero_class(cls));
      CHECK(*artin_class(cfg, Rational(static_cast<unsigned long>(p))) == cls);
      for (uint64_t q : primes_up_to(p - 1))
        if (cfg.modulus % q) CHECK(*artin_class(cfg, Rational(static_cast<unsigned long>(q))) != cls);
    }
  }
  auto reps = class_representatives(default_config(2, 2));
  CHECK(reps.at({1, 1}) == 3);
  CHECK(reps.at({0, 1}) == 7);
  CHECK(reps.at({1, 0}) == 11);
}

TEST_CASE("configuration files") {
  const std::string text =
      "# two real quadratic fields\n"
      "l=2\n"
      "n=2\n"
      "field.1.poly=X^2-2\n"
      "field.1.sigma=-X\n"
      "field.1.conductor=8\n"
      "field.2.poly = X^2-5\n"
      "field.2.sigma = -X\n"
      "field.2.conductor = 5\n";
  auto cfg = parse_config(text);
  auto ref = default_config(2, 2);
  CHECK(cfg.modulus == ref.modulus);
  REQUIRE(cfg.k() == 2);
  for (int i = 0; i < 2; ++i)
    CHECK(cfg.fields[static_cast<std::size_t>(i)].character_table ==
          ref.fields[static_cast<std::size_t>(i)].character_table);

  auto cubic = parse_config(
      "l=3\nn=3\nfield.1.poly=X^3+X^2-2X-1\nfield.1.sigma=X^2-2\nfield.1.conductor=7\n"
      "field.2.poly=X^3-3X+1\nfield.2.sigma=X^2-2\nfield.2.conductor=9\n");
  CHECK(cubic.modulus == 63);

  CHECK_THROWS_AS(parse_config("l=2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("l=2\nn=2\nfield.1.poly=X^2-2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config("l=2\nn=2\nbogus=1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config(text + "field.3.poly=X^2-2\nfield.3.sigma=-X\nfield.3.conductor=8\n"
                                      "field.3.chi=-1,0,-1,0,-1,0,-1,0\n"),
                  SpecMismatch);
}
