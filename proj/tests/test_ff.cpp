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

#include <numeric>
#include <set>

#include "doctest.h"
#include "rootless/errors.hpp"
#include "rootless/ff.hpp"
#include "rootless/qpoly.hpp"

using namespace rootless;

namespace {

// U_l by direct enumeration of every element of F_{q^l}.
std::set<uint64_t> brute_U(const FqExtension& ext) {
  const FqField& big = ext.field();
  std::set<uint64_t> out;
  for (uint64_t c = 0; c < big.order(); ++c) {
    FqElement x = big.decode(c);
    if (ext.in_base(x)) continue;
    auto tn = trace_and_norm(ext, x);
    if (tn.norm == ext.base().one()) out.insert(ext.base().encode(tn.trace));
  }
  return out;
}

// Irreducibility of a monic polynomial over F_q, independent of the Rabin
// test: prime q via factor_mod_p, prime powers by the absence of roots in
// every F_{q^d} with d <= n/2.
bool independent_irreducible(const FqField& base, const FqPoly& f) {
  int n = f.degree();
  if (base.degree() == 1) {
    std::vector<Rational> c;
    for (auto x : f.coeffs) c.emplace_back(static_cast<unsigned long>(x));
    try {
      return factor_mod_p(PolyQ(c), base.characteristic()).cycle_type.degrees == std::vector<int>{n};
    } catch (const RamifiedPrime&) {
      return false;
    }
  }
  for (int d = 1; 2 * d <= n; ++d) {
    FqExtension ext(base, d);
    const FqField& big = ext.field();
    std::vector<FqElement> coeffs;
    for (auto x : f.coeffs) coeffs.push_back(ext.embed(base.decode(x)));
    for (uint64_t c = 0; c < big.order(); ++c) {
      FqElement z = big.decode(c), acc = big.zero();
      for (std::size_t i = coeffs.size(); i-- > 0;) acc = big.add(big.mul(acc, z), coeffs[i]);
      if (big.is_zero(acc)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("defining polynomials are the least irreducible encodings") {
  FqExtension f8 = make_extension(FqField::prime(2), 3);
  CHECK(f8.field().defining_poly() == PolyFp(2, {1, 1, 0, 1}));
  CHECK(f8.field().order() == 8);
  CHECK(make_extension(FqField::prime(3), 2).field().order() == 9);
  CHECK(make_extension(FqField::prime(5), 5).field().order() == 3125);
  CHECK_THROWS_AS(make_extension(FqField::prime(2), 4), InvalidInput);
  CHECK_THROWS_AS(make_extension(FqField::prime(1000003), 5), SizeLimitExceeded);

  // Oracle: scan encodings with a root/factor test written here.
  for (uint64_t p : {2u, 3u, 5u, 7u}) {
    for (int e = 2; e <= 3; ++e) {
      FqField f = FqField::make(p, e);
      uint64_t count = 1;
      for (int i = 0; i < e; ++i) count *= p;
      for (uint64_t code = 0; code < count; ++code) {
        std::vector<uint64_t> c(static_cast<std::size_t>(e) + 1, 0);
        uint64_t t = code;
        for (int i = 0; i < e; ++i, t /= p) c[static_cast<std::size_t>(i)] = t % p;
        c.back() = 1;
        PolyFp g(p, c);
        bool has_root = false;
        for (uint64_t x = 0; x < p; ++x) has_root |= g.eval(x) == 0;
        if (!has_root) {  // degree <= 3: irreducible iff rootless
          CHECK(f.defining_poly() == g);
          break;
        }
      }
    }
  }
}

TEST_CASE("field axioms on small fields") {
  for (uint64_t q : {4u, 8u, 9u, 25u, 27u}) {
    FqField f = FqField::of_order(q);
    for (uint64_t a = 1; a < q; ++a) {
      FqElement x = f.decode(a);
      CHECK(f.mul(x, f.inv(x)) == f.one());
      CHECK(f.encode(x) == a);
    }
    FqElement g = f.primitive_element();
    std::set<uint64_t> powers;
    FqElement cur = f.one();
    for (uint64_t k = 0; k + 1 < q; ++k, cur = f.mul(cur, g)) powers.insert(f.encode(cur));
    CHECK(powers.size() == q - 1);
  }
}

TEST_CASE("trace and norm") {
  for (uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
    for (int l : {2, 3}) {
      FqField base = FqField::of_order(q);
      FqExtension ext = make_extension(base, l);
      for (uint64_t c = 0; c < q; ++c) {
        FqElement x = base.decode(c);
        auto tn = trace_and_norm(ext, ext.embed(x));
        CHECK(tn.trace == base.mul(base.from_int(l), x));
        CHECK(tn.norm == base.pow(x, l));
      }
      auto zero = trace_and_norm(ext, ext.field().zero());
      CHECK(base.is_zero(zero.trace));
      CHECK(base.is_zero(zero.norm));
      // Values are fixed by the q-power map.
      for (uint64_t c = 0; c < ext.field().order(); ++c) {
        auto tn = trace_and_norm(ext, ext.field().decode(c));
        FqElement t = ext.embed(tn.trace), n = ext.embed(tn.norm);
        CHECK(ext.field().pow(t, q) == t);
        CHECK(ext.field().pow(n, q) == n);
      }
    }
  }
  FqExtension f9 = make_extension(FqField::prime(3), 2);
  FqElement g = f9.field().primitive_element();
  auto tn = trace_and_norm(f9, g);
  CHECK(f9.embed(tn.norm) == f9.field().pow(g, 4));
  CHECK(f9.field().pow(f9.embed(tn.norm), 2) == f9.field().one());
}

TEST_CASE("norm-one count and base membership along the norm-one walk") {
  for (uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (int l : {2, 3, 5}) {
      FqExtension ext = make_extension(FqField::of_order(q), l);
      if (ext.field().order() > 20000) continue;
      const FqField& big = ext.field();
      uint64_t ones = 0;
      for (uint64_t c = 1; c < big.order(); ++c)
        ones += trace_and_norm(ext, big.decode(c)).norm == ext.base().one();
      CHECK(Integer(static_cast<unsigned long>(ones)) == ext.norm_exponent());

      uint64_t N = ext.norm_exponent().get_ui();
      uint64_t period = N / std::gcd(N, q - 1);
      FqElement h = big.pow(ext.generator(), Integer(static_cast<unsigned long>(q - 1)));
      FqElement x = big.one();
      for (uint64_t k = 0; k < N; ++k, x = big.mul(x, h)) {
        bool frobenius_fixed = ext.frobenius(x) == x;
        CHECK(frobenius_fixed == (k % period == 0));
        CHECK(frobenius_fixed == ext.in_base(x));
      }
    }
  }
}

TEST_CASE("compute_U against direct enumeration and the irreducible-polynomial oracle") {
  TraceSet u2 = compute_U(FqField::prime(2), 2);
  CHECK(u2.elements == std::vector<uint64_t>{1});

  for (uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    FqField base = FqField::of_order(q);
    TableField tf(base);
    for (int l : {2, 3}) {
      FqExtension ext = make_extension(base, l);
      TraceSet u = compute_U(ext);
      if (ext.field().order() <= 5000) {
        auto brute = brute_U(ext);
        CHECK(std::vector<uint64_t>(brute.begin(), brute.end()) == u.elements);
      }
      // t in U_l iff X^l - tX^(l-1) + ... + (-1)^l is irreducible for some middle part.
      uint32_t a0 = static_cast<uint32_t>(base.encode(base.from_int(l % 2 ? -1 : 1)));
      for (uint64_t t = 0; t < q; ++t) {
        uint32_t top = tf.neg(static_cast<uint32_t>(t));
        bool found = find_irreducible_prescribed(tf, l, a0, top).has_value();
        CHECK(found == u.contains(t));
      }
    }
  }
  CHECK_THROWS_AS(compute_U(FqField::prime(101), 5, 1000), SizeLimitExceeded);
}

TEST_CASE("difference property examples") {
  auto r13 = check_difference_property(compute_U(FqField::prime(13), 2), false);
  CHECK(r13.holds);
  for (uint64_t q : prime_powers(2, 11)) {
    auto r = check_difference_property(compute_U(FqField::of_order(q), 2), true);
    CHECK_MESSAGE(r.holds, "q=" << q);
  }
  auto r2 = check_difference_property(compute_U(FqField::prime(2), 2), false);
  CHECK_FALSE(r2.holds);  // U_2(F_2) = {1}, so U - U = {0}
  CHECK(r2.missing == std::vector<uint64_t>{1});
}

TEST_CASE("find_irreducible_prescribed") {
  FqField f2 = FqField::prime(2);
  auto lin = find_irreducible_prescribed(f2, 1, f2.one(), f2.one());
  REQUIRE(lin.has_value());
  CHECK(lin->coeffs == std::vector<uint32_t>{1, 1});
  CHECK_FALSE(find_irreducible_prescribed(FqField::prime(3), 1, FqField::prime(3).one(),
                                          FqField::prime(3).from_int(2)).has_value());
  CHECK_THROWS_AS(find_irreducible_prescribed(f2, 3, f2.zero(), f2.one()), InvalidInput);
  CHECK_THROWS_AS(find_irreducible_prescribed(FqField::prime(7), 12, FqField::prime(7).one(),
                                              FqField::prime(7).one(), 1000),
                  BudgetExceeded);

  for (uint64_t q : prime_powers(2, 9)) {
    FqField base = FqField::of_order(q);
    TableField tf(base);
    uint32_t minus1 = tf.neg(1);
    for (uint32_t top = 0; top < q; ++top) {
      auto f = find_irreducible_prescribed(tf, 3, minus1, top);
      REQUIRE(f.has_value());
      CHECK(f->coeffs[0] == minus1);
      CHECK(f->coeffs[2] == top);
      CHECK(independent_irreducible(base, *f));
    }
    for (uint32_t a0 = 1; a0 < q; a0 += 2) {
      auto f = find_irreducible_prescribed(tf, 4, a0, 0);
      if (f) CHECK(independent_irreducible(base, *f));
    }
  }
}
