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

#include "doctest.h"
#include "rootless/errors.hpp"
#include "rootless/local_global.hpp"

using namespace rootless;

namespace {

long ipow(long p, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

long vp(long x, long p, long cap) {
  if (x == 0) return cap;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return std::min(v, cap);
}

// Squarefree integer in the square class of a nonzero integer.
long squarefree_part(long a) {
  long s = a < 0 ? -1 : 1, m = std::labs(a);
  for (long d = 2; d * d <= m; ++d)
    while (m % (d * d) == 0) m /= d * d;
  return s * m;
}

// Whether z^2 - a x^2 - b y^2 = 0 has a nontrivial p-adic solution: a
// primitive solution modulo p^k whose gradient has valuation delta with
// Q = 0 mod p^(2 delta + 1) lifts by Hensel's lemma, and for squarefree a, b
// every primitive solution has delta <= 1 (odd p) or delta <= 2 (p = 2).
bool conic_has_padic_point(long a, long b, long p) {
  a = squarefree_part(a);
  b = squarefree_part(b);
  const int k = p == 2 ? 5 : ((a % p == 0 || b % p == 0) ? 3 : 1);
  const long m = ipow(p, k);
  auto norm = [m](long x) { return ((x % m) + m) % m; };
  auto check = [&](long x, long y, long z) {
    long q = norm(norm(z * z) - norm(norm(a) * norm(x * x)) - norm(norm(b) * norm(y * y)));
    long delta = std::min({vp(norm(2 * z), p, k), vp(norm(2 * a * x), p, k), vp(norm(2 * b * y), p, k)});
    if (2 * delta + 1 > k) return false;
    return vp(q, p, k) >= 2 * delta + 1;
  };
  // Projective normalization: the first coordinate not divisible by p is 1.
  for (long y = 0; y < m; ++y)
    for (long z = 0; z < m; ++z)
      if (check(1, y, z)) return true;
  for (long x = 0; x < m; x += p)
    for (long z = 0; z < m; ++z)
      if (check(x, 1, z)) return true;
  for (long x = 0; x < m; x += p)
    for (long y = 0; y < m; y += p)
      if (check(x, y, 1)) return true;
  return false;
}

}  // namespace

TEST_CASE("hilbert symbol examples") {
  CHECK(hilbert_symbol(-1, -1, Place::infinite()) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::finite(2)) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::finite(3)) == 1);
  for (uint64_t p : primes_up_to(50)) {
    if (p == 2) continue;
    Rational pp(static_cast<unsigned long>(p));
    CHECK(hilbert_symbol(pp, pp, Place::finite(p)) == hilbert_symbol(pp, -1, Place::finite(p)));
    CHECK(hilbert_symbol(pp, -pp, Place::finite(p)) == 1);
    for (long a : {1L, 2L, 3L, 6L, 10L})
      for (long b : {1L, 5L, 7L, 11L})
        if (a % static_cast<long>(p) && b % static_cast<long>(p)) CHECK(hilbert_symbol(a, b, Place::finite(p)) == 1);
  }
  CHECK(hilbert_symbol(Rational(2, 9), 3, Place::finite(3)) == hilbert_symbol(2, 3, Place::finite(3)));
}

TEST_CASE("hilbert symbol against p-adic conic points") {
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      for (long p : {2L, 3L, 5L}) {
        bool oracle = conic_has_padic_point(a, b, p);
        CHECK_MESSAGE((hilbert_symbol(a, b, Place::finite(static_cast<uint64_t>(p))) == 1) == oracle,
                      "a=" << a << " b=" << b << " p=" << p);
      }
    }
  }
}

TEST_CASE("ramification sets of quaternion algebras") {
  CHECK(ramified_places(AlgebraSpec::quaternion(-1, -1)).to_string() == "{2,inf}");
  CHECK(ramified_places(AlgebraSpec::quaternion(1, 7)).places.empty());
  for (long a = -15; a <= 15; ++a)
    for (long b = -15; b <= 15; ++b) {
      if (a == 0 || b == 0) continue;
      auto d = ramified_places(AlgebraSpec::quaternion(a, b));
      CHECK(d.places.size() % 2 == 0);
    }
}

TEST_CASE("local splitting of cyclic algebras") {
  ExtensionSpec Q = ExtensionSpec::rational();
  auto r = local_split(AlgebraSpec::cyclic(quadratic_field(2), 3), Q, 3);
  CHECK_FALSE(r.splits_over_q);
  CHECK(local_split(AlgebraSpec::cyclic(quadratic_field(2), 7), Q, 7).splits_over_q);  // 7 = -1 mod 8
  CHECK(local_split(AlgebraSpec::cyclic(quadratic_field(2), 9), Q, 3).splits_over_q);   // even valuation
  CHECK_THROWS_AS(local_split(AlgebraSpec::cyclic(quadratic_field(5), 3), Q, 5), RamifiedQuery);

  // Degree two: (Q(sqrt d), sigma, a) is the quaternion algebra (d, a).
  for (long d : {2L, 5L, 13L}) {
    auto m = quadratic_field(d);
    for (long a = -30; a <= 30; ++a) {
      if (a == 0) continue;
      for (uint64_t p : primes_up_to(60)) {
        if (m.conductor % p == 0) continue;
        bool cyc = local_split(AlgebraSpec::cyclic(m, a), Q, p).splits_over_q;
        CHECK(cyc == (hilbert_symbol(d, a, Place::finite(p)) == 1));
      }
    }
  }

  // Over L: the local degree decides when A does not split over Q_p.
  ExtensionSpec L = ExtensionSpec::from_poly(PolyQ::parse("X^2-7"));
  auto at11 = local_split(AlgebraSpec::cyclic(quadratic_field(2), Rational(11, 13)), L, 11);
  CHECK_FALSE(at11.splits_over_q);
  CHECK(at11.local_degrees == std::vector<int>{2});
  CHECK(at11.all_split());
  CHECK_THROWS_AS(local_split(AlgebraSpec::cyclic(quadratic_field(5), 3), L, 7), RamifiedQuery);
}

TEST_CASE("T membership") {
  ExtensionSpec Q = ExtensionSpec::rational();
  auto h = AlgebraSpec::quaternion(-1, -1);
  CHECK(t_membership(h, Q, 1).member);
  CHECK_FALSE(t_membership(h, Q, 2).member);
  auto tm = t_membership(h, Q, Rational(3, 5));
  CHECK(tm.member);
  CHECK(tm.real_ramified);
  CHECK(in_T(h, Q, 2).member);
  CHECK_FALSE(in_T(h, Q, Rational(1, 2)).member);

  // Definitional identity against the ramification set.
  for (long a : {-7L, -3L, 2L, 3L, 5L, 6L})
    for (long b : {-5L, -1L, 3L, 7L, 10L}) {
      auto A = AlgebraSpec::quaternion(a, b);
      auto delta = ramified_places(A);
      for (long n = -40; n <= 40; ++n)
        for (long d : {1L, 3L, 4L, 35L}) {
          if (n == 0) continue;
          Rational x(n, d);
          x.canonicalize();
          bool want = true;
          for (const auto& v : delta.places)
            if (!v.is_infinite() && *padic_valuation(x, v.prime()) != 0) want = false;
          CHECK(t_membership(A, Q, x).member == want);
        }
    }
}

TEST_CASE("witness search") {
  auto w = s_witness_search(AlgebraSpec::quaternion(3, 5), 2, 5);
  REQUIRE(w.has_value());
  CHECK(w->coeffs == std::vector<Rational>{1, 0, 0, 0});
  auto i = s_witness_search(AlgebraSpec::quaternion(-1, -1), 0, 3);
  REQUIRE(i.has_value());
  auto tn = reduced_trace_norm(*i);
  CHECK(tn.nrd == 1);
  CHECK(tn.trd == 0);
  // Traces of norm-one elements of (-1,-1) lie in [-2, 2] and in Z_2.
  CHECK_FALSE(s_witness_search(AlgebraSpec::quaternion(-1, -1), Rational(1, 2), 8).has_value());
  CHECK_FALSE(s_witness_search(AlgebraSpec::quaternion(-1, -1), 3, 8).has_value());
}

TEST_CASE("global polynomials") {
  CHECK(find_global_polynomial(2, 5, {}) == PolyQ::parse("X^2-5X+1"));
  CHECK(find_global_polynomial(3, 0, {}) == PolyQ::parse("X^3+X-1"));
  CHECK(find_global_polynomial(3, 0, {{2, 1, 3}}) == PolyQ::parse("X^3+X-1"));
  CHECK_THROWS_AS(find_global_polynomial(3, 0, {{2, 0, 3}}), LocalReducible);
  CHECK_THROWS_AS(find_global_polynomial(3, 0, {{2, 1, 1}, {2, 1, 2}}), NoCrtSolution);
  for (long a = -5; a <= 5; ++a) {
    // Residues for which the cubic is irreducible mod 2 and mod 3.
    for (long r2 = 0; r2 < 2; ++r2)
      for (long r3 = 0; r3 < 3; ++r3) {
        auto rootless_mod = [&](long p, long b) {
          for (long x = 0; x < p; ++x) {
            long v = ((x * x * x - a * x * x + b * x - 1) % p + p) % p;
            if (v == 0) return false;
          }
          return true;
        };
        if (!rootless_mod(2, r2) || !rootless_mod(3, r3)) {
          CHECK_THROWS(find_global_polynomial(3, a, {{2, r2, 4}, {3, r3, 4}}));
          continue;
        }
        PolyQ f = find_global_polynomial(3, a, {{2, r2, 4}, {3, r3, 4}});
        long b = f.coeff(1).get_num().get_si();
        CHECK(((b % 2) + 2) % 2 == r2);
        CHECK(((b % 3) + 3) % 3 == r3);
        CHECK(rational_roots(f).empty());
        CHECK(f.coeff(0) == -1);
        CHECK(f.coeff(2) == -a);
      }
  }
}
