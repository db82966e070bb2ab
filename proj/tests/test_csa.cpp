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

#include <random>

#include "doctest.h"
#include "rootless/csa.hpp"
#include "rootless/errors.hpp"
#include "rootless/qpoly.hpp"

using namespace rootless;

namespace {

std::vector<Rational> random_coords(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  std::vector<Rational> v;
  for (int i = 0; i < d; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    v.push_back(r);
  }
  return v;
}

// Determinant by Gaussian elimination over Q.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// Matrix of left multiplication by x on the algebra, from structure constants.
std::vector<std::vector<Rational>> left_regular(const AlgebraElement& x) {
  const auto& T = x.algebra->constants().table;
  const std::size_t d = x.coeffs.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) m[k][j] += x.coeffs[i] * T[i][j][k];
  return m;
}

Rational power(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

std::vector<AlgebraSpec> corpus() {
  return {AlgebraSpec::quaternion(-1, -1), AlgebraSpec::quaternion(2, 5),
          AlgebraSpec::quaternion(Rational(3, 7), -11), AlgebraSpec::quaternion(4, 3),
          AlgebraSpec::cyclic(quadratic_field(2), 3), AlgebraSpec::cyclic(quadratic_field(5), Rational(-2, 3)),
          AlgebraSpec::cyclic(cyclic_cubic(7), 2), AlgebraSpec::cyclic(cyclic_cubic(9), Rational(5, 2)),
          AlgebraSpec::cyclic(cyclic_cubic(7), 1)};
}

}  // namespace

TEST_CASE("quaternion relations") {
  auto h = Algebra::create(AlgebraSpec::quaternion(-2, 5));
  auto one = h->basis(0), i = h->basis(1), j = h->basis(2), ij = h->basis(3);
  CHECK(mul(i, i) == h->scalar(-2));
  CHECK(mul(j, j) == h->scalar(5));
  CHECK(mul(i, j) == ij);
  CHECK(mul(j, i) == scale(ij, -1));
  CHECK(mul(i, one) == i);
  auto other = Algebra::create(AlgebraSpec::quaternion(-1, -1));
  CHECK_THROWS_AS(mul(i, other->basis(1)), SpecMismatch);
}

TEST_CASE("associativity of constructed and reference tables") {
  for (const auto& spec : corpus()) CHECK_MESSAGE(verify_associativity(cyclic_structure_constants(spec)), spec.to_string());
  CHECK(verify_associativity(matrix_algebra_constants(3)));
  CHECK(verify_associativity(matrix_algebra_constants(2)));
  auto bad = cyclic_structure_constants(AlgebraSpec::quaternion(-1, -1));
  bad.table[1][2][3] += 1;
  CHECK_FALSE(verify_associativity(bad));
  auto bad3 = cyclic_structure_constants(AlgebraSpec::cyclic(cyclic_cubic(7), 2));
  bad3.table[4][5][0] += Rational(1, 2);
  CHECK_FALSE(verify_associativity(bad3));

  CyclicFieldSpec broken = cyclic_cubic(7);
  broken.sigma = PolyQ::parse("X^2-1");
  CHECK_THROWS_AS(cyclic_structure_constants(AlgebraSpec::cyclic(broken, 2)), SpecMismatch);
}

TEST_CASE("bilinearity and reduced trace and norm") {
  std::mt19937_64 rng(11);
  for (const auto& spec : corpus()) {
    auto alg = Algebra::create(spec);
    const int l = alg->degree(), d = alg->dimension();
    for (long c : {-3L, 0L, 2L, 7L}) {
      auto tn = reduced_trace_norm(alg->scalar(c));
      CHECK(tn.trd == l * c);
      CHECK(tn.nrd == power(c, l));
    }
    for (int it = 0; it < 200; ++it) {
      auto x = alg->element(random_coords(rng, d));
      auto y = alg->element(random_coords(rng, d));
      auto z = alg->element(random_coords(rng, d));
      CHECK(mul(add(x, y), z) == add(mul(x, z), mul(y, z)));
      auto tx = reduced_trace_norm(x), ty = reduced_trace_norm(y), txy = reduced_trace_norm(mul(x, y));
      CHECK(txy.nrd == tx.nrd * ty.nrd);
      Rational c(static_cast<long>(rng() % 13) - 6, 5);
      c.canonicalize();
      CHECK(reduced_trace_norm(add(x, scale(y, c))).trd == tx.trd + c * ty.trd);
      if (it < 20) {
        // Left-regular representation: det = Nrd^l, trace = l * Trd.
        auto m = left_regular(x);
        CHECK(determinant(m) == power(tx.nrd, l));
        Rational tr = 0;
        for (int i = 0; i < d; ++i) tr += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        CHECK(tr == l * tx.trd);
      }
      // Cayley-Hamilton for the reduced characteristic polynomial.
      if (l == 2) {
        auto lhs = add(sub(mul(x, x), scale(x, tx.trd)), alg->scalar(tx.nrd));
        CHECK(lhs == alg->scalar(0));
      } else {
        auto x2 = mul(x, x);
        Rational c2 = (tx.trd * tx.trd - reduced_trace_norm(x2).trd) / 2;
        auto lhs = add(sub(add(mul(x2, x), scale(x, c2)), scale(x2, tx.trd)), alg->scalar(-tx.nrd));
        CHECK(lhs == alg->scalar(0));
      }
    }
  }
}

TEST_CASE("closed form examples and the two paths for degree two") {
  auto h = Algebra::create(AlgebraSpec::quaternion(-1, -1));
  auto tn = reduced_trace_norm(h->basis(1));
  CHECK(tn.trd == 0);
  CHECK(tn.nrd == 1);

  std::mt19937_64 rng(12);
  for (long d : {2L, 5L, 13L}) {
    for (long a : {-7L, 3L, 10L}) {
      auto cyc = Algebra::create(AlgebraSpec::cyclic(quadratic_field(d), a));
      auto quat = Algebra::create(AlgebraSpec::quaternion(d, a));
      for (int it = 0; it < 50; ++it) {
        auto coords = random_coords(rng, 4);
        auto m = reduced_trace_norm_matrix(cyc->element(coords));
        auto q = reduced_trace_norm(quat->element(coords));
        CHECK(m.trd == q.trd);
        CHECK(m.nrd == q.nrd);
        auto qm = reduced_trace_norm_matrix(quat->element(coords));
        CHECK(qm.nrd == q.nrd);
      }
    }
  }
}

TEST_CASE("symbolic trace and norm agree with the numeric ones") {
  std::mt19937_64 rng(13);
  for (const auto& spec : corpus()) {
    const int d = spec.dimension();
    std::vector<MPoly> vars;
    std::map<std::string, Rational> values;
    auto coords = random_coords(rng, d);
    for (int i = 0; i < d; ++i) {
      std::string name = "z" + std::to_string(i);
      vars.push_back(MPoly::var(name));
      values[name] = coords[static_cast<std::size_t>(i)];
    }
    values["a"] = spec.a;
    values["b"] = spec.b;
    auto sym = symbolic_trace_norm(spec, MPoly::var("a"), MPoly::var("b"), vars);
    auto num = reduced_trace_norm(Algebra::create(spec)->element(coords));
    CHECK(sym.trd.eval(values) == num.trd);
    CHECK(sym.nrd.eval(values) == num.nrd);
  }
}

TEST_CASE("character tables") {
  // Conductors 7 and 9: the kernel is the subgroup of cubes.
  for (uint64_t n : {7u, 9u}) {
    CyclicFieldSpec m = cyclic_cubic(n);
    CHECK_NOTHROW(validate(m));
    uint64_t g = n == 7 ? 3 : 2;  // primitive roots
    uint64_t x = 1;
    for (int k = 0; k < 6; ++k, x = x * g % n) CHECK((m.character_table[x] == 0) == (k % 3 == 0));
    CHECK(m.character_table[n - 1] == 0);
  }
  for (long d : {2L, 5L, 13L, 17L, 29L}) {
    CyclicFieldSpec m = quadratic_field(d);
    CHECK_NOTHROW(validate(m));
    CHECK(m.character_table == derive_character_table(m.defining_poly, m.sigma, 2, m.conductor));
    for (uint64_t p : primes_up_to(1000)) {
      if (p == 2 || static_cast<long>(p) == d) continue;
      bool root = false;
      for (uint64_t r = 0; r < p && !root; ++r) root = (r * r) % p == static_cast<uint64_t>(d) % p;
      CHECK((m.chi(Integer(static_cast<unsigned long>(p))) == 0) == root);
    }
  }
  CHECK(quadratic_field(2).conductor == 8);
  CHECK(quadratic_field(5).conductor == 5);
  CHECK_THROWS_AS(validate(quadratic_field(-1)), SpecMismatch);
  CHECK_NOTHROW(validate(quadratic_field(-1), false));
  CyclicFieldSpec bad = quadratic_field(5);
  bad.character_table[2] = 0;
  CHECK_THROWS_AS(validate(bad), SpecMismatch);
}
