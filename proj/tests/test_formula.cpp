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
#include "rootless/errors.hpp"
#include "rootless/formula.hpp"
#include "rootless/local_global.hpp"

using namespace rootless;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

class AstGen {
 public:
  explicit AstGen(uint64_t seed) : rng_(seed) {}

  Term term(int depth) {
    int pick = static_cast<int>(rng_() % (depth > 0 ? 4 : 2));
    if (pick == 0) return Term::var(names_[rng_() % names_.size()]);
    if (pick == 1) return Term::constant(q(static_cast<long>(rng_() % 41) - 20, static_cast<long>(rng_() % 7) + 1));
    std::vector<Term> args;
    std::size_t k = 2 + rng_() % 3;
    for (std::size_t i = 0; i < k; ++i) args.push_back(term(depth - 1));
    return pick == 2 ? Term::add(std::move(args)) : Term::mul(std::move(args));
  }

  Formula formula(int depth) {
    int pick = static_cast<int>(rng_() % (depth > 0 ? 5 : 2));
    if (pick == 0) return Formula::eq(term(2), term(2));
    if (pick == 1) return Formula::in_subring(term(1));
    if (pick == 4) {
      std::vector<std::string> vars{names_[rng_() % names_.size()]};
      if (rng_() % 2) vars.push_back(names_[rng_() % names_.size()] + "_b");
      return Formula::exists(std::move(vars), formula(depth - 1));
    }
    std::vector<Formula> parts;
    std::size_t k = rng_() % 4;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(formula(depth - 1));
    return pick == 2 ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> names_{"x", "y", "z1", "a0", "_t", "w_2"};
};

// Drops quantifiers, leaving the body over the same names.
Formula strip(const Formula& f) {
  if (f.kind == Formula::Kind::Exists) return strip(f.children.front());
  Formula out = f;
  for (auto& c : out.children) c = strip(c);
  return out;
}

std::size_t count_blocks(const Formula& f, char prefix, std::size_t size) {
  std::size_t n = 0;
  if (f.kind == Formula::Kind::Exists && !f.vars.empty() && f.vars.front()[0] == prefix) {
    CHECK(f.vars.size() == size);
    ++n;
  }
  for (const auto& c : f.children) n += count_blocks(c, prefix, size);
  return n;
}

}  // namespace

TEST_CASE("formula text format") {
  auto f = Formula::eq(Term::var("x"), Term::constant(1));
  CHECK(serialize(f) == "(eq x 1/1)");
  CHECK(parse_formula("(eq x 1/1)") == f);
  CHECK(parse_formula("  (eq x 1) ") == f);
  CHECK(serialize(parse_formula("(exists (y) (and (eq (* 2 y) 1) (in-subring y)))")) ==
        "(exists (y) (and (eq (* 2/1 y) 1/1) (in-subring y)))");

  try {
    parse_formula("(eq x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  for (const char* bad : {"(eq x 1) x", "(foo x y)", "(eq x 1/0)", "(exists (1x) (eq x 1))", "(eq (- x) 1)"})
    CHECK_THROWS_AS(parse_formula(bad), ParseError);

  AstGen gen(11);
  for (int i = 0; i < 1000; ++i) {
    Formula g = gen.formula(3);
    std::string text = serialize(g);
    Formula back = parse_formula(text);
    REQUIRE_MESSAGE(back == g, text);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("syntax checks and statistics") {
  auto f = parse_formula("(exists (y) (and (eq (* y y) x) (or (eq y 2) (eq y 3))))");
  CHECK(free_variables(f) == std::set<std::string>{"x"});
  CHECK(check_positive_existential(f, {"x"}, false).ok);
  CHECK_FALSE(check_positive_existential(f, {}, false).ok);
  CHECK_FALSE(check_positive_existential(parse_formula("(exists (y) (in-subring y))"), {}, false).ok);
  CHECK(check_positive_existential(parse_formula("(exists (y) (in-subring y))"), {}, true).ok);
  CHECK_FALSE(check_positive_existential(parse_formula("(exists (y) (exists (y) (eq y 1)))"), {}, false).ok);
  auto s = stats(f);
  CHECK(s.quantifiers == 1);
  CHECK(s.disjuncts == 2);
  CHECK(s.equations == 3);
  CHECK(s.parameters == 2);
  CHECK(s.size == serialize(f).size());
}

TEST_CASE("exact and bounded evaluation") {
  auto body = parse_formula("(and (eq (* y y) x) (or (eq y 2) (eq y -2)))");
  CHECK(eval_quantifier_free(body, {{"x", q(4)}, {"y", q(-2)}}));
  CHECK_FALSE(eval_quantifier_free(body, {{"x", q(4)}, {"y", q(3)}}));
  CHECK_THROWS_AS(eval_quantifier_free(body, {{"x", q(4)}}), InvalidInput);

  auto half = bounded_eval(parse_formula("(exists (y) (eq (* 2 y) 1))"), {}, 3);
  CHECK(half.sat);
  CHECK(half.witness.at("y") == q(1, 2));
  auto root2 = bounded_eval(parse_formula("(exists (y) (eq (* y y) 2))"), {}, 6, 5000);
  CHECK_FALSE(root2.sat);

  // Sums of two squares: 5 = 1 + 4 is found, a witness is checked exactly.
  auto two = parse_formula("(exists (u v) (eq (+ (* u u) (* v v)) x))");
  auto r = bounded_eval(two, {{"x", q(5)}}, 3);
  REQUIRE(r.sat);
  r.witness["x"] = q(5);
  CHECK(eval_quantifier_free(strip(two), r.witness));
  CHECK_THROWS_AS(bounded_eval(two, {}, 2), InvalidInput);
}

TEST_CASE("definitions of the local rings") {
  for (uint64_t p : {2u, 5u}) {
    auto d = build_Op_definition(p);
    CHECK(d.p == p);
    for (const auto& A : {d.first, d.second}) {
      CHECK(hilbert_symbol(A.a, A.b, Place::finite(p)) == -1);
      CHECK(hilbert_symbol(A.a, A.b, Place::infinite()) == 1);
    }
    for (const auto& v : d.first_delta.places)
      if (!(v == Place::finite(p))) CHECK_FALSE(d.second_delta.contains(v));
    CHECK(free_variables(d.formula) == std::set<std::string>{"x"});
    CHECK(check_positive_existential(d.formula, {"x"}, false).ok);
    CHECK(d.formula.vars.size() == 16);
    // x = 0 with every element equal to 1.
    std::map<std::string, Rational> env{{"x", q(0)}};
    for (std::size_t i = 0; i < 16; ++i) env[d.formula.vars[i]] = i % 4 == 0 ? q(1) : q(0);
    CHECK(eval_quantifier_free(strip(d.formula), env));
    env["x"] = q(1);
    CHECK_FALSE(eval_quantifier_free(strip(d.formula), env));
  }
  CHECK_THROWS_AS(build_Op_definition(4), InvalidInput);
  CHECK_THROWS_AS(build_Op_definition(101, 5), SearchExhausted);
}

TEST_CASE("psi and phi shapes") {
  auto psi2 = build_psi(2);
  CHECK(free_variables(psi2.formula).empty());
  CHECK(check_positive_existential(psi2.formula, {}, true).ok);
  CHECK_FALSE(check_positive_existential(psi2.formula, {}, false).ok);
  CHECK(psi2.local_rings.size() == 2);
  // Two fields, each with T(c) and T(1/c) built from two elements of dimension 4.
  CHECK(count_blocks(psi2.formula, 'z', 8) == 4);

  auto psi3 = build_psi(3);
  CHECK(count_blocks(psi3.formula, 'z', 9) == 4);
  CHECK(psi3.representatives.front().size() == 8);

  auto phi2 = build_phi(2);
  auto phi4 = build_phi(4);
  auto params = phi_parameters(4);
  CHECK(params == std::vector<std::string>{"a0", "a1", "a2", "a3"});
  CHECK(free_variables(phi2.formula) == std::set<std::string>{"a0", "a1"});
  CHECK(free_variables(phi4.formula) == std::set<std::string>(params.begin(), params.end()));
  for (const auto* phi : {&phi2, &phi4}) {
    auto p = phi_parameters(phi->n);
    CHECK(check_positive_existential(phi->formula, {p.begin(), p.end()}, false).ok);
    CHECK(parse_formula(serialize(phi->formula)) == phi->formula);
  }
  CHECK(phi4.stats.size > phi2.stats.size);
  CHECK(phi4.stats.quantifiers > phi2.stats.quantifiers);
  CHECK_THROWS_AS(build_phi(5), UnsupportedConfig);
}

TEST_CASE("tuple reading") {
  // In Q[X]/(X^2 + 1), x = X solves x * x = -1.
  auto f = parse_formula("(exists (x) (eq (* x x) -1))");
  auto g = interpret_in_tuples(f, {"a0", "a1"});
  CHECK(free_variables(g) == std::set<std::string>{"a0", "a1"});
  std::map<std::string, Rational> env{{"a0", q(1)}, {"a1", q(0)}, {"x_0", q(0)}, {"x_1", q(1)}};
  CHECK(eval_quantifier_free(strip(g), env));
  env["a0"] = q(2);
  CHECK_FALSE(eval_quantifier_free(strip(g), env));
  // Guarded variables stay scalar: no scalar squares to X.
  auto k = interpret_in_tuples(parse_formula("(exists (c) (and (in-subring c) (eq (* c c) t)))"), {"a0", "a1"});
  CHECK(free_variables(k) == std::set<std::string>{"t_0", "t_1"});
  CHECK(eval_quantifier_free(strip(k), {{"a0", q(1)}, {"a1", q(0)}, {"c", q(3)}, {"t_0", q(9)}, {"t_1", q(0)}}));
  auto never = interpret_in_tuples(parse_formula("(eq 1 2)"), {"a0"});
  CHECK(never.kind == Formula::Kind::Or);
  CHECK(never.children.empty());
}

TEST_CASE("tuple reading is a homomorphism at rational roots") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3}) {
    auto psi = build_psi(n);
    std::vector<std::pair<PolyQ, Rational>> rooted;
    for (int t = 0; t < 4; ++t) {
      Rational r = q(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 2) + 1);
      std::vector<Rational> g;
      for (int i = 0; i < n - 1; ++i) g.push_back(q(static_cast<long>(rng() % 7) - 3));
      g.push_back(1);
      rooted.emplace_back(PolyQ({-r, Rational(1)}) * PolyQ(g), r);
    }
    auto rep = homomorphism_check(psi, rooted, 2, 9, 50);
    CHECK_MESSAGE(rep.ok, rep.message);
    CHECK(rep.equations_checked > 0);
    CHECK(rep.probe_sat == 0);
  }
  auto psi = build_psi(2);
  CHECK_THROWS_AS(homomorphism_check(psi, {{PolyQ::parse("X^2-2"), q(1)}}, 1, 1), InvalidInput);
}
