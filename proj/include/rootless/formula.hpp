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

// Positive existential formulas in the language of rings and of pairs of
// rings: syntax, text format, exact evaluation and a bounded witness probe,
// and builders for the definitions of the local rings O_p, the criterion
// sentence psi_n and the no-root formula phi_n.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rootless/cft.hpp"
#include "rootless/mpoly.hpp"

namespace rootless {

struct Term {
  enum class Kind { Var, Const, Add, Mul };
  Kind kind = Kind::Const;
  std::string name;  // Var
  Rational value;    // Const
  std::vector<Term> args;

  static Term var(std::string name);
  static Term constant(const Rational& c);
  static Term add(std::vector<Term> args);
  static Term mul(std::vector<Term> args);
  static Term from_mpoly(const MPoly& p);
  bool operator==(const Term&) const = default;
};

struct Formula {
  enum class Kind { Eq, And, Or, Exists, InSubring };
  Kind kind = Kind::And;
  Term lhs, rhs;                  // Eq; InSubring uses lhs
  std::vector<std::string> vars;  // Exists
  std::vector<Formula> children;  // And, Or; Exists has one body

  static Formula eq(Term a, Term b);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula exists(std::vector<std::string> vars, Formula body);
  static Formula in_subring(Term t);
  bool operator==(const Formula&) const = default;
};

/// Parenthesized prefix syntax: (eq t t), (and f ...), (or f ...),
/// (exists (x y) f), (in-subring t); terms are names, rationals n/d,
/// (+ t ...) and (* t ...).
std::string serialize(const Term& t);
std::string serialize(const Formula& f);
/// ParseError carries the byte offset of the failure.
Formula parse_formula(const std::string& text);
Term parse_term(const std::string& text);

std::set<std::string> free_variables(const Formula& f);
MPoly to_mpoly(const Term& t);

struct SyntaxReport {
  bool ok = true;
  std::string message;
};

/// Positive existential and well scoped: free variables within `free`, no
/// variable bound twice on a path, nonempty quantifier lists, valid names and
/// (unless allow_subring) no subring predicate.
SyntaxReport check_positive_existential(const Formula& f, const std::set<std::string>& free,
                                        bool allow_subring);

struct FormulaStats {
  uint64_t quantifiers = 0;  // bound variables
  uint64_t disjuncts = 0;    // children of disjunctions
  uint64_t equations = 0;
  uint64_t parameters = 0;   // distinct constants other than 0 and 1
  uint64_t size = 0;         // serialized length
  std::string to_string() const;
};

FormulaStats stats(const Formula& f);

/// Truth of a quantifier-free formula (subring predicate taken over Q) under
/// a full assignment; InvalidInput on quantifiers or unassigned variables.
bool eval_quantifier_free(const Formula& f, const std::map<std::string, Rational>& env);

struct BoundedResult {
  bool sat = false;  // false means unknown, never unsatisfiable
  std::map<std::string, Rational> witness;
  uint64_t nodes = 0;
};

/// Depth-first witness search over Q with |numerator|, denominator <= height,
/// solving equations linear in a single open variable; gives up after
/// node_budget branching steps. The subring predicate is read as Q.
BoundedResult bounded_eval(const Formula& f, const std::map<std::string, Rational>& assignment,
                           long height, uint64_t node_budget = 200000);

struct OpDefinition {
  uint64_t p = 0;
  AlgebraSpec first, second;  // quaternion algebras with Delta meeting in {p}
  DeltaSet first_delta, second_delta;
  Formula formula;  // free variable x
};

/// x in O_p as x in T(A) + T(A') for quaternion algebras A, A' over Q
/// split at the real place with Delta(A) and Delta(A') meeting exactly in p,
/// from a search over |a|, |b| <= search_bound. SearchExhausted otherwise.
OpDefinition build_Op_definition(uint64_t p, long search_bound = 30);

/// The sentence psi_n in the language of pairs of rings, together with the
/// data baked into it.
struct PsiFormula {
  int n = 0;
  std::vector<CftConfig> configs;  // one per prime l | n
  std::vector<std::map<ArtinClass, uint64_t>> representatives;
  std::map<uint64_t, OpDefinition> local_rings;
  Formula formula;
  FormulaStats stats;
};

PsiFormula build_psi(int n);
PsiFormula build_psi(int n, const std::vector<CftConfig>& configs);

/// phi_n(a0, ..., a_{n-1}) in the language of rings: psi_n read in
/// Q[X]/(X^n + a_{n-1} X^{n-1} + ... + a0) through n-tuples, and for n = 4
/// also the branch of two rootless quadratic factors.
struct PhiFormula {
  int n = 0;
  Formula formula;
  FormulaStats stats;
};

PhiFormula build_phi(int n);

/// Names a0, ..., a_{n-1} of the free variables of phi_n.
std::vector<std::string> phi_parameters(int n);

/// Reading of a formula in the pairs language inside the ring language over
/// n-tuples, with quotient arithmetic modulo the generic monic polynomial
/// whose coefficients are the variables `coeffs`.
Formula interpret_in_tuples(const Formula& f, const std::vector<std::string>& coeffs);

struct HomomorphismReport {
  bool ok = true;
  uint64_t equations_checked = 0;
  uint64_t probe_sat = 0;  // bounded witnesses found for phi (each a violation)
  std::string message;
};

/// For each monic f of degree n with rational root r: every equation of psi
/// read in tuples maps, under X -> r, to the same equation over Q at the
/// image point (checked on `samples` random points per equation), and a
/// bounded witness for the tuple reading of psi at f, which would map to a
/// witness over Q, is reported as a violation. probe_budget 0 skips the probe.
HomomorphismReport homomorphism_check(const PsiFormula& psi,
                                      const std::vector<std::pair<PolyQ, Rational>>& rooted,
                                      int samples, uint64_t seed, uint64_t probe_budget = 2000);

}  // namespace rootless
