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

// Semantic evaluation of the criterion separating Q from its extensions of
// degree n, and the recursive test for monic polynomials without rational
// roots built on it.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootless/cft.hpp"

namespace rootless {

struct DaggerBounds {
  uint64_t good_prime_bound = 2000;  // l-good primes are scanned up to this
  uint64_t candidate_bound = 200;    // L = Q: primes in candidate supports
  int max_support = 3;               // L = Q: primes per candidate
};

/// Why a candidate a fails for L = Q: (M_index, sigma, a) does not split at p
/// although v_p(a) is nonzero.
struct Refutation {
  Rational a;
  uint64_t p = 0;
  int field_index = 0;
};

struct DaggerVerdict {
  bool holds = false;
  int l = 0;
  std::optional<Rational> witness;
  std::vector<Refutation> refutations;  // L = Q only
  uint64_t candidates = 0;              // L = Q only
  std::vector<Rational> unrefuted;      // L = Q: candidates passing every check
  std::vector<std::string> trace;
  std::string to_string() const;
};

/// For L = Q enumerates a = +-p1^e1...pr^er (r <= max_support, e = +-1, primes up
/// to candidate_bound coprime to the modulus) with (a) outside H and records a
/// refutation for each; holds iff some candidate is not refuted. For deg L > 1
/// chooses a from two l-good primes and audits a and 1/a in every
/// T((M_i, sigma_i, a) (x) L / L). Throws NoAdmissibleFound when l is not
/// admissible at 4 * good_prime_bound.
DaggerVerdict dagger_check(const ExtensionSpec& L, int l, const CftConfig& cfg,
                           const DaggerBounds& bounds = {});

/// Independent audit of a witness: a in I_m \ H and a, 1/a in every
/// T((M_i, sigma_i, a) (x) L / L), with every algebra split at the real place.
bool audit_witness(const ExtensionSpec& L, const CftConfig& cfg, const Rational& a,
                   std::vector<std::string>* trace = nullptr);

/// Disjunction over primes l | n of dagger_check with default_config(l, n).
bool psi_semantic(const ExtensionSpec& L, int n, const DaggerBounds& bounds = {});

/// True iff f has no rational root, decided by factoring f and evaluating the
/// criterion on the field of each irreducible factor of degree n.
bool no_root_semantic(const PolyQ& f, const DaggerBounds& bounds = {});

}  // namespace rootless
