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

// Local splitting of central simple algebras: Hilbert symbols, ramification
// sets, membership in the semilocal sets T(A/L), bounded searches for
// norm-one elements, and global polynomials with prescribed local behaviour.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootless/csa.hpp"
#include "rootless/qpoly.hpp"

namespace rootless {

/// (a, b)_v: 1 iff the quaternion algebra (a, b) splits at v.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

struct DeltaSet {
  std::vector<Place> places;  // sorted, finite primes first
  bool contains(const Place& v) const;
  std::string to_string() const;
};

/// L = Q[X]/(f) for a monic irreducible f; degree one means L = Q.
struct ExtensionSpec {
  PolyQ defining_poly;
  int degree() const { return defining_poly.degree(); }
  static ExtensionSpec rational();
  /// Validates monic irreducibility (resolvent path up to degree four, a
  /// mod-p witness beyond).
  static ExtensionSpec from_poly(const PolyQ& f);
  std::string to_string() const;
};

/// Primes p dividing disc(f) or a denominator of f.
bool ramified_in(const ExtensionSpec& L, uint64_t p);

struct LocalSplitReport {
  Place place = Place::infinite();
  std::vector<int> local_degrees;  // one per place of L above p
  std::vector<bool> splits;        // parallel to local_degrees
  bool splits_over_q = true;       // A itself at p
  bool all_split() const;
};

/// Full ramification set of a quaternion algebra over Q.
DeltaSet ramified_places(const AlgebraSpec& quaternion);

/// Splitting of A (x) L at every place of L above p. Quaternion algebras are
/// answered at every prime; cyclic algebras only where p is unramified in M.
/// RamifiedQuery when p is ramified in M or in L.
LocalSplitReport local_split(const AlgebraSpec& A, const ExtensionSpec& L, uint64_t p);

/// Whether A splits at the real place of Q.
bool splits_at_infinity(const AlgebraSpec& A);

struct TMembership {
  bool member = false;
  /// A fails to split at the real place, so the semilocal description is
  /// used outside its hypotheses.
  bool real_ramified = false;
  std::vector<LocalSplitReport> trace;  // one per prime in the support of x
  std::string to_string() const;
};

/// True iff A (x) L splits at every place above every prime where x is not
/// a unit, i.e. x and 1/x both lie in T(A (x) L / L).
TMembership t_membership(const AlgebraSpec& A, const ExtensionSpec& L, const Rational& x);
/// x in T(A (x) L / L): A splits at every place above primes where x has
/// negative valuation.
TMembership in_T(const AlgebraSpec& A, const ExtensionSpec& L, const Rational& x);

/// An element of the quaternion algebra A with reduced norm 1 and reduced
/// trace target. x1, x2 range over n/d with |n| <= height, 1 <= d <= height;
/// x3 is solved exactly. nullopt is inconclusive.
std::optional<AlgebraElement> s_witness_search(const AlgebraSpec& A, const Rational& target,
                                               long height);

/// b = residue (mod p^precision).
struct LocalConstraint {
  uint64_t p = 2;
  Integer residue;
  unsigned precision = 1;
};

/// Degree l = 2: X^2 - aX + 1. Degree l = 3: X^3 - aX^2 + bX - 1 with b
/// in the residue classes of the constraints, without roots in Q_p at each
/// constrained p and irreducible over Q; the candidate b of least absolute
/// value (non-negative first) is returned.
PolyQ find_global_polynomial(int l, const Rational& a, const std::vector<LocalConstraint>& constraints,
                             long search_limit = 100000);

}  // namespace rootless
