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

// Arithmetic over Q used throughout the library: places and valuations,
// reduction of polynomials modulo primes, rational roots, p-adic root lifting
// and factorization of polynomials of degree at most four.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootless/ntheory.hpp"
#include "rootless/poly_fp.hpp"
#include "rootless/poly_q.hpp"

namespace rootless {

/// A place of Q: a finite prime or the real place.
class Place {
 public:
  static Place finite(uint64_t p);
  static Place infinite() { return Place(0); }

  bool is_infinite() const noexcept { return p_ == 0; }
  uint64_t prime() const;
  std::string to_string() const;

  bool operator==(const Place&) const = default;
  /// Finite places first by prime, the real place last.
  bool operator<(const Place& o) const;

 private:
  explicit Place(uint64_t p) : p_(p) {}
  uint64_t p_;
};

/// Result of valuation(): at a finite place either +infinity (x = 0) or an
/// integer; at the real place the sign of x.
struct Valuation {
  bool is_infinite = false;  // v_p(0)
  long value = 0;            // meaningful at finite places when !is_infinite
  int sign = 0;              // meaningful at the real place
};

Valuation valuation(const Rational& x, const Place& v);
/// p-adic valuation; nullopt encodes +infinity.
std::optional<long> padic_valuation(const Rational& x, uint64_t p);
std::optional<long> padic_valuation(const Integer& x, uint64_t p);

/// Frobenius cycle type of f modulo an unramified prime.
struct CycleType {
  uint64_t p = 0;
  std::vector<int> degrees;  // sorted ascending, sums to deg f
  bool all_divisible_by(int l) const;
  bool operator==(const CycleType&) const = default;
  std::string to_string() const;
};

struct ModPFactorization {
  CycleType cycle_type;
  std::vector<PolyFp> factors;  // monic irreducible, sorted
};

/// Reduction of f modulo p; DenominatorClash when p divides a denominator.
PolyFp reduce_mod_p(const PolyQ& f, uint64_t p);

/// Factorization of monic f modulo p. Throws RamifiedPrime when the reduction
/// is not squarefree and DenominatorClash when p divides a denominator.
ModPFactorization factor_mod_p(const PolyQ& f, uint64_t p);

/// The least prime p <= pmax with f irreducible mod p (p not dividing the
/// discriminant or a denominator), if any.
std::optional<uint64_t> mod_p_irreducibility_witness(const PolyQ& f, uint64_t pmax = 100);

/// All rational roots of nonzero f, sorted and without repetition.
std::vector<Rational> rational_roots(const PolyQ& f,
                                     uint64_t budget = kDefaultFactorBudget);

/// Roots of f in Z_p known to precision p^k.
struct HenselResult {
  uint64_t p = 0;
  unsigned precision = 0;
  Integer modulus;                       // p^precision
  std::vector<Integer> roots;            // simple roots, reduced mod p^precision
  std::vector<uint64_t> undecided;       // residues of non-simple roots mod p
  bool decided() const noexcept { return undecided.empty(); }
};

/// Lifts every simple root of f mod p to Z/p^k by Newton iteration. Residues
/// where f' also vanishes are reported as undecided rather than guessed.
/// f must be monic with p-integral coefficients.
HenselResult hensel_roots_padic(const PolyQ& f, uint64_t p, unsigned k);

/// How a factor returned by factor_quartic_or_less is known to be irreducible.
enum class IrreducibilityCertificate {
  Linear,          // degree one
  NoRationalRoot,  // degree two or three without rational roots
  Resolvent,       // degree four: no rational root and no quadratic split
};

struct QFactor {
  PolyQ poly;  // monic irreducible over Q
  IrreducibilityCertificate certificate;
};

/// Complete factorization over Q of a monic polynomial of degree 1..4 into
/// monic irreducibles (with multiplicity), ordered by degree then
/// coefficients.
std::vector<QFactor> factor_quartic_or_less(const PolyQ& f,
                                            uint64_t budget = kDefaultFactorBudget);

/// Resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) of the
/// monic quartic X^4 + aX^3 + bX^2 + cX + d.
PolyQ resolvent_cubic(const PolyQ& quartic);

}  // namespace rootless
