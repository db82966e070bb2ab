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

// Class field data over Q: a compositum M of cyclic fields M_1..M_k of prime
// degree l given by their characters, the Artin map on ideals coprime to the
// modulus, l-good primes of an extension L, admissibility, and the elements
// a with (a) outside the kernel H used by the criterion.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootless/csa.hpp"
#include "rootless/local_global.hpp"

namespace rootless {

/// Component j is the exponent of sigma_j in the Frobenius, in Z/l.
using ArtinClass = std::vector<int>;

struct CftConfig {
  int l = 2;
  int n = 2;
  std::vector<CyclicFieldSpec> fields;
  uint64_t modulus = 1;  // lcm of the conductors

  int k() const noexcept { return static_cast<int>(fields.size()); }
  /// Distinct primes dividing the modulus.
  std::vector<uint64_t> modulus_primes() const;
  std::string to_string() const;
};

/// (l, n) in {(2, 2), (2, 4), (3, 3)}; UnsupportedConfig otherwise.
CftConfig default_config(int l, int n);

/// Checks every field, l^k > n!, joint surjectivity of the characters onto
/// (Z/l)^k and the modulus. Throws SpecMismatch.
void validate(const CftConfig& cfg);

/// Reads key=value lines (l, n, field.N.poly, field.N.sigma,
/// field.N.conductor and optionally field.N.chi); '#' starts a comment.
CftConfig parse_config(const std::string& text);
CftConfig load_config(const std::string& path);

/// Sum over p of v_p(x) chi(p); nullopt when a prime of the modulus divides x.
std::optional<ArtinClass> artin_class(const CftConfig& cfg, const Rational& x);
/// (x) lies in I_m.
bool in_Im(const CftConfig& cfg, const Rational& x);
/// (x) lies in the kernel H of the Artin map; false outside I_m.
bool in_H(const CftConfig& cfg, const Rational& x);

struct GoodPrimeReport {
  ExtensionSpec L;
  int l = 2;
  uint64_t bound = 0;
  std::vector<uint64_t> good_primes;
  uint64_t scanned = 0;      // primes up to bound unramified in L
  Rational sampled_density;  // |good| / scanned
  double threshold = 0;      // 1/n! - 2/sqrt(scanned)
  bool admissible = false;
  std::string to_string() const;
};

/// Scans primes p <= bound unramified in L and keeps those whose residue
/// degrees in L are all divisible by l. Admissible when some good prime exists
/// and the sampled density reaches the threshold. bound >= 100.
GoodPrimeReport good_primes(const ExtensionSpec& L, int l, uint64_t bound);

/// Least prime l | n admissible at bound, retrying once at 4 * bound.
/// NoAdmissibleFound otherwise.
int select_admissible(const ExtensionSpec& L, int n, uint64_t bound = 2000);

/// a = p / p' for the lexicographically least pair p < p' of P with distinct
/// Artin classes. InvalidInput when P is empty or meets the modulus,
/// AllSameClass when no such pair exists.
Rational find_witness_a(const CftConfig& cfg, std::vector<uint64_t> P);

/// The least prime in each nonzero Artin class, keyed by class.
std::map<ArtinClass, uint64_t> class_representatives(const CftConfig& cfg);

/// Residues r mod the conductor of m with chi(r) = 0.
std::vector<uint64_t> kernel_residues(const CyclicFieldSpec& m);

}  // namespace rootless
