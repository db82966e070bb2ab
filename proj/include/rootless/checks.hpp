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

// Batch verifications behind the command line tool and the acceptance run.
// Each returns a deterministic report that fails iff a checked claim fails.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootless/report.hpp"

namespace rootless {

struct CheckOptions {
  uint64_t seed = 0;
  /// Corrupts the computed tables or sets so that the check must fail.
  bool negative_control = false;
};

/// U_l(F_q) = F_q for odd primes l <= lmax and q <= qmax(l); U_2 - U_2 = F_q
/// for 11 < q <= qmax(2) and (U_2 u {2,-2}) - U_2 = F_q for q <= 11; monic
/// irreducibles with prescribed (a0, a_{n-1}) for n = 6, q <= 9, for n = 5,
/// 9 < q <= 25 and for n = 5, a0 = -1, q <= 9, each restricted to q <= qmax.
Report verify_ff(int lmax, uint64_t qmax, const CheckOptions& opt = {});

/// U_3 for q <= 121 and U_5 for q <= 49.
Report check_trace_sets_full(const CheckOptions& opt = {});
/// Difference sets for 11 < q <= 169 and the augmented sets for q <= 11.
Report check_difference_sets(const CheckOptions& opt = {});
/// Prescribed-coefficient irreducibles for n = 6 and n = 5.
Report check_prescribed_irreducibles(const CheckOptions& opt = {});
/// Product formula for (a, b) over all places, 0 < |a|, |b| <= bound.
Report check_hilbert_reciprocity(long bound = 50, const CheckOptions& opt = {});
/// Multiplicativity, linearity and Cayley-Hamilton for reduced norm and
/// trace on random pairs, and agreement of the two degree-two descriptions.
Report check_norm_trace(int pairs = 200, const CheckOptions& opt = {});
/// Every norm-one witness found for (a, b), 0 < |a|, |b| <= bound, has
/// trace integral at each finite ramified prime.
Report check_local_global_soundness(long bound = 10, long height = 3, const CheckOptions& opt = {});
/// Criterion false over Q (all candidates refuted) and true with audited
/// witnesses over Q(sqrt d), d in {2, 3, 7, -1, -2}, and Q(cbrt 2).
Report check_criterion_separation(uint64_t candidate_bound = 200, const CheckOptions& opt = {});
/// no_root_semantic against the rational root finder.
Report check_oracle_equivalence(int per_degree = 200, const CheckOptions& opt = {});
/// phi_n for n = 2, 3, 4: syntax, text round trip and homomorphism check.
Report check_formula_artifacts(int rooted_per_degree = 50, uint64_t probe_budget = 20,
                               const CheckOptions& opt = {});
/// Kernel densities of the configured characters within 5% of 1/l.
Report check_chebotarev(uint64_t bound = 10000, const CheckOptions& opt = {});

struct NamedCheck {
  std::string name;
  Report (*run)(const CheckOptions&);
};

/// The ten acceptance checks with their default parameters.
const std::vector<NamedCheck>& acceptance_checks();

}  // namespace rootless
