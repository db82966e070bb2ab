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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rootless {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d"; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Exact square root when x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);
/// Inverse modulo m; requires gcd(a, m) = 1.
uint64_t invmod(uint64_t a, uint64_t m);
/// Reduces a rational with denominator coprime to m into [0, m).
uint64_t reduce_mod(const Rational& x, uint64_t m);
uint64_t reduce_mod(const Integer& x, uint64_t m);

/// Deterministic for all 64-bit inputs.
bool is_prime(uint64_t n);
std::vector<uint64_t> primes_up_to(uint64_t bound);
/// Legendre symbol (a / p) for an odd prime p.
int legendre(const Integer& a, uint64_t p);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

struct IntegerFactorization {
  int sign = 1;  // sign of n
  std::vector<PrimePower> factors;  // increasing primes
};

/// Default trial-division budget: cofactors up to 2^48 are fully resolved.
inline constexpr uint64_t kDefaultFactorBudget = uint64_t{1} << 48;

/// Trial division up to sqrt(budget). A surviving cofactor is accepted when it
/// is provably prime (below budget, or passes GMP's primality test),
/// otherwise BudgetExceeded is thrown.
IntegerFactorization factor_integer(const Integer& n,
                                    uint64_t budget = kDefaultFactorBudget);

/// Positive divisors of |n| in increasing order.
std::vector<Integer> divisors(const Integer& n,
                              uint64_t budget = kDefaultFactorBudget);

/// Distinct prime factors of a 64-bit number (trial division).
std::vector<uint64_t> prime_factors(uint64_t n);

}  // namespace rootless
