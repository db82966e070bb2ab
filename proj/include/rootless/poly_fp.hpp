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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rootless/ntheory.hpp"

namespace rootless {

/// Polynomial over the prime field F_p (p < 2^32), low degree first, trimmed.
class PolyFp {
 public:
  PolyFp() = default;
  PolyFp(uint64_t p, std::vector<uint64_t> coeffs);
  static PolyFp x(uint64_t p);
  static PolyFp constant(uint64_t p, uint64_t c);

  uint64_t modulus() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<uint64_t>& coeffs() const noexcept { return c_; }
  uint64_t coeff(int i) const;
  uint64_t eval(uint64_t x) const;

  PolyFp operator+(const PolyFp& o) const;
  PolyFp operator-(const PolyFp& o) const;
  PolyFp operator*(const PolyFp& o) const;
  bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator<(const PolyFp& o) const;

  PolyFp derivative() const;
  PolyFp monic() const;
  std::string to_string() const;

 private:
  void trim();
  uint64_t p_ = 2;
  std::vector<uint64_t> c_;
};

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
PolyFp mod(const PolyFp& a, const PolyFp& m);
PolyFp gcd(PolyFp a, PolyFp b);
/// base^exp mod m.
PolyFp powmod(const PolyFp& base, const Integer& exp, const PolyFp& m);

/// Rabin's test: deg f = n and X^(p^n) = X mod f and
/// gcd(X^(p^(n/r)) - X, f) = 1 for each prime r | n.
bool is_irreducible(const PolyFp& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, PolyFp>> distinct_degree_factor(const PolyFp& f);
/// Splits a product of degree-d irreducibles into its monic factors
/// (Cantor-Zassenhaus with a deterministic pseudo-random stream).
std::vector<PolyFp> equal_degree_factor(const PolyFp& g, int d);

}  // namespace rootless
