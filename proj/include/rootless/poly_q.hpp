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

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rootless/ntheory.hpp"

namespace rootless {

/// Univariate polynomial over Q, coefficients stored low degree first and
/// kept trimmed (the zero polynomial has no coefficients).
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  PolyQ(std::initializer_list<Rational> coeffs);
  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, int degree);
  /// Accepts e.g. "X^3+X^2-2*X-1", "x^2 - 7", "-3/2X + 1".
  static PolyQ parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of X^i (zero outside the stored range).
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  PolyQ derivative() const;
  PolyQ monic() const;
  /// f(g(X)).
  PolyQ compose(const PolyQ& g) const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator-(PolyQ a) { return a *= Rational(-1); }
  bool operator==(const PolyQ& o) const { return coeffs_ == o.coeffs_; }
  /// Lexicographic order on (degree, coefficients from low degree up).
  bool operator<(const PolyQ& o) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
/// Monic gcd (zero if both are zero).
PolyQ gcd(PolyQ a, PolyQ b);
Rational discriminant(const PolyQ& f);

}  // namespace rootless
