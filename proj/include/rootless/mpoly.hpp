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

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rootless/ntheory.hpp"

namespace rootless {

/// Multivariate polynomial over Q in named variables.
class MPoly {
 public:
  /// Sorted by variable name, exponents positive.
  using Monomial = std::vector<std::pair<std::string, int>>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT
  static MPoly var(const std::string& name);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term.
  Rational constant() const;
  int total_degree() const;
  std::set<std::string> variables() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a) { return MPoly() - a; }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  /// Throws InvalidInput when a variable is unassigned.
  Rational eval(const std::map<std::string, Rational>& values) const;
  /// Replaces the listed variables; others are kept.
  MPoly substitute(const std::map<std::string, MPoly>& values) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

}  // namespace rootless
