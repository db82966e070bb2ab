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

#include "rootless/mpoly.hpp"

#include <algorithm>

#include "rootless/errors.hpp"

namespace rootless {

namespace {

MPoly::Monomial multiply(const MPoly::Monomial& a, const MPoly::Monomial& b) {
  MPoly::Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

MPoly MPoly::var(const std::string& name) {
  MPoly p;
  p.terms_[{{name, 1}}] = 1;
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational MPoly::constant() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (const auto& [v, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

std::set<std::string> MPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

Rational MPoly::eval(const std::map<std::string, Rational>& values) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) throw InvalidInput("MPoly::eval: unassigned variable " + v);
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& values) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    MPoly t(c);
    Monomial kept;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    MPoly k;
    k.terms_[kept] = 1;
    out += t * k;
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    bool need_star = false;
    if (mag != 1 || m.empty()) {
      out += mag.get_str();
      need_star = true;
    }
    for (const auto& [v, e] : m) {
      if (need_star) out += "*";
      out += v;
      if (e > 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

}  // namespace rootless
