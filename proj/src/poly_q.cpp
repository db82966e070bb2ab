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

#include "rootless/poly_q.hpp"

#include <cctype>

#include "rootless/errors.hpp"

namespace rootless {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ::PolyQ(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

PolyQ PolyQ::constant(const Rational& c) { return PolyQ({c}); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& PolyQ::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return PolyQ(std::move(v));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  PolyQ r = *this;
  Rational inv = 1 / leading();
  return r *= inv;
}

PolyQ PolyQ::compose(const PolyQ& g) const {
  PolyQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= g;
    acc += constant(*it);
  }
  return acc;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(v);
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool PolyQ::operator<(const PolyQ& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

std::string PolyQ::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "X";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

PolyQ PolyQ::parse(std::string_view text) {
  std::string s;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s.push_back(text[i]);
      origin.push_back(i);
    }
  }
  auto where = [&](std::size_t i) { return i < origin.size() ? origin[i] : text.size(); };
  if (s.empty()) throw ParseError("empty polynomial", 0);
  PolyQ result;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-'", where(i));
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coef = 1;
    bool has_coef = i > start;
    if (has_coef) coef = parse_rational(s.substr(start, i - start));
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) throw ParseError("'*' without coefficient", where(i));
      ++i;
      if (i >= s.size() || (s[i] != 'X' && s[i] != 'x'))
        throw ParseError("expected X after '*'", where(i));
    }
    int deg = 0;
    if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (es == i) throw ParseError("expected exponent", where(i));
        deg = std::stoi(s.substr(es, i - es));
      }
    } else if (!has_coef) {
      throw ParseError("expected term", where(i));
    }
    result += monomial(coef * sign, deg);
  }
  return result;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {PolyQ(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational discriminant(const PolyQ& f) {
  // Resultant of f and f' via the Euclidean remainder sequence.
  int n = f.degree();
  if (n < 1) throw InvalidInput("discriminant of constant polynomial");
  if (n == 1) return 1;
  PolyQ a = f, b = f.derivative();
  Rational res = 1;
  while (true) {
    int da = a.degree(), db = b.degree();
    if (b.is_zero()) return 0;
    if (db == 0) {
      Rational lb = b.leading();
      for (int i = 0; i < da; ++i) res *= lb;
      break;
    }
    PolyQ r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    int dr = r.degree();
    // res(a, b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
    if ((da * db) % 2 == 1) res = -res;
    Rational lb = b.leading();
    for (int i = 0; i < da - dr; ++i) res *= lb;
    a = std::move(b);
    b = std::move(r);
  }
  // disc = (-1)^(n(n-1)/2) res(f, f') / lc(f)
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res / f.leading();
}

}  // namespace rootless
