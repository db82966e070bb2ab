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

#include "rootless/poly_fp.hpp"

#include <algorithm>
#include <random>

#include "rootless/errors.hpp"

namespace rootless {

PolyFp::PolyFp(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2 || p >= (uint64_t{1} << 32)) throw InvalidInput("PolyFp: modulus out of range");
  for (auto& x : c_) x %= p_;
  trim();
}

PolyFp PolyFp::x(uint64_t p) { return PolyFp(p, {0, 1}); }
PolyFp PolyFp::constant(uint64_t p, uint64_t c) { return PolyFp(p, {c}); }

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint64_t PolyFp::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

uint64_t PolyFp::eval(uint64_t x) const {
  uint64_t acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
  return acc;
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
  std::vector<uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = (v[i] + o.c_[i]) % p_;
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
  std::vector<uint64_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = (v[i] + p_ - o.c_[i]) % p_;
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
  if (is_zero() || o.is_zero()) return PolyFp(p_, {});
  std::vector<uint64_t> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = (v[i + j] + c_[i] * o.c_[j]) % p_;
  }
  return PolyFp(p_, std::move(v));
}

bool PolyFp::operator<(const PolyFp& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

PolyFp PolyFp::derivative() const {
  if (c_.size() <= 1) return PolyFp(p_, {});
  std::vector<uint64_t> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * (i % p_) % p_;
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  uint64_t inv = invmod(c_.back(), p_);
  std::vector<uint64_t> v(c_);
  for (auto& x : v) x = x * inv % p_;
  return PolyFp(p_, std::move(v));
}

std::string PolyFp::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    uint64_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i > 0 && c != 1) out += "*";
    if (i > 0) out += "X";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  if (b.is_zero()) throw InvalidInput("PolyFp division by zero");
  uint64_t p = a.modulus();
  int db = b.degree();
  if (a.degree() < db) return {PolyFp(p, {}), a};
  std::vector<uint64_t> rem = a.coeffs();
  std::vector<uint64_t> quo(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  uint64_t inv = invmod(b.coeffs().back(), p);
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    uint64_t c = rem[static_cast<std::size_t>(i)] * inv % p;
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - c * bc[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp mod(const PolyFp& a, const PolyFp& m) { return divmod(a, m).second; }

PolyFp gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFp powmod(const PolyFp& base, const Integer& exp, const PolyFp& m) {
  uint64_t p = m.modulus();
  PolyFp result = mod(PolyFp::constant(p, 1), m);
  PolyFp b = mod(base, m);
  std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(result * result, m);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = mod(result * b, m);
  }
  return result;
}

namespace {

Integer pow_int(uint64_t p, int d) {
  Integer r = 1;
  for (int i = 0; i < d; ++i) r *= static_cast<unsigned long>(p);
  return r;
}

}  // namespace

bool is_irreducible(const PolyFp& f) {
  int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  uint64_t p = f.modulus();
  PolyFp g = f.monic();
  PolyFp x = PolyFp::x(p);
  Integer pp = static_cast<unsigned long>(p);
  // h_k = X^(p^k) mod g, computed by repeated p-th powering.
  std::vector<PolyFp> h(static_cast<std::size_t>(n) + 1);
  h[0] = mod(x, g);
  for (int k = 1; k <= n; ++k) h[static_cast<std::size_t>(k)] = powmod(h[static_cast<std::size_t>(k - 1)], pp, g);
  if (!(h[static_cast<std::size_t>(n)] == mod(x, g))) return false;
  for (uint64_t r : prime_factors(static_cast<uint64_t>(n))) {
    PolyFp t = h[static_cast<std::size_t>(n / static_cast<int>(r))] - x;
    if (gcd(g, t).degree() != 0) return false;
  }
  return true;
}

std::vector<std::pair<int, PolyFp>> distinct_degree_factor(const PolyFp& f) {
  uint64_t p = f.modulus();
  std::vector<std::pair<int, PolyFp>> out;
  PolyFp rest = f.monic();
  if (rest.degree() < 1) return out;
  PolyFp x = PolyFp::x(p);
  PolyFp h = mod(x, rest);
  Integer pp = static_cast<unsigned long>(p);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, pp, rest);
    PolyFp g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      rest = divmod(rest, g).first;
      h = mod(h, rest);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.degree(), rest);
  return out;
}

std::vector<PolyFp> equal_degree_factor(const PolyFp& g, int d) {
  uint64_t p = g.modulus();
  int n = g.degree();
  if (n <= d) return {g.monic()};
  std::mt19937_64 rng(0x5eed0000u + static_cast<uint64_t>(n) * 131u + p);
  std::vector<PolyFp> pending{g.monic()};
  std::vector<PolyFp> done;
  while (!pending.empty()) {
    PolyFp cur = pending.back();
    pending.pop_back();
    if (cur.degree() == d) {
      done.push_back(cur);
      continue;
    }
    while (true) {
      std::vector<uint64_t> rc(static_cast<std::size_t>(cur.degree()));
      for (auto& c : rc) c = rng() % p;
      PolyFp a(p, rc);
      if (a.degree() < 1) continue;
      PolyFp b;
      if (p == 2) {
        // Trace map a + a^2 + ... + a^(2^(d-1)).
        PolyFp t = mod(a, cur), sq = t;
        for (int i = 1; i < d; ++i) {
          sq = mod(sq * sq, cur);
          t = t + sq;
        }
        b = t;
      } else {
        Integer e = (pow_int(p, d) - 1) / 2;
        b = powmod(a, e, cur) - PolyFp::constant(p, 1);
      }
      PolyFp s = gcd(cur, b);
      if (s.degree() > 0 && s.degree() < cur.degree()) {
        pending.push_back(s);
        pending.push_back(divmod(cur, s).first.monic());
        break;
      }
    }
  }
  std::sort(done.begin(), done.end());
  return done;
}

}  // namespace rootless
