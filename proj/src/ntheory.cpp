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

#include "rootless/ntheory.hpp"

#include <algorithm>
#include <cctype>

#include "rootless/errors.hpp"

namespace rootless {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&](std::size_t at) -> Rational {
    throw ParseError("malformed rational '" + s + "'", at);
  };
  if (s.empty()) return bad(0);
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return bad(i);
  if (i < s.size()) {
    if (s[i] != '/') return bad(i);
    ++i;
    std::size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != s.size()) return bad(i);
  }
  std::string clean = s[0] == '+' ? s.substr(1) : s;
  Rational r;
  if (r.set_str(clean, 10) != 0) return bad(0);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  Integer n = sqrt(x.get_num());
  Integer d = sqrt(x.get_den());
  return Rational(n, d);
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  Integer r;
  Integer aa(std::to_string(a % m)), mm(std::to_string(m));
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw InvalidInput("invmod: " + std::to_string(a) + " not invertible mod " +
                       std::to_string(m));
  return std::stoull(r.get_str());
}

uint64_t reduce_mod(const Integer& x, uint64_t m) {
  Integer mm(std::to_string(m));
  Integer r = x % mm;
  if (r < 0) r += mm;
  return std::stoull(r.get_str());
}

uint64_t reduce_mod(const Rational& x, uint64_t m) {
  uint64_t num = reduce_mod(x.get_num(), m);
  uint64_t den = reduce_mod(x.get_den(), m);
  return mulmod(num, invmod(den, m), m);
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

int legendre(const Integer& a, uint64_t p) {
  Integer pp(std::to_string(p));
  return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

IntegerFactorization factor_integer(const Integer& n, uint64_t budget) {
  if (n == 0) throw InvalidInput("factor_integer: zero has no factorization");
  IntegerFactorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  Integer rem = abs(n);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(std::to_string(budget)).get_mpz_t());
  const uint64_t limit = root.get_ui();

  auto take = [&](uint64_t d) {
    if (mpz_divisible_ui_p(rem.get_mpz_t(), d) == 0) return;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), d);
      ++e;
    }
    out.factors.push_back({Integer(static_cast<unsigned long>(d)), e});
  };
  auto done = [&] { return rem == 1 || mpz_probab_prime_p(rem.get_mpz_t(), 30) != 0; };
  take(2);
  take(3);
  bool exhausted = false;
  if (!done()) {
    for (uint64_t d = 5;; d += 6) {
      if (mpz_cmp_ui(rem.get_mpz_t(), static_cast<unsigned long>(d * d)) < 0) break;
      if (d > limit) {
        exhausted = true;
        break;
      }
      std::size_t before = out.factors.size();
      take(d);
      take(d + 2);
      if (out.factors.size() != before && done()) break;
    }
  }
  if (rem > 1) {
    if (exhausted && mpz_probab_prime_p(rem.get_mpz_t(), 30) == 0)
      throw BudgetExceeded("factor_integer: cofactor " + rem.get_str() +
                           " beyond trial-division budget");
    out.factors.push_back({rem, 1});
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n, uint64_t budget) {
  auto f = factor_integer(n, budget);
  std::vector<Integer> out{Integer(1)};
  for (const auto& pp : f.factors) {
    std::size_t base = out.size();
    Integer power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace rootless
