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

#include "rootless/ff.hpp"

#include <algorithm>
#include <numeric>

#include "rootless/errors.hpp"

namespace rootless {

namespace {

constexpr uint64_t kMaxOrder = uint64_t{1} << 62;

// p^k, or nullopt when it would exceed kMaxOrder.
std::optional<uint64_t> checked_pow(uint64_t p, int k) {
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > kMaxOrder / p) return std::nullopt;
    r *= p;
  }
  return r;
}

}  // namespace

FqField::FqField(uint64_t p, PolyFp defining) : p_(p), def_(std::move(defining)) {
  if (!is_prime(p) || p >= (uint64_t{1} << 31))
    throw InvalidInput("FqField: characteristic must be a prime below 2^31");
  if (def_.modulus() != p) throw InvalidInput("FqField: defining polynomial over wrong field");
  if (def_.degree() < 1 || def_.coeffs().back() != 1 || !is_irreducible(def_))
    throw InvalidInput("FqField: defining polynomial must be monic irreducible");
  e_ = def_.degree();
  auto q = checked_pow(p, e_);
  if (!q) throw SizeLimitExceeded("FqField: order not representable");
  q_ = *q;
}

FqField FqField::make(uint64_t p, int e) {
  if (e < 1) throw InvalidInput("FqField: degree must be positive");
  if (!is_prime(p)) throw InvalidInput("FqField: characteristic must be prime");
  auto count = checked_pow(p, e);
  if (!count) throw SizeLimitExceeded("FqField: order not representable");
  for (uint64_t code = 0; code < *count; ++code) {
    std::vector<uint64_t> c(static_cast<std::size_t>(e) + 1, 0);
    uint64_t t = code;
    for (int i = 0; i < e; ++i) {
      c[static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
    c.back() = 1;
    PolyFp f(p, std::move(c));
    if (is_irreducible(f)) return FqField(p, f);
  }
  throw SearchExhausted("FqField: no irreducible polynomial found");
}

FqField FqField::of_order(uint64_t q) {
  if (q < 2) throw InvalidInput("FqField: order must be a prime power");
  auto ps = prime_factors(q);
  if (ps.size() != 1) throw InvalidInput("FqField: " + std::to_string(q) + " is not a prime power");
  int e = 0;
  for (uint64_t t = q; t > 1; t /= ps[0]) ++e;
  return make(ps[0], e);
}

FqElement FqField::from_int(long long c) const {
  FqElement r = zero();
  long long m = c % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  r[0] = static_cast<uint64_t>(m);
  return r;
}

FqElement FqField::add(const FqElement& a, const FqElement& b) const {
  FqElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

FqElement FqField::sub(const FqElement& a, const FqElement& b) const {
  FqElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

FqElement FqField::neg(const FqElement& a) const { return sub(zero(), a); }

FqElement FqField::mul(const FqElement& a, const FqElement& b) const {
  const std::size_t e = static_cast<std::size_t>(e_);
  std::vector<uint64_t> prod(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  }
  const auto& m = def_.coeffs();
  for (std::size_t k = prod.size(); k-- > e;) {
    uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < e; ++j) prod[k - e + j] = (prod[k - e + j] + (p_ - c) * m[j]) % p_;
    prod[k] = 0;
  }
  prod.resize(e);
  return prod;
}

FqElement FqField::pow(const FqElement& a, const Integer& k) const {
  if (k < 0) return pow(inv(a), -k);
  FqElement r = one();
  std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(k.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FqElement FqField::inv(const FqElement& a) const {
  if (is_zero(a)) throw InvalidInput("FqField: inverse of zero");
  return pow(a, Integer(static_cast<unsigned long>(q_ - 2)));
}

bool FqField::is_zero(const FqElement& a) const {
  return std::all_of(a.begin(), a.end(), [](uint64_t c) { return c == 0; });
}

uint64_t FqField::encode(const FqElement& a) const {
  uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p_ + a[i];
  return code;
}

FqElement FqField::decode(uint64_t code) const {
  FqElement r = zero();
  for (auto& c : r) {
    c = code % p_;
    code /= p_;
  }
  return r;
}

FqElement FqField::primitive_element() const {
  Integer n = static_cast<unsigned long>(q_ - 1);
  std::vector<Integer> cofactors;
  for (const auto& pp : factor_integer(n).factors) cofactors.push_back(n / pp.prime);
  for (uint64_t code = 1; code < q_; ++code) {
    FqElement a = decode(code);
    bool ok = true;
    for (const auto& c : cofactors) {
      if (pow(a, c) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
  throw SearchExhausted("FqField: no primitive element");
}

std::string FqField::to_string(const FqElement& a) const {
  std::string out;
  for (int i = e_ - 1; i >= 0; --i) {
    uint64_t c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i > 0 && c != 1) out += "*";
    if (i > 0) out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FqExtension::FqExtension(FqField base, int l) : base_(std::move(base)), big_(base_), l_(l) {
  if (l < 1) throw InvalidInput("make_extension: degree must be positive");
  const uint64_t p = base_.characteristic();
  const int e = base_.degree();
  if (!checked_pow(p, e * l)) throw SizeLimitExceeded("make_extension: q^l not representable");
  big_ = FqField::make(p, e * l);
  const std::size_t D = static_cast<std::size_t>(e * l);
  const uint64_t q = base_.order();

  Integer qq = static_cast<unsigned long>(q);
  Integer big_order = static_cast<unsigned long>(big_.order());
  nexp_ = (big_order - 1) / (qq - 1);
  gen_ = big_.primitive_element();

  // Least root of the base defining polynomial inside F_{q^l}.
  const auto& bd = base_.defining_poly().coeffs();
  auto eval_def = [&](const FqElement& z) {
    FqElement acc = big_.zero();
    for (std::size_t i = bd.size(); i-- > 0;) acc = big_.add(big_.mul(acc, z), big_.from_int(static_cast<long long>(bd[i])));
    return acc;
  };
  if (e == 1) {
    root_ = big_.from_int(static_cast<long long>((p - bd[0]) % p));
  } else {
    FqElement z = big_.pow(gen_, nexp_);
    FqElement cur = big_.one();
    std::optional<uint64_t> best;
    for (uint64_t k = 0; k + 1 < q; ++k) {
      if (big_.is_zero(eval_def(cur))) {
        uint64_t code = big_.encode(cur);
        if (!best || code < *best) best = code;
      }
      cur = big_.mul(cur, z);
    }
    if (!best) throw SearchExhausted("make_extension: base polynomial has no root");
    root_ = big_.decode(*best);
  }

  embed_.assign(D, std::vector<uint64_t>(static_cast<std::size_t>(e), 0));
  {
    FqElement pw = big_.one();
    for (int j = 0; j < e; ++j) {
      for (std::size_t i = 0; i < D; ++i) embed_[i][static_cast<std::size_t>(j)] = pw[i];
      pw = big_.mul(pw, root_);
    }
  }

  // Row-reduce [embed_ | I] so that restrict_ * embed_ = [I_e; 0].
  {
    Matrix aug(D, std::vector<uint64_t>(static_cast<std::size_t>(e) + D, 0));
    for (std::size_t i = 0; i < D; ++i) {
      for (std::size_t j = 0; j < static_cast<std::size_t>(e); ++j) aug[i][j] = embed_[i][j];
      aug[i][static_cast<std::size_t>(e) + i] = 1;
    }
    for (std::size_t col = 0; col < static_cast<std::size_t>(e); ++col) {
      std::size_t piv = col;
      while (piv < D && aug[piv][col] == 0) ++piv;
      if (piv == D) throw SpecMismatch("make_extension: embedding is not injective");
      std::swap(aug[piv], aug[col]);
      uint64_t inv = invmod(aug[col][col], p);
      for (auto& v : aug[col]) v = v * inv % p;
      for (std::size_t r = 0; r < D; ++r) {
        if (r == col || aug[r][col] == 0) continue;
        uint64_t f = aug[r][col];
        for (std::size_t c = 0; c < aug[r].size(); ++c) aug[r][c] = (aug[r][c] + (p - f) * aug[col][c]) % p;
      }
    }
    restrict_.assign(D, std::vector<uint64_t>(D, 0));
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) restrict_[i][j] = aug[i][static_cast<std::size_t>(e) + j];
  }

  frob_.assign(D, std::vector<uint64_t>(D, 0));
  for (std::size_t j = 0; j < D; ++j) {
    FqElement basis = big_.zero();
    basis[j] = 1;
    FqElement img = big_.pow(basis, qq);
    for (std::size_t i = 0; i < D; ++i) frob_[i][j] = img[i];
  }

  // Trace = I + F + ... + F^(l-1), then restricted to base coordinates.
  Matrix tr(D, std::vector<uint64_t>(D, 0));
  Matrix pw(D, std::vector<uint64_t>(D, 0));
  for (std::size_t i = 0; i < D; ++i) pw[i][i] = 1;
  for (int k = 0; k < l; ++k) {
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) tr[i][j] = (tr[i][j] + pw[i][j]) % p;
    Matrix next(D, std::vector<uint64_t>(D, 0));
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t m = 0; m < D; ++m) {
        if (frob_[i][m] == 0) continue;
        for (std::size_t j = 0; j < D; ++j) next[i][j] = (next[i][j] + frob_[i][m] * pw[m][j]) % p;
      }
    pw = std::move(next);
  }
  trace_base_.assign(static_cast<std::size_t>(e), std::vector<uint64_t>(D, 0));
  for (std::size_t i = 0; i < static_cast<std::size_t>(e); ++i)
    for (std::size_t m = 0; m < D; ++m) {
      if (restrict_[i][m] == 0) continue;
      for (std::size_t j = 0; j < D; ++j)
        trace_base_[i][j] = (trace_base_[i][j] + restrict_[i][m] * tr[m][j]) % p;
    }
}

FqElement FqExtension::embed(const FqElement& b) const {
  FqElement r = big_.zero();
  const uint64_t p = big_.characteristic();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i] = (r[i] + embed_[i][j] * b[j]) % p;
  return r;
}

std::optional<FqElement> FqExtension::restrict_to_base(const FqElement& x) const {
  FqElement y = apply(restrict_, x);
  const std::size_t e = static_cast<std::size_t>(base_.degree());
  for (std::size_t i = e; i < y.size(); ++i)
    if (y[i] != 0) return std::nullopt;
  y.resize(e);
  return y;
}

FqElement FqExtension::frobenius(const FqElement& x) const { return apply(frob_, x); }

FqExtension::Matrix FqExtension::multiplication_matrix(const FqElement& h) const {
  const std::size_t D = h.size();
  Matrix m(D, std::vector<uint64_t>(D, 0));
  for (std::size_t j = 0; j < D; ++j) {
    FqElement basis = big_.zero();
    basis[j] = 1;
    FqElement img = big_.mul(h, basis);
    for (std::size_t i = 0; i < D; ++i) m[i][j] = img[i];
  }
  return m;
}

FqElement FqExtension::apply(const Matrix& m, const FqElement& x) const {
  const uint64_t p = big_.characteristic();
  FqElement y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    uint64_t acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc = (acc + m[i][j] * x[j]) % p;
    y[i] = acc;
  }
  return y;
}

FqExtension make_extension(const FqField& base, int l) {
  if (!is_prime(static_cast<uint64_t>(std::max(l, 0))))
    throw InvalidInput("make_extension: degree must be prime");
  return FqExtension(base, l);
}

TraceNorm trace_and_norm(const FqExtension& ext, const FqElement& x) {
  const FqField& big = ext.field();
  if (x.size() != static_cast<std::size_t>(big.degree()))
    throw InvalidInput("trace_and_norm: element does not belong to the extension");
  FqElement tr = big.zero(), conj = x;
  for (int i = 0; i < ext.l(); ++i) {
    tr = big.add(tr, conj);
    conj = ext.frobenius(conj);
  }
  FqElement nm = big.pow(x, ext.norm_exponent());
  auto t = ext.restrict_to_base(tr);
  auto n = ext.restrict_to_base(nm);
  if (!t || !n) throw SpecMismatch("trace_and_norm: result outside the base field");
  return {*t, *n};
}

bool TraceSet::contains(uint64_t code) const {
  return std::binary_search(elements.begin(), elements.end(), code);
}

TraceSet compute_U(const FqExtension& ext, uint64_t size_cap) {
  const FqField& base = ext.base();
  const FqField& big = ext.field();
  const uint64_t p = big.characteristic();
  const uint64_t q = base.order();
  if (ext.norm_exponent() > Integer(static_cast<unsigned long>(size_cap)))
    throw SizeLimitExceeded("compute_U: " + ext.norm_exponent().get_str() +
                            " norm-one elements exceed the cap");
  const uint64_t N = ext.norm_exponent().get_ui();
  // The norm-one group is generated by g^(q-1); its elements inside F_q form
  // the subgroup of order gcd(N, q-1).
  FqElement h = big.pow(ext.generator(), Integer(static_cast<unsigned long>(q - 1)));
  const uint64_t period = N / std::gcd(N, q - 1);

  const std::size_t D = static_cast<std::size_t>(big.degree());
  const std::size_t e = static_cast<std::size_t>(base.degree());
  std::vector<uint64_t> mh(D * D), tb(e * D);
  {
    auto m = ext.multiplication_matrix(h);
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) mh[i * D + j] = m[i][j];
    const auto& t = ext.trace_to_base_matrix();
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < D; ++j) tb[i * D + j] = t[i][j];
  }
  std::vector<uint64_t> x(D, 0), y(D, 0);
  x[0] = 1;
  std::vector<char> seen(q, 0);
  uint64_t count = 0;
  for (uint64_t k = 0; k < N && count < q; ++k) {
    if (k % period != 0) {
      uint64_t code = 0;
      for (std::size_t i = e; i-- > 0;) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < D; ++j) acc += tb[i * D + j] * x[j] % p;
        code = code * p + acc % p;
      }
      if (!seen[code]) {
        seen[code] = 1;
        ++count;
      }
    }
    for (std::size_t i = 0; i < D; ++i) {
      uint64_t acc = 0;
      for (std::size_t j = 0; j < D; ++j) acc = (acc + mh[i * D + j] * x[j]) % p;
      y[i] = acc;
    }
    std::swap(x, y);
  }
  TraceSet out{base, ext.l(), {}};
  for (uint64_t c = 0; c < q; ++c)
    if (seen[c]) out.elements.push_back(c);
  return out;
}

TraceSet compute_U(const FqField& base, int l, uint64_t size_cap) {
  return compute_U(make_extension(base, l), size_cap);
}

DifferenceReport check_difference_property(const TraceSet& u, bool augment_with_pm2) {
  const FqField& f = u.field;
  std::vector<uint64_t> left = u.elements;
  if (augment_with_pm2) {
    left.push_back(f.encode(f.from_int(2)));
    left.push_back(f.encode(f.from_int(-2)));
  }
  std::vector<char> hit(f.order(), 0);
  for (uint64_t a : left) {
    FqElement x = f.decode(a);
    for (uint64_t b : u.elements) hit[f.encode(f.sub(x, f.decode(b)))] = 1;
  }
  DifferenceReport out;
  for (uint64_t c = 0; c < f.order(); ++c)
    if (!hit[c]) out.missing.push_back(c);
  out.holds = out.missing.empty();
  return out;
}

TableField::TableField(const FqField& f) : f_(f), q_(static_cast<uint32_t>(f.order())) {
  if (f.order() > kTableFieldMax) throw SizeLimitExceeded("TableField: field too large for tables");
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  std::vector<FqElement> el;
  for (uint32_t a = 0; a < q_; ++a) el.push_back(f.decode(a));
  for (uint32_t a = 0; a < q_; ++a) {
    neg_[a] = static_cast<uint32_t>(f.encode(f.neg(el[a])));
    for (uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<uint32_t>(f.encode(f.add(el[a], el[b])));
      uint32_t m = static_cast<uint32_t>(f.encode(f.mul(el[a], el[b])));
      mul_[a * q_ + b] = m;
      if (m == 1) inv_[a] = b;
    }
  }
}

uint32_t TableField::inv(uint32_t a) const {
  if (a == 0) throw InvalidInput("TableField: inverse of zero");
  return inv_[a];
}

std::string FqPoly::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    uint32_t c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c != 1) out += "[" + std::to_string(c) + "]";
    if (i > 0 && c != 1) out += "*";
    if (i > 0) out += "X";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

using Coeffs = std::vector<uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m for monic m.
Coeffs poly_mod(const TableField& f, Coeffs a, const Coeffs& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  uint32_t lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    uint32_t c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
    trim(a);
  }
  return a;
}

Coeffs poly_mul(const TableField& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

Coeffs poly_sub(const TableField& f, Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

Coeffs poly_gcd(const TableField& f, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    uint32_t inv = f.inv(b.back());
    for (auto& c : b) c = f.mul(c, inv);
    Coeffs r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// a^q mod m.
Coeffs pow_q(const TableField& f, const Coeffs& a, const Coeffs& m) {
  uint64_t e = f.order();
  Coeffs result{1}, base = a;
  while (e > 0) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), m);
    e >>= 1;
    if (e) base = poly_mod(f, poly_mul(f, base, base), m);
  }
  return result;
}

}  // namespace

bool is_irreducible(const TableField& f, const FqPoly& poly) {
  int n = poly.degree();
  if (n < 1 || poly.coeffs.back() != 1) return false;
  if (n == 1) return true;
  const Coeffs& m = poly.coeffs;
  Coeffs x{0, 1};
  std::vector<Coeffs> h(static_cast<std::size_t>(n) + 1);
  h[0] = x;
  for (int k = 1; k <= n; ++k) h[static_cast<std::size_t>(k)] = pow_q(f, h[static_cast<std::size_t>(k - 1)], m);
  if (h[static_cast<std::size_t>(n)] != x) return false;
  for (uint64_t r : prime_factors(static_cast<uint64_t>(n))) {
    Coeffs g = poly_gcd(f, m, poly_sub(f, h[static_cast<std::size_t>(n / static_cast<int>(r))], x));
    if (g.size() != 1) return false;
  }
  return true;
}

std::optional<FqPoly> find_irreducible_prescribed(const TableField& f, int n, uint32_t a0,
                                                  uint32_t a_top, uint64_t budget) {
  if (n < 1) throw InvalidInput("find_irreducible_prescribed: degree must be positive");
  if (a0 == 0) throw InvalidInput("find_irreducible_prescribed: constant coefficient must be nonzero");
  const uint64_t q = f.order();
  if (a0 >= q || a_top >= q) throw InvalidInput("find_irreducible_prescribed: coefficient out of range");
  if (n == 1) {
    if (a0 != a_top) return std::nullopt;
    return FqPoly{{a0, 1}};
  }
  const int free = n - 2;
  uint64_t total = 1;
  for (int i = 0; i < free; ++i) {
    if (total > budget / q) throw BudgetExceeded("find_irreducible_prescribed: scan exceeds budget");
    total *= q;
  }
  FqPoly cand;
  cand.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
  cand.coeffs[0] = a0;
  cand.coeffs[static_cast<std::size_t>(n - 1)] = a_top;
  cand.coeffs[static_cast<std::size_t>(n)] = 1;
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t t = idx;
    for (int i = 1; i <= free; ++i) {
      cand.coeffs[static_cast<std::size_t>(i)] = static_cast<uint32_t>(t % q);
      t /= q;
    }
    if (is_irreducible(f, cand)) return cand;
  }
  return std::nullopt;
}

std::optional<FqPoly> find_irreducible_prescribed(const FqField& base, int n, const FqElement& a0,
                                                  const FqElement& a_top, uint64_t budget) {
  TableField f(base);
  return find_irreducible_prescribed(f, n, static_cast<uint32_t>(base.encode(a0)),
                                     static_cast<uint32_t>(base.encode(a_top)), budget);
}

std::vector<uint64_t> prime_powers(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  for (uint64_t q = std::max<uint64_t>(lo, 2); q <= hi; ++q)
    if (prime_factors(q).size() == 1) out.push_back(q);
  return out;
}

}  // namespace rootless
