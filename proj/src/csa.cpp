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

#include "rootless/csa.hpp"

#include <numeric>

#include "rootless/errors.hpp"
#include "rootless/qpoly.hpp"

namespace rootless {

namespace {

PolyQ reduce(const PolyQ& p, const PolyQ& f) { return divmod(p, f).second; }

// One solution of A x = rhs over Q, if any.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> rhs) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
  return x;
}

// All permutations of 0..n-1 with their signs.
std::vector<std::pair<std::vector<int>, int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    out.emplace_back(p, inv % 2 ? -1 : 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool same_field(const CyclicFieldSpec& x, const CyclicFieldSpec& y) {
  return x.l == y.l && x.defining_poly == y.defining_poly && x.sigma == y.sigma &&
         x.conductor == y.conductor && x.character_table == y.character_table;
}

}  // namespace

int CyclicFieldSpec::chi(const Integer& n) const {
  Integer r;
  Integer c = static_cast<unsigned long>(conductor);
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
  int v = character_table.at(r.get_ui());
  if (v < 0) throw InvalidInput("chi: " + n.get_str() + " is not coprime to the conductor");
  return v;
}

std::string CyclicFieldSpec::to_string() const {
  return "M(" + defining_poly.to_string() + ", sigma=" + sigma.to_string() +
         ", conductor=" + std::to_string(conductor) + ")";
}

CyclicFieldSpec quadratic_field(long d) {
  Integer dd = d;
  if (d == 0 || d == 1) throw InvalidInput("quadratic_field: d must differ from 0 and 1");
  for (const auto& pp : factor_integer(dd).factors)
    if (pp.exponent > 1) throw InvalidInput("quadratic_field: d must be squarefree");
  long m4 = ((d % 4) + 4) % 4;
  long disc = m4 == 1 ? d : 4 * d;
  CyclicFieldSpec m;
  m.l = 2;
  m.defining_poly = PolyQ({Rational(-d), Rational(0), Rational(1)});
  m.sigma = PolyQ({Rational(0), Rational(-1)});
  m.conductor = static_cast<uint64_t>(std::labs(disc));
  m.character_table.assign(m.conductor, -1);
  Integer dz = disc;
  for (uint64_t r = 0; r < m.conductor; ++r) {
    if (std::gcd(r, m.conductor) != 1) continue;
    int k = mpz_kronecker_ui(dz.get_mpz_t(), static_cast<unsigned long>(r));
    m.character_table[r] = k == 1 ? 0 : 1;
  }
  return m;
}

CyclicFieldSpec cyclic_cubic(uint64_t conductor) {
  CyclicFieldSpec m;
  m.l = 3;
  m.conductor = conductor;
  if (conductor == 7) {
    m.defining_poly = PolyQ::parse("X^3+X^2-2X-1");
  } else if (conductor == 9) {
    m.defining_poly = PolyQ::parse("X^3-3X+1");
  } else {
    throw UnsupportedConfig("cyclic_cubic: conductor must be 7 or 9");
  }
  m.sigma = PolyQ::parse("X^2-2");
  m.character_table = derive_character_table(m.defining_poly, m.sigma, 3, conductor);
  return m;
}

PolyQ sigma_power(const CyclicFieldSpec& m, int k) {
  k = ((k % m.l) + m.l) % m.l;
  PolyQ cur = PolyQ::monomial(1, 1);
  for (int i = 0; i < k; ++i) cur = reduce(cur.compose(m.sigma), m.defining_poly);
  return cur;
}

std::vector<int> derive_character_table(const PolyQ& f, const PolyQ& sigma, int l,
                                        uint64_t conductor) {
  CyclicFieldSpec tmp;
  tmp.l = l;
  tmp.defining_poly = f;
  tmp.sigma = sigma;
  std::vector<PolyQ> conj;
  for (int j = 0; j < l; ++j) conj.push_back(sigma_power(tmp, j));
  Rational disc = discriminant(f);
  std::vector<int> table(conductor, -1);
  for (uint64_t r = 0; r < conductor; ++r) {
    if (std::gcd(r, conductor) != 1) continue;
    for (uint64_t p = r == 0 ? conductor : r;; p += conductor) {
      if (!is_prime(p)) continue;
      if (mpz_divisible_ui_p(disc.get_num_mpz_t(), p) != 0) continue;
      PolyFp fp, x;
      std::vector<PolyFp> conj_p;
      try {
        fp = reduce_mod_p(f, p);
        for (const auto& c : conj) conj_p.push_back(reduce_mod_p(c, p));
      } catch (const DenominatorClash&) {
        continue;
      }
      PolyFp frob = powmod(PolyFp::x(p), Integer(static_cast<unsigned long>(p)), fp);
      int found = -1;
      for (int j = 0; j < l; ++j)
        if (mod(conj_p[static_cast<std::size_t>(j)], fp) == frob) found = j;
      if (found < 0)
        throw SpecMismatch("derive_character_table: Frobenius at " + std::to_string(p) +
                           " is not a power of sigma");
      table[r] = found;
      break;
    }
  }
  return table;
}

void validate(const CyclicFieldSpec& m, bool require_even) {
  const PolyQ& f = m.defining_poly;
  if (!is_prime(static_cast<uint64_t>(std::max(m.l, 0))))
    throw SpecMismatch("cyclic field: degree must be prime");
  if (f.degree() != m.l || !f.is_monic()) throw SpecMismatch("cyclic field: defining polynomial must be monic of degree l");
  bool irreducible = f.degree() <= 4 ? factor_quartic_or_less(f).size() == 1
                                     : mod_p_irreducibility_witness(f, 1000).has_value();
  if (!irreducible) throw SpecMismatch("cyclic field: defining polynomial not certified irreducible");
  if (!reduce(f.compose(m.sigma), f).is_zero()) throw SpecMismatch("cyclic field: sigma(theta) is not a root");
  if (sigma_power(m, 1) == PolyQ::monomial(1, 1)) throw SpecMismatch("cyclic field: sigma is the identity");
  PolyQ cur = PolyQ::monomial(1, 1);
  for (int i = 0; i < m.l; ++i) cur = reduce(cur.compose(m.sigma), f);
  if (!(cur == PolyQ::monomial(1, 1))) throw SpecMismatch("cyclic field: sigma does not have order l");

  const uint64_t n = m.conductor;
  if (m.character_table.size() != n) throw SpecMismatch("cyclic field: character table has wrong size");
  std::vector<bool> hit(static_cast<std::size_t>(m.l), false);
  for (uint64_t r = 0; r < n; ++r) {
    bool unit = std::gcd(r, n) == 1;
    int v = m.character_table[r];
    if (!unit && v != -1) throw SpecMismatch("cyclic field: value at a non-unit residue");
    if (unit && (v < 0 || v >= m.l)) throw SpecMismatch("cyclic field: character value out of range");
    if (unit) hit[static_cast<std::size_t>(v)] = true;
  }
  for (uint64_t r = 0; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    for (uint64_t s = 0; s < n; ++s) {
      if (std::gcd(s, n) != 1) continue;
      int lhs = m.character_table[(r * s) % n];
      int rhs = (m.character_table[r] + m.character_table[s]) % m.l;
      if (lhs != rhs) throw SpecMismatch("cyclic field: character table is not a homomorphism");
    }
  }
  for (bool h : hit)
    if (!h) throw SpecMismatch("cyclic field: character is not surjective");
  if (require_even && n > 1 && m.character_table[n - 1] != 0)
    throw SpecMismatch("cyclic field: character is odd (field not totally real)");
}

AlgebraSpec AlgebraSpec::quaternion(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw InvalidInput("quaternion algebra: parameters must be nonzero");
  AlgebraSpec s;
  s.kind = Kind::Quaternion;
  s.a = a;
  s.b = b;
  return s;
}

AlgebraSpec AlgebraSpec::cyclic(const CyclicFieldSpec& m, const Rational& a) {
  if (a == 0) throw InvalidInput("cyclic algebra: parameter must be nonzero");
  AlgebraSpec s;
  s.kind = Kind::Cyclic;
  s.a = a;
  s.field = m;
  return s;
}

PolyQ AlgebraSpec::basis_poly() const {
  if (kind == Kind::Quaternion) return PolyQ({-a, Rational(0), Rational(1)});
  return field->defining_poly;
}

PolyQ AlgebraSpec::basis_sigma() const {
  if (kind == Kind::Quaternion) return PolyQ({Rational(0), Rational(-1)});
  return field->sigma;
}

Rational AlgebraSpec::y_power() const { return kind == Kind::Quaternion ? b : a; }

std::string AlgebraSpec::to_string() const {
  if (kind == Kind::Quaternion) return "(" + a.get_str() + "," + b.get_str() + ")";
  return "(" + field->to_string() + "," + a.get_str() + ")";
}

bool AlgebraSpec::operator==(const AlgebraSpec& o) const {
  if (kind != o.kind || a != o.a) return false;
  if (kind == Kind::Quaternion) return b == o.b;
  return same_field(*field, *o.field);
}

StructureConstants cyclic_structure_constants(const AlgebraSpec& spec) {
  const int l = spec.degree();
  const PolyQ f = spec.basis_poly();
  const PolyQ s = spec.basis_sigma();
  if (spec.kind == AlgebraSpec::Kind::Cyclic) {
    if (!reduce(f.compose(s), f).is_zero())
      throw SpecMismatch("structure constants: sigma does not define an automorphism");
    PolyQ cur = PolyQ::monomial(1, 1);
    for (int i = 0; i < l; ++i) {
      cur = reduce(cur.compose(s), f);
      if (i + 1 < l && cur == PolyQ::monomial(1, 1))
        throw SpecMismatch("structure constants: sigma has order smaller than l");
    }
    if (!(cur == PolyQ::monomial(1, 1))) throw SpecMismatch("structure constants: sigma does not have order l");
  }
  // sp[k] = sigma^k(theta); pw[k][u] = sigma^k(theta)^u.
  std::vector<PolyQ> sp{PolyQ::monomial(1, 1)};
  for (int k = 1; k < l; ++k) sp.push_back(reduce(sp.back().compose(s), f));
  std::vector<std::vector<PolyQ>> pw(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) {
    PolyQ c = PolyQ::constant(1);
    for (int u = 0; u < l; ++u) {
      pw[static_cast<std::size_t>(k)].push_back(c);
      c = reduce(c * sp[static_cast<std::size_t>(k)], f);
    }
  }
  const int d = l * l;
  StructureConstants sc;
  sc.l = l;
  sc.table.assign(static_cast<std::size_t>(d),
                  std::vector<std::vector<Rational>>(static_cast<std::size_t>(d),
                                                     std::vector<Rational>(static_cast<std::size_t>(d), 0)));
  const Rational yl = spec.y_power();
  for (int t = 0; t < l; ++t)
    for (int s0 = 0; s0 < l; ++s0)
      for (int v = 0; v < l; ++v)
        for (int u = 0; u < l; ++u) {
          // (theta^s0 y^t)(theta^u y^v) = theta^s0 sigma^{-t}(theta)^u y^{t+v}
          PolyQ m = reduce(PolyQ::monomial(1, s0) * pw[static_cast<std::size_t>((l - t) % l)][static_cast<std::size_t>(u)], f);
          int w = t + v;
          Rational factor = 1;
          if (w >= l) {
            w -= l;
            factor = yl;
          }
          auto& out = sc.table[static_cast<std::size_t>(s0 + l * t)][static_cast<std::size_t>(u + l * v)];
          for (int r = 0; r <= m.degree(); ++r) out[static_cast<std::size_t>(r + l * w)] += factor * m.coeff(r);
        }
  return sc;
}

StructureConstants matrix_algebra_constants(int l) {
  const int d = l * l;
  StructureConstants sc;
  sc.l = l;
  sc.table.assign(static_cast<std::size_t>(d),
                  std::vector<std::vector<Rational>>(static_cast<std::size_t>(d),
                                                     std::vector<Rational>(static_cast<std::size_t>(d), 0)));
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (int c = 0; c < l; ++c)
        for (int e = 0; e < l; ++e)
          if (b == c) sc.table[static_cast<std::size_t>(a * l + b)][static_cast<std::size_t>(c * l + e)][static_cast<std::size_t>(a * l + e)] = 1;
  return sc;
}

bool verify_associativity(const StructureConstants& sc) {
  const std::size_t d = static_cast<std::size_t>(sc.dimension());
  const auto& T = sc.table;
  if (T.size() != d) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t out = 0; out < d; ++out) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < d; ++m) {
            if (T[i][j][m] != 0) lhs += T[i][j][m] * T[m][k][out];
            if (T[j][k][m] != 0) rhs += T[j][k][m] * T[i][m][out];
          }
          if (lhs != rhs) return false;
        }
  // Identity e with e X_j = X_j = X_j e.
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Rational> left(d), right(d);
      for (std::size_t i = 0; i < d; ++i) {
        left[i] = T[i][j][k];
        right[i] = T[j][i][k];
      }
      a.push_back(left);
      rhs.emplace_back(j == k ? 1 : 0);
      a.push_back(right);
      rhs.emplace_back(j == k ? 1 : 0);
    }
  return solve_linear(a, rhs).has_value();
}

Algebra::Algebra(Private, AlgebraSpec spec) : spec_(std::move(spec)), sc_(cyclic_structure_constants(spec_)) {}

std::shared_ptr<const Algebra> Algebra::create(const AlgebraSpec& spec) {
  return std::make_shared<const Algebra>(Private{}, spec);
}

AlgebraElement Algebra::element(std::vector<Rational> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(dimension()))
    throw InvalidInput("algebra element: expected " + std::to_string(dimension()) + " coordinates");
  return {shared_from_this(), std::move(coeffs)};
}

AlgebraElement Algebra::scalar(const Rational& c) const {
  std::vector<Rational> v(static_cast<std::size_t>(dimension()), 0);
  v[0] = c;
  return element(std::move(v));
}

AlgebraElement Algebra::basis(int i) const {
  std::vector<Rational> v(static_cast<std::size_t>(dimension()), 0);
  v.at(static_cast<std::size_t>(i)) = 1;
  return element(std::move(v));
}

namespace {

void check_same(const AlgebraElement& x, const AlgebraElement& y) {
  if (!x.algebra || !y.algebra) throw InvalidInput("algebra element without algebra");
  if (x.algebra != y.algebra && !(x.algebra->spec() == y.algebra->spec()))
    throw SpecMismatch("elements belong to different algebras");
}

}  // namespace

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  check_same(x, y);
  const auto& T = x.algebra->constants().table;
  const std::size_t d = x.coeffs.size();
  std::vector<Rational> out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y.coeffs[j] == 0) continue;
      Rational c = x.coeffs[i] * y.coeffs[j];
      for (std::size_t k = 0; k < d; ++k)
        if (T[i][j][k] != 0) out[k] += c * T[i][j][k];
    }
  }
  return {x.algebra, std::move(out)};
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  check_same(x, y);
  AlgebraElement r = x;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs[i];
  return r;
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
  check_same(x, y);
  AlgebraElement r = x;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= y.coeffs[i];
  return r;
}

AlgebraElement scale(const AlgebraElement& x, const Rational& c) {
  AlgebraElement r = x;
  for (auto& v : r.coeffs) v *= c;
  return r;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.algebra && y.algebra && (x.algebra == y.algebra || x.algebra->spec() == y.algebra->spec()) &&
         x.coeffs == y.coeffs;
}

ReducedTraceNorm reduced_trace_norm(const AlgebraElement& x) {
  const AlgebraSpec& s = x.algebra->spec();
  if (s.kind == AlgebraSpec::Kind::Quaternion) {
    const auto& c = x.coeffs;
    return {2 * c[0], c[0] * c[0] - s.a * c[1] * c[1] - s.b * c[2] * c[2] + s.a * s.b * c[3] * c[3]};
  }
  return reduced_trace_norm_matrix(x);
}

ReducedTraceNorm reduced_trace_norm_matrix(const AlgebraElement& x) {
  const AlgebraSpec& spec = x.algebra->spec();
  const int l = spec.degree();
  if (l != 2 && l != 3) throw UnsupportedConfig("reduced_trace_norm: degree must be 2 or 3");
  const PolyQ f = spec.basis_poly();
  const PolyQ s = spec.basis_sigma();
  std::vector<PolyQ> sp{PolyQ::monomial(1, 1)};
  for (int k = 1; k < l; ++k) sp.push_back(reduce(sp.back().compose(s), f));
  std::vector<PolyQ> m(static_cast<std::size_t>(l));
  for (int t = 0; t < l; ++t) {
    std::vector<Rational> c;
    for (int s0 = 0; s0 < l; ++s0) c.push_back(x.coeffs[static_cast<std::size_t>(s0 + l * t)]);
    m[static_cast<std::size_t>(t)] = PolyQ(c);
  }
  // Column u: left multiplication applied to y^u, coordinates on the right.
  std::vector<std::vector<PolyQ>> mat(static_cast<std::size_t>(l), std::vector<PolyQ>(static_cast<std::size_t>(l)));
  for (int t = 0; t < l; ++t)
    for (int u = 0; u < l; ++u) {
      int w = t + u;
      PolyQ entry = reduce(m[static_cast<std::size_t>(t)].compose(sp[static_cast<std::size_t>(w % l)]), f);
      if (w >= l) entry *= spec.y_power();
      mat[static_cast<std::size_t>(w % l)][static_cast<std::size_t>(u)] = entry;
    }
  PolyQ tr, det;
  for (int i = 0; i < l; ++i) tr += mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  for (const auto& [perm, sign] : permutations(l)) {
    PolyQ term = PolyQ::constant(sign);
    for (int i = 0; i < l; ++i) term = reduce(term * mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])], f);
    det += term;
  }
  tr = reduce(tr, f);
  det = reduce(det, f);
  if (tr.degree() > 0 || det.degree() > 0)
    throw NonRationalResult("reduced trace or norm not rational: " + tr.to_string() + ", " + det.to_string());
  return {tr.coeff(0), det.coeff(0)};
}

SymbolicTraceNorm symbolic_trace_norm(const AlgebraSpec& shape, const MPoly& a, const MPoly& b,
                                      const std::vector<MPoly>& coords) {
  const int l = shape.degree();
  if (coords.size() != static_cast<std::size_t>(l * l))
    throw InvalidInput("symbolic_trace_norm: wrong number of coordinates");
  if (shape.kind == AlgebraSpec::Kind::Quaternion) {
    const auto& c = coords;
    return {MPoly(2) * c[0], c[0] * c[0] - a * c[1] * c[1] - b * c[2] * c[2] + a * b * c[3] * c[3]};
  }
  const PolyQ f = shape.field->defining_poly;
  const std::size_t L = static_cast<std::size_t>(l);
  using Elem = std::vector<MPoly>;
  // sigma^k as a Q-linear map on the power basis: sig[k][r][u] = coeff of theta^r in sigma^k(theta^u).
  std::vector<std::vector<std::vector<Rational>>> sig(L, std::vector<std::vector<Rational>>(L, std::vector<Rational>(L, 0)));
  for (int k = 0; k < l; ++k) {
    PolyQ sk = sigma_power(*shape.field, k), pw = PolyQ::constant(1);
    for (int u = 0; u < l; ++u) {
      for (int r = 0; r < l; ++r) sig[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)][static_cast<std::size_t>(u)] = pw.coeff(r);
      pw = reduce(pw * sk, f);
    }
  }
  auto apply_sigma = [&](int k, const Elem& e) {
    Elem out(L);
    for (std::size_t r = 0; r < L; ++r)
      for (std::size_t u = 0; u < L; ++u) {
        const Rational& c = sig[static_cast<std::size_t>(k)][r][u];
        if (c != 0) out[r] += MPoly(c) * e[u];
      }
    return out;
  };
  auto multiply = [&](const Elem& x, const Elem& y) {
    std::vector<MPoly> prod(2 * L - 1);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) prod[i + j] += x[i] * y[j];
    for (std::size_t k = prod.size(); k-- > L;) {
      if (prod[k].is_zero()) continue;
      for (std::size_t j = 0; j < L; ++j) prod[k - L + j] -= MPoly(f.coeff(static_cast<int>(j))) * prod[k];
      prod[k] = MPoly();
    }
    prod.resize(L);
    return prod;
  };
  std::vector<Elem> m(L);
  for (std::size_t t = 0; t < L; ++t)
    for (std::size_t s0 = 0; s0 < L; ++s0) m[t].push_back(coords[s0 + L * t]);
  std::vector<std::vector<Elem>> mat(L, std::vector<Elem>(L));
  for (int t = 0; t < l; ++t)
    for (int u = 0; u < l; ++u) {
      int w = t + u;
      Elem entry = apply_sigma(w % l, m[static_cast<std::size_t>(t)]);
      if (w >= l)
        for (auto& c : entry) c = a * c;
      mat[static_cast<std::size_t>(w % l)][static_cast<std::size_t>(u)] = entry;
    }
  Elem tr(L), det(L);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t r = 0; r < L; ++r) tr[r] += mat[i][i][r];
  for (const auto& [perm, sign] : permutations(l)) {
    Elem term(L);
    term[0] = MPoly(sign);
    for (std::size_t i = 0; i < L; ++i) term = multiply(term, mat[i][static_cast<std::size_t>(perm[i])]);
    for (std::size_t r = 0; r < L; ++r) det[r] += term[r];
  }
  for (std::size_t r = 1; r < L; ++r)
    if (!tr[r].is_zero() || !det[r].is_zero())
      throw NonRationalResult("symbolic reduced trace or norm not rational");
  return {tr[0], det[0]};
}

}  // namespace rootless
