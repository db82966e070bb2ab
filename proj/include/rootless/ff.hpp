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

// Finite fields F_q = F_p[t]/(m(t)), their extensions, trace and norm, the
// trace sets U_l and searches for irreducible polynomials with prescribed
// coefficients.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootless/ntheory.hpp"
#include "rootless/poly_fp.hpp"

namespace rootless {

/// Coefficient vector over F_p in the power basis of the field, length e.
using FqElement = std::vector<uint64_t>;

/// Default cap on enumerated group sizes in compute_U.
inline constexpr uint64_t kDefaultSizeCap = uint64_t{1} << 24;

class FqField {
 public:
  /// Validates that the defining polynomial is monic irreducible.
  FqField(uint64_t p, PolyFp defining);
  /// F_{p^e} defined by the monic irreducible of degree e with the least
  /// encoding sum c_i p^i of its lower coefficients.
  static FqField make(uint64_t p, int e);
  static FqField prime(uint64_t p) { return make(p, 1); }
  /// F_q for a prime power q; InvalidInput otherwise.
  static FqField of_order(uint64_t q);

  uint64_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }
  uint64_t order() const noexcept { return q_; }
  const PolyFp& defining_poly() const noexcept { return def_; }

  FqElement zero() const { return FqElement(static_cast<std::size_t>(e_), 0); }
  FqElement one() const { return from_int(1); }
  FqElement from_int(long long c) const;

  FqElement add(const FqElement& a, const FqElement& b) const;
  FqElement sub(const FqElement& a, const FqElement& b) const;
  FqElement neg(const FqElement& a) const;
  FqElement mul(const FqElement& a, const FqElement& b) const;
  FqElement pow(const FqElement& a, const Integer& k) const;
  FqElement inv(const FqElement& a) const;
  bool is_zero(const FqElement& a) const;

  /// Bijection with [0, q): sum c_i p^i.
  uint64_t encode(const FqElement& a) const;
  FqElement decode(uint64_t code) const;

  /// Generator of the multiplicative group with the least encoding.
  FqElement primitive_element() const;
  std::string to_string(const FqElement& a) const;

  bool operator==(const FqField& o) const { return p_ == o.p_ && def_ == o.def_; }

 private:
  uint64_t p_ = 2;
  int e_ = 1;
  uint64_t q_ = 2;
  PolyFp def_;
};

/// F_{q^l} built directly over F_p, together with an embedding of F_q.
class FqExtension {
 public:
  FqExtension(FqField base, int l);

  const FqField& base() const noexcept { return base_; }
  const FqField& field() const noexcept { return big_; }
  int l() const noexcept { return l_; }
  /// (q^l - 1)/(q - 1), the exponent of the norm map.
  const Integer& norm_exponent() const noexcept { return nexp_; }
  /// Primitive element of F_{q^l}.
  const FqElement& generator() const noexcept { return gen_; }
  /// Image of the generator t of the base field.
  const FqElement& base_root() const noexcept { return root_; }

  FqElement embed(const FqElement& b) const;
  /// Base-field coordinates of x when x lies in the embedded subfield.
  std::optional<FqElement> restrict_to_base(const FqElement& x) const;
  bool in_base(const FqElement& x) const { return restrict_to_base(x).has_value(); }
  /// x^q.
  FqElement frobenius(const FqElement& x) const;

  /// F_p-linear maps as D x D (or rows x D) matrices, D = e*l.
  using Matrix = std::vector<std::vector<uint64_t>>;
  const Matrix& frobenius_matrix() const noexcept { return frob_; }
  /// Trace to the base, in base coordinates (e x D).
  const Matrix& trace_to_base_matrix() const noexcept { return trace_base_; }
  Matrix multiplication_matrix(const FqElement& h) const;
  FqElement apply(const Matrix& m, const FqElement& x) const;

 private:
  FqField base_;
  FqField big_;
  int l_;
  Integer nexp_;
  FqElement gen_;
  FqElement root_;
  Matrix embed_;      // D x e
  Matrix restrict_;   // D x D, row-reduces embed_ to [I; 0]
  Matrix frob_;
  Matrix trace_base_;
};

/// Extension of degree l; SizeLimitExceeded when q^l is not representable.
FqExtension make_extension(const FqField& base, int l);

struct TraceNorm {
  FqElement trace;  // base coordinates
  FqElement norm;   // base coordinates
};

TraceNorm trace_and_norm(const FqExtension& ext, const FqElement& x);

struct TraceSet {
  FqField field;
  int l = 0;
  std::vector<uint64_t> elements;  // sorted encodings
  bool contains(uint64_t code) const;
  bool is_full() const noexcept { return elements.size() == field.order(); }
};

/// U_l(F): traces of norm-one elements of F^(l) outside F, by walking the
/// cyclic group of norm-one elements. SizeLimitExceeded when its order
/// exceeds size_cap.
TraceSet compute_U(const FqExtension& ext, uint64_t size_cap = kDefaultSizeCap);
TraceSet compute_U(const FqField& base, int l, uint64_t size_cap = kDefaultSizeCap);

struct DifferenceReport {
  bool holds = false;
  std::vector<uint64_t> missing;  // encodings not of the form u - u'
};

/// Whether (U or U u {2,-2}) - U covers the field.
DifferenceReport check_difference_property(const TraceSet& u, bool augment_with_pm2);

/// F_q with full addition and multiplication tables, elements are encodings.
class TableField {
 public:
  explicit TableField(const FqField& f);
  uint64_t order() const noexcept { return q_; }
  const FqField& field() const noexcept { return f_; }
  uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t inv(uint32_t a) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

 private:
  FqField f_;
  uint32_t q_;
  std::vector<uint32_t> add_, mul_, neg_, inv_;
};

/// Largest order accepted by TableField.
inline constexpr uint64_t kTableFieldMax = 1024;

/// Polynomial over F_q with coefficients as encodings, low degree first.
struct FqPoly {
  std::vector<uint32_t> coeffs;
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const FqPoly&) const = default;
  std::string to_string() const;
};

/// Rabin test over F_q.
bool is_irreducible(const TableField& f, const FqPoly& poly);

/// The monic irreducible X^n + a_top X^(n-1) + ... + a0 whose middle
/// coefficients (a_1, ..., a_{n-2}) have the least encoding, or nullopt after
/// the full scan. BudgetExceeded when q^(n-2) > budget.
std::optional<FqPoly> find_irreducible_prescribed(const TableField& f, int n, uint32_t a0,
                                                  uint32_t a_top,
                                                  uint64_t budget = kDefaultSizeCap);
std::optional<FqPoly> find_irreducible_prescribed(const FqField& base, int n,
                                                  const FqElement& a0, const FqElement& a_top,
                                                  uint64_t budget = kDefaultSizeCap);

/// Prime powers in [lo, hi].
std::vector<uint64_t> prime_powers(uint64_t lo, uint64_t hi);

}  // namespace rootless
