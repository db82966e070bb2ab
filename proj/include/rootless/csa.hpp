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

// Central simple algebras of degree 2 and 3 over Q: quaternion algebras
// (a, b) and cyclic algebras (M, sigma, a) for cyclic fields M of prime
// degree, with structure constants, arithmetic, and reduced trace and norm.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootless/mpoly.hpp"
#include "rootless/ntheory.hpp"
#include "rootless/poly_q.hpp"

namespace rootless {

/// A cyclic field M = Q[X]/(f) of prime degree l with generator sigma of
/// Gal(M/Q) given by the image of the root, and the Dirichlet character
/// attached to it: chi(p) = j when Frobenius at p is sigma^j.
struct CyclicFieldSpec {
  int l = 2;
  PolyQ defining_poly;
  PolyQ sigma;  // sigma(theta) as a polynomial in theta, degree < l
  uint64_t conductor = 1;
  /// Indexed by residues mod conductor; -1 marks non-units.
  std::vector<int> character_table;

  /// chi(n) for n coprime to the conductor; InvalidInput otherwise.
  int chi(const Integer& n) const;
  std::string to_string() const;
};

/// Q(sqrt d) for squarefree d != 0, 1 with sigma(theta) = -theta and the
/// Kronecker character of its discriminant.
CyclicFieldSpec quadratic_field(long d);
/// The cyclic cubic field of conductor 7 (X^3+X^2-2X-1) or 9 (X^3-3X+1).
CyclicFieldSpec cyclic_cubic(uint64_t conductor);
/// chi(r) for every residue r mod conductor from Frobenius at the least
/// prime p = r (mod conductor) not dividing disc(f).
std::vector<int> derive_character_table(const PolyQ& f, const PolyQ& sigma, int l,
                                        uint64_t conductor);
/// sigma^k(theta) reduced mod f.
PolyQ sigma_power(const CyclicFieldSpec& m, int k);
/// Checks irreducibility, that sigma is an automorphism of order l, and
/// that the character table is an even surjective homomorphism onto Z/l.
/// Throws SpecMismatch describing the first failure.
void validate(const CyclicFieldSpec& m, bool require_even = true);

struct AlgebraSpec {
  enum class Kind { Quaternion, Cyclic };
  Kind kind = Kind::Quaternion;
  Rational a = 1;
  Rational b = 1;                       // quaternion only
  std::optional<CyclicFieldSpec> field;  // cyclic only

  static AlgebraSpec quaternion(const Rational& a, const Rational& b);
  static AlgebraSpec cyclic(const CyclicFieldSpec& m, const Rational& a);
  int degree() const { return kind == Kind::Quaternion ? 2 : field->l; }
  int dimension() const { return degree() * degree(); }
  /// The field and its generator used to build the basis theta^s y^t: for
  /// quaternions X^2 - a with sigma(theta) = -theta, and y^2 = b.
  PolyQ basis_poly() const;
  PolyQ basis_sigma() const;
  Rational y_power() const;  // y^l
  std::string to_string() const;
  bool operator==(const AlgebraSpec& o) const;
};

/// table[i][j][k] = coefficient of X_k in X_i X_j.
struct StructureConstants {
  int l = 0;
  std::vector<std::vector<std::vector<Rational>>> table;
  int dimension() const { return l * l; }
};

/// Constants in the basis theta^s y^t (index s + l*t), where y^l = a and
/// m y = y sigma(m). For quaternions this is 1, i, j, ij.
StructureConstants cyclic_structure_constants(const AlgebraSpec& spec);
/// Constants of the full matrix algebra M_l(Q) in the basis of matrix units.
StructureConstants matrix_algebra_constants(int l);
/// Associativity on all basis triples and existence of a two-sided identity.
bool verify_associativity(const StructureConstants& sc);

class Algebra;

struct AlgebraElement {
  std::shared_ptr<const Algebra> algebra;
  std::vector<Rational> coeffs;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> create(const AlgebraSpec& spec);
  const AlgebraSpec& spec() const noexcept { return spec_; }
  const StructureConstants& constants() const noexcept { return sc_; }
  int degree() const noexcept { return spec_.degree(); }
  int dimension() const noexcept { return spec_.dimension(); }
  AlgebraElement element(std::vector<Rational> coeffs) const;
  AlgebraElement scalar(const Rational& c) const;
  AlgebraElement basis(int i) const;

  struct Private {};
  Algebra(Private, AlgebraSpec spec);

 private:
  AlgebraSpec spec_;
  StructureConstants sc_;
};

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const AlgebraElement& x, const Rational& c);
bool operator==(const AlgebraElement& x, const AlgebraElement& y);

struct ReducedTraceNorm {
  Rational trd;
  Rational nrd;
};

/// Quaternions use the closed form, cyclic algebras the matrix path.
ReducedTraceNorm reduced_trace_norm(const AlgebraElement& x);
/// Trace and determinant of the l x l matrix of left multiplication over M.
/// NonRationalResult if either fails to lie in Q.
ReducedTraceNorm reduced_trace_norm_matrix(const AlgebraElement& x);

/// Reduced trace and norm of the element with the given coordinates, as
/// polynomials in the coordinates and in the algebra parameters a (and b for
/// quaternions), which may themselves be symbolic.
struct SymbolicTraceNorm {
  MPoly trd;
  MPoly nrd;
};
SymbolicTraceNorm symbolic_trace_norm(const AlgebraSpec& shape, const MPoly& a, const MPoly& b,
                                      const std::vector<MPoly>& coords);

}  // namespace rootless
