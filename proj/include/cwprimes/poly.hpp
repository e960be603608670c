/* Copyright 2026 The cwprimes Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CWPRIMES_POLY_HPP_
#define CWPRIMES_POLY_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "cwprimes/field.hpp"

namespace cwprimes {

// Univariate polynomial over a FieldNode with dense, degree-indexed
// coefficients. Coefficients are stored flat: coefficient i occupies words
// [i*w, (i+1)*w) where w = field->abs_degree(). The representation is always
// normalized (no trailing zero coefficient); the zero polynomial has an empty
// coefficient array and degree() == -1.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(FieldPtr f) : f_(std::move(f)) {}

  static DensePoly zero(const FieldPtr& f) { return DensePoly(f); }
  static DensePoly one(const FieldPtr& f);
  static DensePoly constant(const FqElement& c);
  // The indeterminate T.
  static DensePoly T(const FieldPtr& f);
  static DensePoly monomial(const FqElement& c, std::size_t deg);
  static DensePoly from_coeffs(const FieldPtr& f, const std::vector<FqElement>& coeffs);

  const FieldPtr& field() const { return f_; }
  long degree() const { return static_cast<long>(c_.size() / stride()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  bool valid() const { return f_ != nullptr; }

  FqElement coeff(std::size_t i) const;  // zero beyond the degree
  FqElement leading_coeff() const;
  void set_coeff(std::size_t i, const FqElement& c);

  std::size_t stride() const { return f_->abs_degree(); }
  const Word* data() const { return c_.data(); }
  Word* data() { return c_.data(); }
  std::vector<Word>& words() { return c_; }
  const std::vector<Word>& words() const { return c_; }
  ConstWordSpan coeff_flat(std::size_t i) const;

  void normalize();  // drops trailing zero coefficients

  bool operator==(const DensePoly& o) const;
  bool operator!=(const DensePoly& o) const { return !(*this == o); }

  DensePoly operator+(const DensePoly& o) const;
  DensePoly operator-(const DensePoly& o) const;
  DensePoly operator*(const DensePoly& o) const;
  DensePoly operator-() const;

 private:
  FieldPtr f_;
  std::vector<Word> c_;
};

// Deterministic order: ascending degree, then lexicographic on the flat
// coefficient encoding (constant term first).
bool canonical_less(const DensePoly& a, const DensePoly& b);

DensePoly mul_scalar(const DensePoly& f, const FqElement& c);
DensePoly monic(const DensePoly& f);

// Quotient and remainder with deg(rem) < deg(g); throws DivideByZero on g = 0.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& f, const DensePoly& g);
DensePoly mod(const DensePoly& f, const DensePoly& g);
bool divides(const DensePoly& g, const DensePoly& f);

// Monic greatest common divisor.
DensePoly gcd(const DensePoly& f, const DensePoly& g);

// f^e mod m by square-and-multiply.
DensePoly powmod(const DensePoly& f, std::uint64_t e, const DensePoly& m);
// f^(q^i) mod m where q = field order of `base`, by iterated q-th powers.
DensePoly powmod_frobenius(const DensePoly& f, std::uint64_t i, const DensePoly& m,
                           const FieldPtr& base);

DensePoly derivative(const DensePoly& f);
FqElement evaluate(const DensePoly& f, const FqElement& x);
// Composition f(g(T)).
DensePoly compose(const DensePoly& f, const DensePoly& g);
// f(T + c); c may live in an extension of f's field (f is promoted).
DensePoly translate(const DensePoly& f, const FqElement& c);

// Resultant via the Euclidean scheme; zero iff f and g share a factor.
FqElement resultant(const DensePoly& f, const DensePoly& g);

// Coefficient-wise q-th power: (sum c_k T^k)^q = sum c_k^q T^(kq) for q the
// order of the coefficient field (the additive/Frobenius identity).
DensePoly pow_q_spread(const DensePoly& f);

// Re-types f over an extension of its field.
DensePoly promote_poly(const DensePoly& f, const FieldPtr& ext);
// Re-types f over an ancestor field; throws NotInSubfield if any coefficient
// fails to descend.
DensePoly descend_poly(const DensePoly& f, const FieldPtr& base);

// Frobenius-based irreducibility test; throws DegreeTooSmall on constants.
bool is_irreducible(const DensePoly& f);

// The sparse polynomial T^(q^i) - T over f (q = field order), with the
// empty-product convention [0] = 1.
DensePoly bracket(const FieldPtr& f, std::uint64_t i);

}  // namespace cwprimes

#endif  // CWPRIMES_POLY_HPP_
