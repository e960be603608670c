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

#ifndef CWPRIMES_CARLITZ_HPP_
#define CWPRIMES_CARLITZ_HPP_

#include <cstddef>
#include <mutex>
#include <vector>

#include "cwprimes/poly.hpp"

namespace cwprimes {

// Polynomial in the twisted variable tau over F_q[T], with multiplication
// under the commutation rule tau * theta = theta^q * tau. Coefficients are
// DensePoly values indexed by tau-power. Exact twisted polynomials blow up
// exponentially; this type exists for small cross-checks, the workhorse is
// carlitz_eval_mod.
class TwistedPoly {
 public:
  TwistedPoly() = default;
  explicit TwistedPoly(FieldPtr base) : base_(std::move(base)) {}

  static TwistedPoly zero(const FieldPtr& base) { return TwistedPoly(base); }
  static TwistedPoly one(const FieldPtr& base);
  static TwistedPoly tau(const FieldPtr& base);
  static TwistedPoly from_coeffs(const FieldPtr& base, std::vector<DensePoly> coeffs);

  const FieldPtr& base() const { return base_; }
  long tau_degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  DensePoly coeff(std::size_t i) const;

  TwistedPoly operator+(const TwistedPoly& o) const;
  bool operator==(const TwistedPoly& o) const;
  bool operator!=(const TwistedPoly& o) const { return !(*this == o); }

  void normalize();
  std::vector<DensePoly>& coeffs() { return c_; }
  const std::vector<DensePoly>& coeffs() const { return c_; }

 private:
  FieldPtr base_;
  std::vector<DensePoly> c_;
};

TwistedPoly twisted_mul(const TwistedPoly& a, const TwistedPoly& b);
TwistedPoly mul_scalar(const TwistedPoly& a, const FqElement& c);

// The Carlitz endomorphism rho^N in the twisted ring, built from
// rho_T = tau + T by F_q-linearity. Throws ZeroInput on N = 0.
TwistedPoly rho_coeffs(const DensePoly& N);

// Memoized brackets [i] = T^(q^i) - T and products L_i = [i][i-1]...[1],
// with [0] = L_0 = 1. The recurrence [i+1] = [1]^(q^i) + [i] is re-derived
// and checked on every insert. Total stored words are capped by a budget.
// Thread safe (synchronized inserts).
class BracketCache {
 public:
  static constexpr std::size_t kDefaultBudgetWords = 20'000'000;
  explicit BracketCache(FieldPtr field, std::size_t budget_words = kDefaultBudgetWords);

  const FieldPtr& field() const { return field_; }
  DensePoly bracket(std::size_t i);
  DensePoly L(std::size_t i);

 private:
  void grow_to(std::size_t i);

  FieldPtr field_;
  std::size_t budget_words_;
  std::mutex mu_;
  std::vector<DensePoly> brackets_;  // brackets_[i] = [i]
  std::vector<DensePoly> ls_;        // ls_[i] = L_i
  std::size_t used_words_ = 0;
};

// rho_N(a) mod M without materializing rho^N: iterates u <- u^q + T*u mod M
// and combines with the coefficients of N. Costs deg(N) modular q-th powers.
DensePoly carlitz_eval_mod(const DensePoly& N, const DensePoly& a, const DensePoly& M);

// The sequence F_0 = 1, F_i = (-1)^i + [i] F_{i-1}. The sign lives in the
// field, so in characteristic 2 every (-1)^i is 1.
//
// Exact value; degree is q + q^2 + ... + q^n, refused above max_coeffs.
DensePoly f_sequence_exact(std::size_t n, BracketCache& cache,
                           std::size_t max_coeffs = 10'000'000);
// F_n mod M, with [i] mod M obtained by iterated Frobenius powmod. The
// sequence belongs to F_q[T] for q the order of `base` (defaults to the
// modulus field); M may live over an extension of base.
DensePoly f_sequence_mod(std::size_t n, const DensePoly& M, const FieldPtr& base = nullptr);
// F_n mod (T^q - T - alpha) as the scalar obtained by substituting
// [i] |-> alpha^(q^(i-1)) + ... + alpha, q the order of `base`.
FqElement f_sequence_scalar(std::size_t n, const FqElement& alpha, const FieldPtr& base);

enum class CwMethod { kDefinition, kCriterion };

// Whether the monic prime P is a c-Wieferich prime (to base 1):
//   kDefinition: rho_{P-1}(1) = 0 mod P^2
//   kCriterion:  F_{deg(P)-1} = 0 mod P
// Throws NotPrime on reducible or non-monic input.
bool is_cwieferich(const DensePoly& P, CwMethod method);

// Property hook: whether F_{s*d+ell} = (-1)^(s*d) * F_ell (mod Q) holds for
// the degree-d prime Q. Expected true always.
bool lemma_reduce_check(std::size_t s, std::size_t d, std::size_t ell, const DensePoly& Q);

}  // namespace cwprimes

#endif  // CWPRIMES_CARLITZ_HPP_
