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

#ifndef CWPRIMES_GFIXED_HPP_
#define CWPRIMES_GFIXED_HPP_

#include <optional>
#include <vector>

#include "cwprimes/poly.hpp"

namespace cwprimes {

// Additive subgroup of (F_q, +) of order 1 or p under the translation action
// a * f = f(T + a). Groups of order p are chi*F_p lines, stored by canonical
// generator: the lexicographically smallest nonzero member. Two generators on
// the same F_p-line give equal groups.
class TranslationGroup {
 public:
  static TranslationGroup trivial(const FieldPtr& f);
  static TranslationGroup from_generator(const FqElement& chi);

  const FieldPtr& field() const { return f_; }
  const FqElement& generator() const { return gen_; }  // zero for the trivial group
  std::size_t order() const;
  std::vector<FqElement> members() const;  // {i*chi : i in F_p} (or {0})
  bool contains(const FqElement& x) const;
  bool operator==(const TranslationGroup& o) const;
  bool operator!=(const TranslationGroup& o) const { return !(*this == o); }

 private:
  FieldPtr f_;
  FqElement gen_;
};

// The full stabilizer {a in F_q : f(T+a) = f}, scanned one representative per
// F_p-line (the stabilizer is a union of lines). Sorted canonically.
std::vector<FqElement> stabilizer(const DensePoly& f);

// [1]_G = prod_{a in G} (T + a) = T^p - chi^(p-1) T; T for the trivial group.
DensePoly bracket_G(const TranslationGroup& G);

// Writes monic f as g([1]_G) when f is G-fixed (iterated division by [1]_G
// with constant remainders); std::nullopt when not fixed. The round trip
// g([1]_G) == f is asserted before returning.
std::optional<DensePoly> decompose_in_bracket(const DensePoly& f, const TranslationGroup& G);

// Whether T^p - beta*T - gamma is irreducible over gamma's field: true iff
// the F_p-linear map x -> x^p - beta*x misses gamma (solved by linear algebra
// rather than field scanning). beta must be nonzero.
bool trinomial_irreducible(const FqElement& beta, const FqElement& gamma);

// Decomposition of T^q - T - alpha over alpha's field (q the order of
// `base`): q/p almost Artin-Schreier trinomials with beta = Tr(alpha)^(p-1)
// when the relative trace is nonzero, q distinct linear factors otherwise.
// Agrees with the generic factor() routine.
std::vector<DensePoly> factor_additive_trinomial(const FqElement& alpha, const FieldPtr& base);

// Factors a G-fixed prime of degree p*s into its s almost Artin-Schreier
// G-fixed primes over F_{q^s} (canonical extension). Throws NotPrime /
// NotFixed / TheoremViolation per the contract.
std::vector<DensePoly> loki_decompose(const DensePoly& f, const TranslationGroup& G);

}  // namespace cwprimes

#endif  // CWPRIMES_GFIXED_HPP_
