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

#ifndef CWPRIMES_FACTOR_HPP_
#define CWPRIMES_FACTOR_HPP_

#include <random>
#include <vector>

#include "cwprimes/poly.hpp"

namespace cwprimes {

using Rng = std::mt19937_64;

struct PolyFactor {
  DensePoly factor;       // monic irreducible
  std::size_t multiplicity = 0;
};

// Full factorization into monic irreducibles: squarefree split, then
// distinct-degree, then randomized equal-degree splitting. Output is sorted
// by ascending degree, then canonical coefficient order. The product of the
// factors times the leading coefficient reconstructs the input.
//
// Equal-degree splitting draws from the caller's PRNG; in characteristic 2
// it uses the additive trace map instead of the (q-1)/2 power.
std::vector<PolyFactor> factor(const DensePoly& f, Rng& rng);

// Roots of f in its coefficient field (degree-one factors), each once.
std::vector<FqElement> roots(const DensePoly& f, Rng& rng);

// Uniformly random polynomial of degree < deg_bound (possibly zero).
DensePoly random_poly_below(const FieldPtr& f, std::size_t deg_bound, Rng& rng);

}  // namespace cwprimes

#endif  // CWPRIMES_FACTOR_HPP_
