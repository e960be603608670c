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

#ifndef CWPRIMES_TEXT_HPP_
#define CWPRIMES_TEXT_HPP_

#include <string>

#include "cwprimes/poly.hpp"

namespace cwprimes {

// Canonical text form of polynomials in T: terms in decreasing degree,
// residues printed as 0..p-1, extension coefficients as parenthesized
// polynomials in the tower generators t, z, w, u, v (bottom up), with '*'
// between a non-trivial coefficient and the monomial. Examples:
//   T^3 + (t + 1)*T + 1
//   T^6 + T^4 + T^3 + T^2 + 2*T + 2
// The form round-trips through parse_poly.
std::string to_string(const DensePoly& f);
std::string to_string(const FqElement& x);

// Generator name of the k-th tower level above the prime field (k >= 1).
std::string generator_name(std::size_t level);

// Parses the canonical polynomial form (tolerantly: '*' optional, '-'
// accepted) over the given field. Throws ParseError on malformed input.
DensePoly parse_poly(const FieldPtr& field, const std::string& text);
// Same, but requires the result to be a constant and returns the element.
FqElement parse_element(const FieldPtr& field, const std::string& text);

// Field spec strings:  "p" | "p^m:c_{m-1},...,c_0" | "p^m" (canonical
// minpoly), with further tower steps joined by '/':  "s:c_{s-1},...,c_0" or
// bare "s". Upper-step coefficients are element texts in the generators of
// the field below, e.g. "3^2:2,2/3:0,0,t+1".
FieldPtr parse_field_spec(const std::string& spec);
std::string field_spec(const FieldPtr& field);

}  // namespace cwprimes

#endif  // CWPRIMES_TEXT_HPP_
