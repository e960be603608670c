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

#ifndef CWPRIMES_EXTENSIONS_HPP_
#define CWPRIMES_EXTENSIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "cwprimes/search.hpp"

namespace cwprimes {

// |B_{p^m,s}| summed over chi in F_q^x, counted as orbit classes.
struct TripleCount {
  Word p = 0;
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t count = 0;
};

// E_{q,s} = {k : p does not divide 1+sk} (a predicate) and its economical
// subset D_{q,s} = {k <= p-1} which already realizes every shift.
struct IndexSets {
  Word p = 0;
  std::size_t s = 0;

  bool in_E(std::uint64_t k) const { return (1 + s * k) % p != 0; }
  std::vector<std::uint64_t> D() const {
    std::vector<std::uint64_t> d;
    for (std::uint64_t k = 0; k < p; ++k)
      if (in_E(k)) d.push_back(k);
    return d;
  }
};

// Whether the degree-m prime P over F_q is a c-Wieferich prime in
// F_{q^r}[T]. P stays prime there iff gcd(m, r) = 1 (checked;
// NotPrimeInExtension otherwise). Fast path: for r = 1 mod m the answer
// equals is_cwieferich(P) without building the tower.
bool is_cw_in_extension(const DensePoly& P, std::uint64_t r);

// Property hook for the congruence transfer: F_{q,n} vanishes mod
// T^q - T - alpha iff F_{q^r,n} vanishes mod T^(q^r) - T - alpha, r = 1+sk.
// Expected always true.
bool lemma53_check(std::size_t n, const FqElement& alpha, const FieldPtr& base, std::uint64_t k);

// beta = alpha - (k/(1+sk)) Tr(alpha), the quotient evaluated in F_p.
// Throws InvalidK when p divides 1+sk.
FqElement beta_shift(const FqElement& alpha, std::uint64_t k, const FieldPtr& base);

// The full solution set of X^q - X = (k/(1+sk)) Tr(alpha), living in F_q
// when the right side vanishes and in F_{q^p} otherwise. Sorted canonically
// (the first entry is the deterministic representative).
std::vector<FqElement> shift_roots(const FqElement& alpha, std::uint64_t k, const FieldPtr& base);

// Transports a fixed record along the beta-shift: Q = P(T + x) descends to
// F_q and is a c-Wieferich prime in F_{q^(1+sk)}[T]. The returned record is
// tagged with the target ring's field spec.
WieferichRecord translate_to_extension(const WieferichRecord& rec, std::uint64_t k,
                                       const SearchOptions& opts = {});

struct AuditEntry {
  std::string prime;                  // almost Artin-Schreier prime text
  std::optional<std::uint64_t> least_r;  // least r = 1+k with membership
};

struct AuditReport {
  bool premise_met = false;  // some G-fixed c-Wieferich prime of degree p exists
  std::string chi;           // the audited line's canonical generator
  std::vector<AuditEntry> entries;
  bool covered = false;  // every enumerated prime found an extension
};

// For each G-line carrying a degree-p c-Wieferich prime, enumerates all
// (q/p)(p-1) almost Artin-Schreier primes on that line and reports the least
// r = 1+k (k in D_{q,1}) where each becomes c-Wieferich.
std::vector<AuditReport> corollary55_audit(const FieldPtr& base, const SearchOptions& opts = {});

TripleCount count_table(Word p, std::size_t m, std::size_t s, const SearchOptions& opts = {});

inline const char* count_table_csv_header() { return "p,m,s,count"; }

// The working extension F_{q^s} a search over `base` uses (canonical minpoly
// unless opts.ext_minpoly overrides).
FieldPtr search_extension(const FieldPtr& base, std::size_t s, const SearchOptions& opts = {});

}  // namespace cwprimes

#endif  // CWPRIMES_EXTENSIONS_HPP_
