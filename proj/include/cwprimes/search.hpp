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

#ifndef CWPRIMES_SEARCH_HPP_
#define CWPRIMES_SEARCH_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwprimes/carlitz.hpp"
#include "cwprimes/factor.hpp"
#include "cwprimes/gfixed.hpp"
#include "cwprimes/poly.hpp"

namespace cwprimes {

struct SearchOptions {
  std::size_t workers = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 1;   // equal-degree splitting PRNG seed
  std::uint64_t max_candidates = std::uint64_t{1} << 26;
  std::size_t max_naive_coeffs = 300'000;  // F_{n-1} size cap for algorithm1
  std::size_t chunk = 1 << 12;
  // Explicit minpoly (over the search field) for the working extension
  // F_{q^s}; the canonical minpoly is used when absent.
  std::optional<DensePoly> ext_minpoly;
};

// The candidate set B_{q,s,chi}: Frobenius-orbit representatives alpha in
// F_{q^s} of degree s over F_q with rel_trace(alpha) = chi whose F-value
// vanishes mod T^q - T - alpha (exponent ps-1 for chi != 0, s-1 for chi = 0).
struct BSet {
  FieldPtr base;  // F_q
  FieldPtr ext;   // F_{q^s}
  std::size_t s = 0;
  FqElement chi;
  std::vector<FqElement> members;  // canonical order
};

// A found prime with enough metadata to re-verify it from scratch.
struct WieferichRecord {
  std::string field;                // field spec of F_q
  std::string prime;                // canonical polynomial text over F_q
  std::size_t degree = 0;
  std::optional<std::string> chi;   // canonical stabilizer generator; nullopt = non-fixed
  std::optional<std::string> alpha; // source orbit representative
  std::size_t s = 0;
  bool passed_definition = false;
  bool passed_criterion = false;
  std::string discovered_at;        // not serialized; JSON output is timestamp-free
};

std::string record_to_json(const WieferichRecord& r);
WieferichRecord record_from_json(const std::string& line);

// One full candidate sweep of F_{q^s}, bucketing passing orbit
// representatives by their relative trace. Runs the chunk-partitioned
// parallel loop; output is canonical and independent of the worker count.
struct SweepResult {
  FieldPtr base;
  FieldPtr ext;
  std::size_t s = 0;
  // chi != 0 buckets in canonical chi order (F_{ps-1} test).
  std::vector<std::pair<FqElement, std::vector<FqElement>>> fixed;
  // chi = 0 bucket (F_{s-1} test), degree-s representatives only.
  std::vector<FqElement> nonfixed;
  // Lower-degree representatives passing the chi = 0 test (relaxed mode).
  std::vector<FqElement> relaxed_extra;
};

SweepResult sweep_bsets(const FieldPtr& base, std::size_t s, const SearchOptions& opts = {},
                        bool relaxed = false,
                        const std::optional<FqElement>& only_chi = std::nullopt);

BSet compute_B(const FieldPtr& base, std::size_t s, const FqElement& chi,
               const SearchOptions& opts = {});

// R_{q,s,alpha} = prod_{i=1..s} (T^q - T - alpha^(q^i)), computed over
// F_{q^s} and descended to F_q.
DensePoly build_R(const FqElement& alpha, std::size_t s, const FieldPtr& base);

// Theorem-driven searches. search_fixed sweeps every chi in F_q^x (distinct
// trace values on one F_p-line can carry different B-sets, so a per-line
// representative is not enough); search_nonfixed sweeps chi = 0. Both verify
// every emitted prime against the definition and the criterion and check the
// (q/p)*|B| count identity; violations raise CriterionMismatch.
std::vector<WieferichRecord> search_fixed(const FieldPtr& base, std::size_t s,
                                          const SearchOptions& opts = {});
std::vector<WieferichRecord> search_nonfixed(const FieldPtr& base, std::size_t s, bool relaxed,
                                             const SearchOptions& opts = {});

// The naive search: factor gcd([n], F_{n-1}) with the recurrence run mod [n].
// Finds every c-Wieferich prime of degree dividing n.
std::vector<WieferichRecord> algorithm1(const FieldPtr& base, std::size_t n,
                                        const SearchOptions& opts = {});

// Re-runs both criteria and the stabilizer check from the record alone.
bool verify_record(const WieferichRecord& r);

// Append-only JSON-lines result cache, one record per line. A search key
// (field spec, s, variant) is considered cached when at least one record for
// it is present; empty sweeps are recomputed.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  static std::string key_fixed(const std::string& field_spec, std::size_t s);
  static std::string key_nonfixed(const std::string& field_spec, std::size_t s);

  bool has(const std::string& key) const;
  std::vector<WieferichRecord> get(const std::string& key) const;
  void append(const std::vector<WieferichRecord>& records);

  static std::string key_of(const WieferichRecord& r);

 private:
  std::string path_;
  std::map<std::string, std::vector<WieferichRecord>> by_key_;
};

}  // namespace cwprimes

#endif  // CWPRIMES_SEARCH_HPP_
