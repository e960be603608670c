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

#include "cwprimes/search.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <thread>

#include <json.hpp>

#include "cwprimes/text.hpp"
#include "flat_ops.hpp"

namespace cwprimes {

using namespace flat;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&tt, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

FieldPtr working_extension(const FieldPtr& base, std::size_t s, const SearchOptions& opts) {
  if (s == 1) return base;
  if (opts.ext_minpoly) {
    if (opts.ext_minpoly->degree() != static_cast<long>(s))
      throw ParseError("explicit extension minpoly has the wrong degree");
    return mk_extension(base, *opts.ext_minpoly);
  }
  return mk_extension_deg(base, s);
}

// Per-worker evaluator of the scalar F recurrence over the conjugate chain.
class FTester {
 public:
  FTester(const FieldNode& ext, std::size_t s, std::size_t p_char)
      : F_(ext), w_(ext.abs_degree()), s_(s), n_mid_(s - 1), n_full_(p_char * s - 1) {
    b_.resize(w_);
    f_.resize(w_);
    tmp_.resize(w_);
    one_.resize(w_);
    minus_one_.resize(w_);
    F_.set_one(one_);
    F_.neg(ConstWordSpan(one_), WordSpan(minus_one_));
  }

  // Runs to n_full, snapshotting vanishing at n_mid.
  void run(const Word* chain, std::size_t period, bool& mid_zero, bool& full_zero) {
    vec_zero(b_.data(), w_);
    F_.set_one(f_);
    mid_zero = false;  // F_0 = 1, so n_mid = 0 never vanishes
    for (std::size_t i = 1; i <= n_full_; ++i) {
      vec_add_into(b_.data(), chain + ((i - 1) % period) * w_, w_, F_.characteristic());
      F_.mul(b_, f_, tmp_);
      F_.add(tmp_, (i % 2 == 1) ? ConstWordSpan(minus_one_) : ConstWordSpan(one_), f_);
      if (i == n_mid_) mid_zero = F_.is_zero(f_);
    }
    full_zero = F_.is_zero(f_);
  }

 private:
  const FieldNode& F_;
  std::size_t w_, s_, n_mid_, n_full_;
  std::vector<Word> b_, f_, tmp_, one_, minus_one_;
};

struct ChunkHits {
  // (trace words, alpha words) for chi != 0 passes, in candidate order.
  std::vector<std::pair<std::vector<Word>, std::vector<Word>>> fixed;
  std::vector<std::vector<Word>> nonfixed;
  std::vector<std::vector<Word>> relaxed_extra;
};

}  // namespace

SweepResult sweep_bsets(const FieldPtr& base, std::size_t s, const SearchOptions& opts,
                        bool relaxed, const std::optional<FqElement>& only_chi) {
  SweepResult out;
  out.base = base;
  out.ext = working_extension(base, s, opts);
  out.s = s;
  const FieldPtr& ext = out.ext;
  if (ext->order() > opts.max_candidates)
    throw ResourceBudget("candidate space exceeds max_candidates");

  const std::uint64_t count = ext->order();
  const std::size_t chunk = std::max<std::size_t>(opts.chunk, 64);
  const std::uint64_t n_chunks = (count + chunk - 1) / chunk;
  std::size_t workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<std::size_t>(workers, static_cast<std::size_t>(n_chunks));

  const std::size_t w = ext->abs_degree();
  std::optional<std::vector<Word>> chi_filter;
  bool chi_filter_zero = false;
  if (only_chi) {
    if (!only_chi->field()->same_field(*base)) throw FieldMismatch("chi must live in the base");
    chi_filter = std::vector<Word>(w, 0);
    std::copy(only_chi->flat().begin(), only_chi->flat().end(), chi_filter->begin());
    chi_filter_zero = only_chi->is_zero();
  }

  std::vector<ChunkHits> hits(static_cast<std::size_t>(n_chunks));
  std::atomic<std::uint64_t> next{0};

  auto worker_fn = [&]() {
    OrbitScanner scan(ext, base);
    FTester tester(*ext, s, base->characteristic());
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      ChunkHits& h = hits[static_cast<std::size_t>(c)];
      const std::uint64_t lo = c * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, count);
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const auto& cand = scan.load(idx);
        if (!cand.is_rep) continue;
        const bool full_degree = cand.period == s;
        if (!full_degree && !relaxed) continue;
        const bool trace_zero = vec_is_zero(cand.trace.data(), w);
        if (chi_filter) {
          if (chi_filter_zero != trace_zero) continue;
          if (!trace_zero && !vec_equal(cand.trace.data(), chi_filter->data(), w)) continue;
        }
        if (!full_degree && !trace_zero) continue;  // relaxed mode is a chi = 0 sweep
        bool mid_zero = false, full_zero = false;
        tester.run(cand.conjugates, cand.period, mid_zero, full_zero);
        if (trace_zero) {
          if (!mid_zero) continue;
          auto alpha = std::vector<Word>(cand.alpha.begin(), cand.alpha.end());
          if (full_degree)
            h.nonfixed.push_back(std::move(alpha));
          else
            h.relaxed_extra.push_back(std::move(alpha));
        } else if (full_degree && full_zero) {
          h.fixed.emplace_back(std::vector<Word>(cand.trace.begin(), cand.trace.end()),
                               std::vector<Word>(cand.alpha.begin(), cand.alpha.end()));
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker_fn);
  worker_fn();
  for (auto& th : pool) th.join();

  // Merge in chunk order (= canonical candidate order).
  std::map<std::vector<Word>, std::vector<FqElement>> fixed_by_chi;
  for (const ChunkHits& h : hits) {
    for (const auto& [tr, alpha] : h.fixed)
      fixed_by_chi[tr].emplace_back(ext, alpha);
    for (const auto& alpha : h.nonfixed) out.nonfixed.emplace_back(ext, alpha);
    for (const auto& alpha : h.relaxed_extra) out.relaxed_extra.emplace_back(ext, alpha);
  }
  for (auto& [tr_words, members] : fixed_by_chi) {
    FqElement tr(out.ext, tr_words);
    out.fixed.emplace_back(tr.descended_to(base), std::move(members));
  }
  // std::map keys are flat encodings of the trace, already canonical order.
  return out;
}

BSet compute_B(const FieldPtr& base, std::size_t s, const FqElement& chi,
               const SearchOptions& opts) {
  SweepResult sweep = sweep_bsets(base, s, opts, false, chi);
  BSet b;
  b.base = base;
  b.ext = sweep.ext;
  b.s = s;
  b.chi = chi;
  if (chi.is_zero()) {
    b.members = std::move(sweep.nonfixed);
  } else if (!sweep.fixed.empty()) {
    b.members = std::move(sweep.fixed.front().second);
  }
  return b;
}

DensePoly build_R(const FqElement& alpha, std::size_t s, const FieldPtr& base) {
  const FieldPtr& K = alpha.field();
  if (K->rel_degree_over(*base) != s)
    throw FieldMismatch("alpha must live in the degree-s working extension");
  const std::uint64_t q = base->order();
  const std::size_t w = K->abs_degree();
  FpMatrix frob_q = K->frobenius_matrix(base->abs_degree() % w);

  DensePoly product = DensePoly::one(K);
  std::vector<Word> conj(alpha.flat().begin(), alpha.flat().end());
  std::vector<Word> next(w);
  for (std::size_t i = 1; i <= s; ++i) {
    frob_q.apply(conj.data(), next.data());
    conj.swap(next);  // alpha^(q^i)
    DensePoly fac(K);
    fac.words().assign((static_cast<std::size_t>(q) + 1) * w, 0);
    K->set_one(WordSpan(fac.words().data() + q * w, w));
    std::vector<Word> mone(w);
    K->set_one(mone);
    K->neg(ConstWordSpan(mone), WordSpan(mone));
    std::copy(mone.begin(), mone.end(), fac.words().begin() + w);
    std::vector<Word> neg_conj(w);
    K->neg(ConstWordSpan(conj), WordSpan(neg_conj));
    std::copy(neg_conj.begin(), neg_conj.end(), fac.words().begin());
    product = product * fac;
  }
  return descend_poly(product, base);
}

namespace {

enum class StabExpectation { kFixedOnTraceLine, kTrivial, kAny };

WieferichRecord make_record(const FieldPtr& base, const DensePoly& prime, std::size_t s,
                            StabExpectation expect, const FqElement* trace_chi,
                            const std::optional<FqElement>& alpha) {
  WieferichRecord r;
  r.field = field_spec(base);
  r.prime = to_string(prime);
  r.degree = static_cast<std::size_t>(prime.degree());
  std::vector<FqElement> stab = stabilizer(prime);
  switch (expect) {
    case StabExpectation::kFixedOnTraceLine:
      if (stab.size() != base->characteristic() ||
          TranslationGroup::from_generator(stab[1]) !=
              TranslationGroup::from_generator(*trace_chi))
        throw CriterionMismatch("fixed prime's stabilizer is off the expected chi-line");
      break;
    case StabExpectation::kTrivial:
      if (stab.size() != 1)
        throw CriterionMismatch("non-fixed search produced a translation-invariant prime");
      break;
    case StabExpectation::kAny:
      break;
  }
  if (stab.size() > 1) r.chi = to_string(stab[1]);
  if (alpha) r.alpha = to_string(*alpha);
  r.s = s;
  r.passed_definition = is_cwieferich(prime, CwMethod::kDefinition);
  r.passed_criterion = is_cwieferich(prime, CwMethod::kCriterion);
  if (!r.passed_definition || !r.passed_criterion)
    throw CriterionMismatch("emitted prime fails a c-Wieferich criterion: " + r.prime);
  r.discovered_at = now_iso8601();
  return r;
}

struct RecordWithPoly {
  WieferichRecord record;
  DensePoly poly;
};

std::vector<WieferichRecord> finish_records(std::vector<RecordWithPoly> rs) {
  std::sort(rs.begin(), rs.end(), [](const RecordWithPoly& a, const RecordWithPoly& b) {
    return canonical_less(a.poly, b.poly);
  });
  std::vector<WieferichRecord> out;
  out.reserve(rs.size());
  for (auto& r : rs) out.push_back(std::move(r.record));
  return out;
}

}  // namespace

std::vector<WieferichRecord> search_fixed(const FieldPtr& base, std::size_t s,
                                          const SearchOptions& opts) {
  if (base->order() < 3) throw Error("search_fixed requires q >= 3");
  const Word p = base->characteristic();
  const std::uint64_t q = base->order();
  SweepResult sweep = sweep_bsets(base, s, opts, false);

  Rng rng(opts.seed);
  std::vector<RecordWithPoly> found;
  std::set<std::vector<Word>> seen;
  for (const auto& [chi, members] : sweep.fixed) {
    std::size_t primes_for_chi = 0;
    for (const FqElement& alpha : members) {
      const DensePoly r_poly = build_R(alpha, s, base);
      for (const PolyFactor& pf : factor(r_poly, rng)) {
        if (pf.multiplicity != 1 || pf.factor.degree() != static_cast<long>(p) * static_cast<long>(s))
          throw CriterionMismatch("R-product factor with unexpected shape");
        if (!seen.insert(pf.factor.words()).second)
          throw CriterionMismatch("R-products from distinct orbits are not coprime");
        found.push_back(
            {make_record(base, pf.factor, s, StabExpectation::kFixedOnTraceLine, &chi, alpha),
             pf.factor});
        ++primes_for_chi;
      }
    }
    if (primes_for_chi != (q / p) * members.size())
      throw CriterionMismatch("fixed-search count identity (q/p)*|B| violated");
  }
  return finish_records(std::move(found));
}

std::vector<WieferichRecord> search_nonfixed(const FieldPtr& base, std::size_t s, bool relaxed,
                                             const SearchOptions& opts) {
  if (base->order() < 3) throw Error("search_nonfixed requires q >= 3");
  SweepResult sweep = sweep_bsets(base, s, opts, relaxed);

  Rng rng(opts.seed);
  std::vector<RecordWithPoly> found;
  std::set<std::vector<Word>> seen;
  auto emit_for_alpha = [&](const FqElement& alpha, bool strict_degree) {
    const DensePoly r_poly = build_R(alpha, s, base);
    for (const PolyFactor& pf : factor(r_poly, rng)) {
      if (strict_degree && pf.factor.degree() != static_cast<long>(s))
        throw CriterionMismatch("non-fixed R factor of unexpected degree");
      if (!seen.insert(pf.factor.words()).second) {
        if (strict_degree) throw CriterionMismatch("R-products from distinct orbits share a factor");
        continue;  // relaxed products repeat factors by construction
      }
      found.push_back({make_record(base, pf.factor, s,
                                   strict_degree ? StabExpectation::kTrivial : StabExpectation::kAny,
                                   nullptr, alpha),
                       pf.factor});
    }
  };
  for (const FqElement& alpha : sweep.nonfixed) emit_for_alpha(alpha, !relaxed);
  if (relaxed)
    for (const FqElement& alpha : sweep.relaxed_extra) emit_for_alpha(alpha, false);
  return finish_records(std::move(found));
}

std::vector<WieferichRecord> algorithm1(const FieldPtr& base, std::size_t n,
                                        const SearchOptions& opts) {
  if (n < 1) throw Error("algorithm1 requires n >= 1");
  const std::uint64_t q = base->order();
  unsigned __int128 fdeg = 0, qi = 1;
  for (std::size_t i = 1; i < n; ++i) {
    qi *= q;
    fdeg += qi;
    if (fdeg > opts.max_naive_coeffs)
      throw ResourceBudget("F_{n-1} exceeds the naive-search budget");
  }
  qi *= q;  // q^n
  const std::uint64_t qn = static_cast<std::uint64_t>(qi);

  // F_{n-1} computed with every product reduced mod the sparse [n]; since
  // deg F_{n-1} < q^n the reduction is a no-op, but it pins the contract.
  const std::size_t w = base->abs_degree();
  const Word p = base->characteristic();
  auto reduce_mod_bracket = [&](DensePoly& f) {
    while (static_cast<std::uint64_t>(f.degree()) >= qn) {
      const std::size_t d = static_cast<std::size_t>(f.degree());
      // T^d = T^(d - q^n + 1) mod [n]
      std::vector<Word> top(f.words().end() - w, f.words().end());
      f.words().resize(d * w);
      Word* slot = f.words().data() + (d - qn + 1) * w;
      vec_add_into(slot, top.data(), w, p);
      f.normalize();
    }
  };

  DensePoly f = DensePoly::one(base);
  const DensePoly one = DensePoly::one(base);
  const DensePoly minus_one = -one;
  std::uint64_t qpow = 1;
  for (std::size_t i = 1; i < n; ++i) {
    qpow *= q;
    DensePoly shifted(base);
    shifted.words().assign(f.words().size() + qpow * w, 0);
    std::copy(f.words().begin(), f.words().end(), shifted.words().begin() + qpow * w);
    for (std::size_t k = 0; k < f.words().size(); ++k) {
      Word& slot = shifted.words()[w + k];
      slot = submod(slot, f.words()[k], p);
    }
    shifted.normalize();
    f = shifted + (i % 2 == 1 ? minus_one : one);
    reduce_mod_bracket(f);
  }

  std::vector<RecordWithPoly> found;
  if (f.degree() >= 1) {
    const DensePoly t_poly = DensePoly::T(base);
    DensePoly h = powmod_frobenius(t_poly, n, f, base) - mod(t_poly, f);
    DensePoly g = h.is_zero() ? f : gcd(f, h);
    if (g.degree() >= 1) {
      Rng rng(opts.seed);
      for (const PolyFactor& pf : factor(g, rng)) {
        if (n % static_cast<std::size_t>(pf.factor.degree()) != 0)
          throw CriterionMismatch("gcd([n], F_{n-1}) factor degree does not divide n");
        const std::size_t deg = static_cast<std::size_t>(pf.factor.degree());
        const bool fixed = stabilizer(pf.factor).size() > 1;
        const std::size_t s_val = fixed ? deg / p : deg;
        found.push_back({make_record(base, pf.factor, s_val, StabExpectation::kAny, nullptr,
                                     std::nullopt),
                         pf.factor});
      }
    }
  }
  return finish_records(std::move(found));
}

// --- records and cache -------------------------------------------------------------

std::string record_to_json(const WieferichRecord& r) {
  ordered_json j;
  j["field"] = r.field;
  j["prime"] = r.prime;
  j["degree"] = r.degree;
  j["chi"] = r.chi ? ordered_json(*r.chi) : ordered_json(nullptr);
  j["alpha"] = r.alpha ? ordered_json(*r.alpha) : ordered_json(nullptr);
  ordered_json criteria = ordered_json::array();
  if (r.passed_definition) criteria.push_back("definition");
  if (r.passed_criterion) criteria.push_back("criterion");
  j["criteria"] = criteria;
  j["s"] = r.s;
  return j.dump();
}

WieferichRecord record_from_json(const std::string& line) {
  WieferichRecord r;
  ordered_json j;
  try {
    j = ordered_json::parse(line);
    r.field = j.at("field").get<std::string>();
    r.prime = j.at("prime").get<std::string>();
    r.degree = j.at("degree").get<std::size_t>();
    if (!j.at("chi").is_null()) r.chi = j.at("chi").get<std::string>();
    if (!j.at("alpha").is_null()) r.alpha = j.at("alpha").get<std::string>();
    for (const auto& c : j.at("criteria")) {
      if (c == "definition") r.passed_definition = true;
      if (c == "criterion") r.passed_criterion = true;
    }
    r.s = j.at("s").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad record line: ") + e.what());
  }
  return r;
}

bool verify_record(const WieferichRecord& r) {
  FieldPtr base = parse_field_spec(r.field);
  DensePoly prime = parse_poly(base, r.prime);
  if (prime.degree() < 1 || static_cast<std::size_t>(prime.degree()) != r.degree) return false;
  if (!prime.is_monic() || !is_irreducible(prime)) return false;
  if (!is_cwieferich(prime, CwMethod::kDefinition)) return false;
  if (!is_cwieferich(prime, CwMethod::kCriterion)) return false;
  std::vector<FqElement> stab = stabilizer(prime);
  if (r.chi) {
    if (stab.size() != base->characteristic()) return false;
    FqElement chi = parse_element(base, *r.chi);
    return TranslationGroup::from_generator(stab[1]) == TranslationGroup::from_generator(chi);
  }
  return stab.size() == 1;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    WieferichRecord r = record_from_json(line);
    by_key_[key_of(r)].push_back(std::move(r));
  }
}

std::string ResultCache::key_fixed(const std::string& field_spec, std::size_t s) {
  return field_spec + "|s=" + std::to_string(s) + "|fixed";
}

std::string ResultCache::key_nonfixed(const std::string& field_spec, std::size_t s) {
  return field_spec + "|s=" + std::to_string(s) + "|nonfixed";
}

std::string ResultCache::key_of(const WieferichRecord& r) {
  return r.chi ? key_fixed(r.field, r.s) : key_nonfixed(r.field, r.s);
}

bool ResultCache::has(const std::string& key) const { return by_key_.count(key) > 0; }

std::vector<WieferichRecord> ResultCache::get(const std::string& key) const {
  auto it = by_key_.find(key);
  return it == by_key_.end() ? std::vector<WieferichRecord>{} : it->second;
}

void ResultCache::append(const std::vector<WieferichRecord>& records) {
  if (records.empty()) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot open result cache for appending: " + path_);
  for (const WieferichRecord& r : records) {
    out << record_to_json(r) << "\n";
    by_key_[key_of(r)].push_back(r);
  }
}

}  // namespace cwprimes
