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

#include "cwprimes/carlitz.hpp"

#include <algorithm>

#include "flat_ops.hpp"

namespace cwprimes {

using namespace flat;

// --- TwistedPoly -----------------------------------------------------------------

TwistedPoly TwistedPoly::one(const FieldPtr& base) {
  TwistedPoly r(base);
  r.c_.push_back(DensePoly::one(base));
  return r;
}

TwistedPoly TwistedPoly::tau(const FieldPtr& base) {
  TwistedPoly r(base);
  r.c_.push_back(DensePoly::zero(base));
  r.c_.push_back(DensePoly::one(base));
  return r;
}

TwistedPoly TwistedPoly::from_coeffs(const FieldPtr& base, std::vector<DensePoly> coeffs) {
  TwistedPoly r(base);
  r.c_ = std::move(coeffs);
  r.normalize();
  return r;
}

DensePoly TwistedPoly::coeff(std::size_t i) const {
  if (i >= c_.size()) return DensePoly::zero(base_);
  return c_[i];
}

void TwistedPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly TwistedPoly::operator+(const TwistedPoly& o) const {
  if (!base_->same_field(*o.base_)) throw FieldMismatch("twisted polynomial field mismatch");
  TwistedPoly r(base_);
  const std::size_t n = std::max(c_.size(), o.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    DensePoly a = i < c_.size() ? c_[i] : DensePoly::zero(base_);
    DensePoly b = i < o.c_.size() ? o.c_[i] : DensePoly::zero(base_);
    r.c_.push_back(a + b);
  }
  r.normalize();
  return r;
}

bool TwistedPoly::operator==(const TwistedPoly& o) const {
  if (!base_ || !o.base_) return base_ == o.base_;
  if (!base_->same_field(*o.base_) || c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

TwistedPoly twisted_mul(const TwistedPoly& a, const TwistedPoly& b) {
  if (!a.base()->same_field(*b.base())) throw FieldMismatch("twisted polynomial field mismatch");
  TwistedPoly r(a.base());
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t na = a.coeffs().size(), nb = b.coeffs().size();
  r.coeffs().assign(na + nb - 1, DensePoly::zero(a.base()));
  for (std::size_t i = 0; i < na; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    // tau^i moves past b_j as b_j^(q^i).
    for (std::size_t j = 0; j < nb; ++j) {
      DensePoly bj = b.coeffs()[j];
      if (bj.is_zero()) continue;
      for (std::size_t k = 0; k < i; ++k) bj = pow_q_spread(bj);
      r.coeffs()[i + j] = r.coeffs()[i + j] + a.coeffs()[i] * bj;
    }
  }
  r.normalize();
  return r;
}

TwistedPoly mul_scalar(const TwistedPoly& a, const FqElement& c) {
  TwistedPoly r(a.base());
  for (const DensePoly& ci : a.coeffs()) r.coeffs().push_back(mul_scalar(ci, c));
  r.normalize();
  return r;
}

TwistedPoly rho_coeffs(const DensePoly& N) {
  if (N.is_zero()) throw ZeroInput("rho of the zero polynomial");
  const FieldPtr& K = N.field();
  TwistedPoly rho_t = TwistedPoly::tau(K) + TwistedPoly::from_coeffs(K, {DensePoly::T(K)});
  TwistedPoly rho_tk = TwistedPoly::one(K);  // rho^(T^k), k = 0
  TwistedPoly acc(K);
  for (long k = 0; k <= N.degree(); ++k) {
    if (k > 0) rho_tk = twisted_mul(rho_t, rho_tk);
    FqElement nk = N.coeff(static_cast<std::size_t>(k));
    if (!nk.is_zero()) acc = acc + mul_scalar(rho_tk, nk);
  }
  return acc;
}

// --- BracketCache ------------------------------------------------------------------

BracketCache::BracketCache(FieldPtr field, std::size_t budget_words)
    : field_(std::move(field)), budget_words_(budget_words) {
  brackets_.push_back(DensePoly::one(field_));
  ls_.push_back(DensePoly::one(field_));
}

namespace {

// f * (T^(q^i) - T) through shifts; linear in the output size.
DensePoly mul_by_bracket(const DensePoly& f, std::uint64_t qi, const FieldPtr& K) {
  if (f.is_zero()) return f;
  const std::size_t w = K->abs_degree();
  const Word p = K->characteristic();
  const std::size_t nf = f.words().size();
  DensePoly r(K);
  r.words().assign(nf + static_cast<std::size_t>(qi) * w, 0);
  std::copy(f.words().begin(), f.words().end(), r.words().begin() + qi * w);
  // subtract T*f
  for (std::size_t k = 0; k < nf; ++k) {
    Word& slot = r.words()[w + k];
    slot = submod(slot, f.words()[k], p);
  }
  r.normalize();
  return r;
}

}  // namespace

void BracketCache::grow_to(std::size_t i) {
  while (brackets_.size() <= i) {
    const std::size_t j = brackets_.size();  // building [j]
    DensePoly direct = cwprimes::bracket(field_, static_cast<std::uint64_t>(j));
    if (j >= 2) {
      // Recurrence check: [j] == [1]^(q^(j-1)) + [j-1].
      DensePoly spread = brackets_[1];
      for (std::size_t k = 0; k + 1 < j; ++k) spread = pow_q_spread(spread);
      if (spread + brackets_[j - 1] != direct)
        throw Error("bracket recurrence check failed on insert");
    }
    used_words_ += direct.words().size();
    // L_j = [j] * L_{j-1}; the bracket has degree q^j.
    unsigned __int128 qj = 1;
    for (std::size_t k = 0; k < j; ++k) qj *= field_->order();
    DensePoly lj = mul_by_bracket(ls_[j - 1], static_cast<std::uint64_t>(qj), field_);
    used_words_ += lj.words().size();
    if (used_words_ > budget_words_) throw ResourceBudget("bracket cache budget exceeded");
    brackets_.push_back(std::move(direct));
    ls_.push_back(std::move(lj));
  }
}

DensePoly BracketCache::bracket(std::size_t i) {
  std::lock_guard<std::mutex> lock(mu_);
  grow_to(i);
  return brackets_[i];
}

DensePoly BracketCache::L(std::size_t i) {
  std::lock_guard<std::mutex> lock(mu_);
  grow_to(i);
  return ls_[i];
}

// --- Carlitz action ------------------------------------------------------------------

DensePoly carlitz_eval_mod(const DensePoly& N, const DensePoly& a, const DensePoly& M) {
  if (M.is_zero()) throw DivideByZero("carlitz evaluation modulus is zero");
  const FieldPtr& K = M.field();
  if (!N.valid() || !N.field()->same_field(*K) || !a.field()->same_field(*K))
    throw FieldMismatch("carlitz evaluation field mismatch");
  const std::uint64_t q = K->order();
  const DensePoly t_poly = mod(DensePoly::T(K), M);
  DensePoly u = mod(a, M);
  DensePoly acc = DensePoly::zero(K);
  for (long k = 0; k <= N.degree(); ++k) {
    FqElement nk = N.coeff(static_cast<std::size_t>(k));
    if (!nk.is_zero()) acc = acc + mul_scalar(u, nk);
    if (k < N.degree()) u = mod(powmod(u, q, M) + t_poly * u, M);
  }
  return mod(acc, M);
}

DensePoly f_sequence_exact(std::size_t n, BracketCache& cache, std::size_t max_coeffs) {
  const FieldPtr& K = cache.field();
  unsigned __int128 degree = 0, qi = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    qi *= K->order();
    degree += qi;
    if (degree > max_coeffs)
      throw ResourceBudget("exact F_n degree exceeds the coefficient budget; use f_sequence_mod");
  }
  DensePoly f = DensePoly::one(K);
  const FqElement minus_one = -FqElement::one(K);
  std::uint64_t qpow = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    qpow *= K->order();
    cache.bracket(i);  // keeps the cache's invariant checks on the hot path
    DensePoly next = mul_by_bracket(f, qpow, K);
    if (i % 2 == 1)
      next = next + DensePoly::constant(minus_one);
    else
      next = next + DensePoly::one(K);
    f = std::move(next);
  }
  return f;
}

DensePoly f_sequence_mod(std::size_t n, const DensePoly& M, const FieldPtr& base) {
  if (M.is_zero()) throw DivideByZero("f_sequence_mod modulus is zero");
  const FieldPtr& K = M.field();
  const FieldPtr q_field = base ? base : K;
  if (!K->has_ancestor(*q_field))
    throw FieldMismatch("f_sequence_mod base must be an ancestor of the modulus field");
  const std::uint64_t q = q_field->order();
  const DensePoly t_poly = mod(DensePoly::T(K), M);
  DensePoly f = mod(DensePoly::one(K), M);
  DensePoly u = t_poly;  // T^(q^i) mod M
  const DensePoly one = DensePoly::one(K);
  const DensePoly minus_one = -one;
  for (std::size_t i = 1; i <= n; ++i) {
    u = powmod(u, q, M);
    const DensePoly bracket_i = u - t_poly;
    f = mod(bracket_i * f, M) + (i % 2 == 1 ? minus_one : one);
    f = mod(f, M);
  }
  return f;
}

FqElement f_sequence_scalar(std::size_t n, const FqElement& alpha, const FieldPtr& base) {
  const FieldPtr& F = alpha.field();
  if (!F->has_ancestor(*base)) throw FieldMismatch("alpha does not live above the base field");
  const std::size_t s = F->rel_degree_over(*base);
  const std::size_t w = F->abs_degree();
  FpMatrix frob_q = F->frobenius_matrix(base->abs_degree() % w);

  std::vector<Word> conj(s * w);
  std::copy(alpha.flat().begin(), alpha.flat().end(), conj.begin());
  for (std::size_t j = 1; j < s; ++j) frob_q.apply(&conj[(j - 1) * w], &conj[j * w]);

  std::vector<Word> b(w, 0), f(w), tmp(w);
  F->set_one(f);
  std::vector<Word> one(w), minus_one(w);
  F->set_one(one);
  F->neg(ConstWordSpan(one), minus_one);
  for (std::size_t i = 1; i <= n; ++i) {
    vec_add_into(b.data(), &conj[((i - 1) % s) * w], w, F->characteristic());
    F->mul(b, f, tmp);
    F->add(tmp, (i % 2 == 1) ? ConstWordSpan(minus_one) : ConstWordSpan(one), f);
  }
  return FqElement(F, std::move(f));
}

bool is_cwieferich(const DensePoly& P, CwMethod method) {
  if (P.degree() < 1 || !P.is_monic() || !is_irreducible(P))
    throw NotPrime("is_cwieferich input must be a monic prime");
  const FieldPtr& K = P.field();
  if (method == CwMethod::kDefinition) {
    const DensePoly p2 = P * P;
    const DensePoly n = P - DensePoly::one(K);
    return carlitz_eval_mod(n, DensePoly::one(K), p2).is_zero();
  }
  return f_sequence_mod(static_cast<std::size_t>(P.degree()) - 1, P).is_zero();
}

bool lemma_reduce_check(std::size_t s, std::size_t d, std::size_t ell, const DensePoly& Q) {
  if (Q.degree() != static_cast<long>(d) || !Q.is_monic() || !is_irreducible(Q))
    throw NotPrime("lemma_reduce_check needs a monic degree-d prime");
  if (ell >= d) throw Error("lemma_reduce_check needs 0 <= ell < d");
  const DensePoly lhs = f_sequence_mod(s * d + ell, Q);
  DensePoly rhs = f_sequence_mod(ell, Q);
  if ((s * d) % 2 == 1) rhs = -rhs;
  return lhs == mod(rhs, Q);
}

}  // namespace cwprimes
