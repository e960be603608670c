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

#include "cwprimes/field.hpp"

#include <algorithm>
#include <cassert>

#include "flat_ops.hpp"

namespace cwprimes {

using namespace flat;

// --- FpMatrix ----------------------------------------------------------------

FpMatrix FpMatrix::identity(std::size_t n, Word p) {
  FpMatrix m(n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

void FpMatrix::apply(const Word* src, Word* dst) const {
  // dst = sum_j src[j] * col_j, accumulated lazily in 64 bits. With p < 2^16
  // up to 2^32 terms fit; larger p reduces per step.
  if (p_ < (1u << 16)) {
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < n_; ++j) acc += static_cast<std::uint64_t>(src[j]) * col_[j * n_ + i];
      dst[i] = static_cast<Word>(acc % p_);
    }
  } else {
    for (std::size_t i = 0; i < n_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        acc += static_cast<std::uint64_t>(src[j]) * col_[j * n_ + i] % p_;
        if (acc >= (std::uint64_t{1} << 62)) acc %= p_;
      }
      dst[i] = static_cast<Word>(acc % p_);
    }
  }
}

FpMatrix FpMatrix::compose(const FpMatrix& rhs) const {
  FpMatrix out(n_, p_);
  std::vector<Word> tmp(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    apply(&rhs.col_[c * n_], tmp.data());
    std::copy(tmp.begin(), tmp.end(), &out.col_[c * n_]);
  }
  return out;
}

FpMatrix FpMatrix::power(std::uint64_t k) const {
  FpMatrix result = identity(n_, p_);
  FpMatrix base = *this;
  while (k) {
    if (k & 1) result = result.compose(base);
    k >>= 1;
    base = base.compose(base);
  }
  return result;
}

// --- multiplication scratch ---------------------------------------------------

namespace {
thread_local std::vector<Word> tl_mul_scratch;
}

// --- FieldNode ---------------------------------------------------------------

ConstWordSpan FieldNode::minpoly_coeff(std::size_t j) const {
  const std::size_t wp = parent_->abs_degree();
  return ConstWordSpan(minpoly_.data() + j * wp, wp);
}

bool FieldNode::same_field(const FieldNode& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || p_ != other.p_ || sdeg_ != other.sdeg_ || w_ != other.w_)
    return false;
  if (kind_ == Kind::kPrime) return true;
  if (minpoly_ != other.minpoly_) return false;
  return parent_->same_field(*other.parent_);
}

bool FieldNode::has_ancestor(const FieldNode& base) const {
  const FieldNode* cur = this;
  while (cur != nullptr) {
    if (cur->same_field(base)) return true;
    cur = cur->parent_.get();
  }
  return false;
}

std::size_t FieldNode::rel_degree_over(const FieldNode& base) const {
  std::size_t s = 1;
  const FieldNode* cur = this;
  while (cur != nullptr) {
    if (cur->same_field(base)) return s;
    s *= cur->sdeg_;
    cur = cur->parent_.get();
  }
  throw FieldMismatch("base field is not an ancestor");
}

void FieldNode::set_zero(WordSpan a) const { vec_zero(a.data(), w_); }

void FieldNode::set_one(WordSpan a) const {
  vec_zero(a.data(), w_);
  a[0] = 1 % p_;
}

void FieldNode::set_residue(WordSpan a, std::uint64_t r) const {
  vec_zero(a.data(), w_);
  a[0] = static_cast<Word>(r % p_);
}

bool FieldNode::is_zero(ConstWordSpan a) const { return vec_is_zero(a.data(), w_); }

bool FieldNode::equal(ConstWordSpan a, ConstWordSpan b) const {
  return vec_equal(a.data(), b.data(), w_);
}

bool FieldNode::less(ConstWordSpan a, ConstWordSpan b) const {
  return vec_less(a.data(), b.data(), w_);
}

void FieldNode::add(ConstWordSpan a, ConstWordSpan b, WordSpan dst) const {
  vec_add(dst.data(), a.data(), b.data(), w_, p_);
}

void FieldNode::sub(ConstWordSpan a, ConstWordSpan b, WordSpan dst) const {
  vec_sub(dst.data(), a.data(), b.data(), w_, p_);
}

void FieldNode::neg(ConstWordSpan a, WordSpan dst) const {
  vec_neg(dst.data(), a.data(), w_, p_);
}

void FieldNode::mul_rec(const Word* a, const Word* b, Word* dst, Word* scratch) const {
  if (kind_ == Kind::kPrime) {
    dst[0] = mulmod(a[0], b[0], p_);
    return;
  }
  const FieldNode& par = *parent_;
  const std::size_t wp = par.w_;
  const std::size_t s = sdeg_;
  Word* acc = scratch;
  const std::size_t acc_words = (2 * s - 1) * wp;
  Word* prod = acc + acc_words;
  Word* child = prod + wp;

  vec_zero(acc, acc_words);
  for (std::size_t i = 0; i < s; ++i) {
    const Word* ai = a + i * wp;
    if (vec_is_zero(ai, wp)) continue;
    for (std::size_t j = 0; j < s; ++j) {
      const Word* bj = b + j * wp;
      if (vec_is_zero(bj, wp)) continue;
      par.mul_rec(ai, bj, prod, child);
      vec_add_into(acc + (i + j) * wp, prod, wp, p_);
    }
  }
  // Reduce x^d for d = 2s-2 .. s using x^s = sum_j neg_minpoly[j] x^j.
  for (std::size_t d = 2 * s - 2; d >= s; --d) {
    Word* slot = acc + d * wp;
    if (!vec_is_zero(slot, wp)) {
      for (std::size_t j = 0; j < s; ++j) {
        const Word* nm = neg_minpoly_.data() + j * wp;
        if (vec_is_zero(nm, wp)) continue;
        par.mul_rec(slot, nm, prod, child);
        vec_add_into(acc + (d - s + j) * wp, prod, wp, p_);
      }
    }
    if (d == s) break;
  }
  std::copy(acc, acc + s * wp, dst);
}

void FieldNode::mul(ConstWordSpan a, ConstWordSpan b, WordSpan dst) const {
  if (kind_ == Kind::kPrime) {
    dst[0] = mulmod(a[0], b[0], p_);
    return;
  }
  if (tl_mul_scratch.size() < scratch_words_) tl_mul_scratch.resize(scratch_words_);
  mul_rec(a.data(), b.data(), dst.data(), tl_mul_scratch.data());
}

void FieldNode::pow(ConstWordSpan a, std::uint64_t e, WordSpan dst) const {
  std::vector<Word> base(a.begin(), a.end());
  std::vector<Word> acc(w_), tmp(w_);
  set_one(acc);
  while (e) {
    if (e & 1) {
      mul(acc, base, tmp);
      acc.swap(tmp);
    }
    e >>= 1;
    if (e) {
      mul(base, base, tmp);
      base.swap(tmp);
    }
  }
  std::copy(acc.begin(), acc.end(), dst.begin());
}

void FieldNode::inv(ConstWordSpan a, WordSpan dst) const {
  if (is_zero(a)) throw DivideByZero("field inverse of zero");
  if (kind_ == Kind::kPrime) {
    dst[0] = invmod(a[0], p_);
    return;
  }
  pow(a, order_ - 2, dst);
}

FpMatrix FieldNode::frobenius_matrix(std::uint64_t pk) const {
  pk %= w_;  // x^(p^w) = x
  if (kind_ == Kind::kPrime || pk == 0) return FpMatrix::identity(w_, p_);
  FpMatrix m = frob_p_;
  for (std::uint64_t i = 1; i < pk; ++i) m = m.compose(frob_p_);
  return m;
}

// --- prime field factory ------------------------------------------------------

namespace {
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

FieldPtr mk_prime_field(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31))
    throw CompositeCharacteristic("characteristic must be a prime below 2^31");
  if (!is_prime_u64(p)) throw CompositeCharacteristic("characteristic is not prime");
  auto node = std::shared_ptr<FieldNode>(new FieldNode());
  node->kind_ = FieldNode::Kind::kPrime;
  node->p_ = static_cast<Word>(p);
  node->sdeg_ = 1;
  node->w_ = 1;
  node->order_ = p;
  return node;
}

// --- FqElement ----------------------------------------------------------------

FqElement FqElement::one(const FieldPtr& f) {
  FqElement e(f);
  f->set_one(e.v_);
  return e;
}

FqElement FqElement::from_residue(const FieldPtr& f, std::uint64_t r) {
  FqElement e(f);
  f->set_residue(e.v_, r);
  return e;
}

FqElement FqElement::generator(const FieldPtr& f) {
  if (f->kind() != FieldNode::Kind::kExtension)
    throw FieldMismatch("prime field has no tower generator");
  FqElement e(f);
  e.v_[f->parent()->abs_degree()] = 1;
  return e;
}

void FqElement::check_same(const FqElement& o) const {
  if (!f_ || !o.f_ || !f_->same_field(*o.f_)) throw FieldMismatch("element field mismatch");
}

FqElement FqElement::operator+(const FqElement& o) const {
  check_same(o);
  FqElement r(f_);
  f_->add(v_, o.v_, r.v_);
  return r;
}

FqElement FqElement::operator-(const FqElement& o) const {
  check_same(o);
  FqElement r(f_);
  f_->sub(v_, o.v_, r.v_);
  return r;
}

FqElement FqElement::operator*(const FqElement& o) const {
  check_same(o);
  FqElement r(f_);
  f_->mul(v_, o.v_, r.v_);
  return r;
}

FqElement FqElement::operator/(const FqElement& o) const {
  check_same(o);
  FqElement r(f_);
  f_->inv(o.v_, r.v_);
  FqElement out(f_);
  f_->mul(v_, r.v_, out.v_);
  return out;
}

FqElement FqElement::operator-() const {
  FqElement r(f_);
  f_->neg(v_, r.v_);
  return r;
}

bool FqElement::operator==(const FqElement& o) const {
  if (!f_ || !o.f_) return f_ == o.f_;
  return f_->same_field(*o.f_) && v_ == o.v_;
}

FqElement FqElement::pow(std::uint64_t e) const {
  FqElement r(f_);
  f_->pow(v_, e, r.v_);
  return r;
}

FqElement FqElement::inverse() const {
  FqElement r(f_);
  f_->inv(v_, r.v_);
  return r;
}

FqElement FqElement::promoted_to(const FieldPtr& ext) const {
  if (!ext->has_ancestor(*f_)) throw FieldMismatch("promotion target is not an extension");
  FqElement r(ext);
  std::copy(v_.begin(), v_.end(), r.v_.begin());
  return r;
}

FqElement FqElement::descended_to(const FieldPtr& base) const {
  if (!f_->has_ancestor(*base)) throw FieldMismatch("descent target is not an ancestor");
  const std::size_t wb = base->abs_degree();
  for (std::size_t k = wb; k < v_.size(); ++k)
    if (v_[k] != 0) throw NotInSubfield("element does not lie in the subfield");
  FqElement r(base);
  std::copy(v_.begin(), v_.begin() + wb, r.v_.begin());
  return r;
}

bool FqElement::lies_in(const FieldPtr& base) const {
  if (!f_->has_ancestor(*base)) return false;
  for (std::size_t k = base->abs_degree(); k < v_.size(); ++k)
    if (v_[k] != 0) return false;
  return true;
}

bool canonical_less(const FqElement& a, const FqElement& b) {
  return a.field()->less(a.flat(), b.flat());
}

// --- relative maps -------------------------------------------------------------

FqElement frobenius_power(const FqElement& x, std::uint64_t i, const FieldPtr& base) {
  const FieldPtr& f = x.field();
  if (!f->has_ancestor(*base)) throw FieldMismatch("base is not an ancestor of the element field");
  const std::uint64_t e = (static_cast<std::uint64_t>(base->abs_degree()) * i) % f->abs_degree();
  FpMatrix m = f->frobenius_matrix(e);
  FqElement r(f);
  m.apply(x.flat().data(), r.words().data());
  return r;
}

FqElement rel_trace(const FqElement& x, const FieldPtr& base) {
  const FieldPtr& f = x.field();
  const std::size_t s = f->rel_degree_over(*base);
  FpMatrix m = f->frobenius_matrix(base->abs_degree() % f->abs_degree());
  std::vector<Word> cur(x.flat().begin(), x.flat().end());
  std::vector<Word> next(f->abs_degree());
  FqElement acc = x;
  for (std::size_t i = 1; i < s; ++i) {
    m.apply(cur.data(), next.data());
    cur.swap(next);
    f->add(acc.flat(), ConstWordSpan(cur), acc.words());
  }
  if (!acc.lies_in(base)) throw Error("relative trace escaped the base field");
  return acc.descended_to(base);
}

std::size_t degree_over(const FqElement& x, const FieldPtr& base) {
  const FieldPtr& f = x.field();
  const std::size_t s = f->rel_degree_over(*base);
  FpMatrix m = f->frobenius_matrix(base->abs_degree() % f->abs_degree());
  std::vector<Word> cur(x.flat().begin(), x.flat().end());
  std::vector<Word> next(f->abs_degree());
  for (std::size_t d = 1; d <= s; ++d) {
    m.apply(cur.data(), next.data());
    cur.swap(next);
    if (vec_equal(cur.data(), x.flat().data(), f->abs_degree())) {
      assert(s % d == 0);
      return d;
    }
  }
  throw Error("degree_over: Frobenius orbit did not close");
}

// --- orbit enumeration ----------------------------------------------------------

OrbitScanner::OrbitScanner(FieldPtr field, FieldPtr base)
    : field_(std::move(field)), base_(std::move(base)) {
  s_ = field_->rel_degree_over(*base_);
  w_ = field_->abs_degree();
  count_ = field_->order();
  frob_q_ = field_->frobenius_matrix(base_->abs_degree() % w_);
  alpha_.resize(w_);
  chain_.resize(s_ * w_);
  trace_.resize(w_);
}

const OrbitScanner::Candidate& OrbitScanner::load(std::uint64_t index) {
  const Word p = field_->characteristic();
  // Mixed-radix decode, word 0 most significant, so ascending index is
  // ascending canonical element order.
  for (std::size_t k = w_; k-- > 0;) {
    alpha_[k] = static_cast<Word>(index % p);
    index /= p;
  }
  cand_.alpha = ConstWordSpan(alpha_);
  cand_.is_rep = true;
  cand_.period = s_;
  cand_.conjugates = chain_.data();
  std::copy(alpha_.begin(), alpha_.end(), chain_.begin());
  for (std::size_t j = 1; j < s_; ++j) {
    frob_q_.apply(&chain_[(j - 1) * w_], &chain_[j * w_]);
    if (vec_equal(&chain_[j * w_], alpha_.data(), w_)) {
      cand_.period = j;
      break;
    }
    if (vec_less(&chain_[j * w_], alpha_.data(), w_)) {
      cand_.is_rep = false;
      return cand_;
    }
  }
  vec_zero(trace_.data(), w_);
  for (std::size_t i = 0; i < s_; ++i)
    vec_add_into(trace_.data(), &chain_[(i % cand_.period) * w_], w_, p);
  cand_.trace = ConstWordSpan(trace_);
  return cand_;
}

std::vector<FqElement> enumerate_orbit_reps(const FieldPtr& field, const FieldPtr& base,
                                            std::size_t s) {
  if (field->rel_degree_over(*base) != s)
    throw FieldMismatch("field does not have relative degree s over base");
  OrbitScanner scan(field, base);
  std::vector<FqElement> reps;
  for (std::uint64_t i = 0; i < scan.candidate_count(); ++i) {
    const auto& c = scan.load(i);
    if (c.is_rep && c.period == s)
      reps.emplace_back(field, std::vector<Word>(c.alpha.begin(), c.alpha.end()));
  }
  return reps;
}

}  // namespace cwprimes
