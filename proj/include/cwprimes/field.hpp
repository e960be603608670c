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

#ifndef CWPRIMES_FIELD_HPP_
#define CWPRIMES_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cwprimes/errors.hpp"

namespace cwprimes {

class FieldNode;
class FqElement;
class DensePoly;

using FieldPtr = std::shared_ptr<const FieldNode>;
using Word = std::uint32_t;
using WordSpan = std::span<Word>;
using ConstWordSpan = std::span<const Word>;

// Dense matrix over F_p, column major. Used for the p-power Frobenius map,
// which is F_p-linear on any field in a tower, and for powers of it.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t n, Word p) : n_(n), p_(p), col_(n * n, 0) {}
  static FpMatrix identity(std::size_t n, Word p);

  std::size_t dim() const { return n_; }
  Word& at(std::size_t row, std::size_t colidx) { return col_[colidx * n_ + row]; }
  Word at(std::size_t row, std::size_t colidx) const { return col_[colidx * n_ + row]; }

  void apply(const Word* src, Word* dst) const;  // dst = M * src (dst != src)
  FpMatrix compose(const FpMatrix& rhs) const;   // returns (*this) * rhs
  FpMatrix power(std::uint64_t k) const;

 private:
  std::size_t n_ = 0;
  Word p_ = 0;
  std::vector<Word> col_;
};

// A node in an explicit tower of finite fields. Either a prime field F_p or
// an extension parent[x]/(minpoly). Immutable after construction and safe to
// share across threads.
//
// Elements of a node are stored flat as abs_degree() words over F_p in the
// nested tower basis: the first parent->abs_degree() words are the
// coefficient of x^0 (an element of the parent), the next block x^1, and so
// on. Consequently the embedding of an ancestor element is a plain copy into
// the leading words.
class FieldNode : public std::enable_shared_from_this<FieldNode> {
 public:
  enum class Kind { kPrime, kExtension };

  Kind kind() const { return kind_; }
  Word characteristic() const { return p_; }
  std::size_t rel_degree() const { return sdeg_; }
  std::size_t abs_degree() const { return w_; }
  std::uint64_t order() const { return order_; }
  const FieldPtr& parent() const { return parent_; }

  // Minpoly coefficient j (j < rel_degree) as a flat parent element.
  ConstWordSpan minpoly_coeff(std::size_t j) const;

  bool same_field(const FieldNode& other) const;
  bool has_ancestor(const FieldNode& base) const;
  // Product of relative degrees from this node down to `base`; throws
  // FieldMismatch if base is not on the ancestor chain.
  std::size_t rel_degree_over(const FieldNode& base) const;

  // --- flat element operations; all spans have length abs_degree() ---
  void set_zero(WordSpan a) const;
  void set_one(WordSpan a) const;
  void set_residue(WordSpan a, std::uint64_t r) const;
  bool is_zero(ConstWordSpan a) const;
  bool equal(ConstWordSpan a, ConstWordSpan b) const;
  // Lexicographic on words, index 0 most significant. The canonical order
  // used for orbit representatives, group generators and minpoly scans.
  bool less(ConstWordSpan a, ConstWordSpan b) const;

  void add(ConstWordSpan a, ConstWordSpan b, WordSpan dst) const;
  void sub(ConstWordSpan a, ConstWordSpan b, WordSpan dst) const;
  void neg(ConstWordSpan a, WordSpan dst) const;
  void mul(ConstWordSpan a, ConstWordSpan b, WordSpan dst) const;
  void pow(ConstWordSpan a, std::uint64_t e, WordSpan dst) const;
  void inv(ConstWordSpan a, WordSpan dst) const;  // throws DivideByZero on 0

  // x -> x^(p^k) as a matrix (k = 1 cached; higher powers composed).
  FpMatrix frobenius_matrix(std::uint64_t pk = 1) const;

  ~FieldNode() = default;

 private:
  FieldNode() = default;
  friend FieldPtr mk_prime_field(std::uint64_t p);
  friend FieldPtr mk_extension(const FieldPtr& base, const DensePoly& minpoly);

  void mul_rec(const Word* a, const Word* b, Word* dst, Word* scratch) const;

  Kind kind_ = Kind::kPrime;
  Word p_ = 0;
  std::size_t sdeg_ = 1;  // relative degree over parent (1 for prime fields)
  std::size_t w_ = 1;     // words per element == absolute degree over F_p
  std::uint64_t order_ = 0;
  FieldPtr parent_;
  std::vector<Word> minpoly_;      // sdeg_ * parent_w words, coeff j at j*parent_w
  std::vector<Word> neg_minpoly_;  // negated rows, used during reduction
  std::size_t scratch_words_ = 0;  // multiplication scratch requirement
  FpMatrix frob_p_;                // x -> x^p (extensions only)
};

// An element of a FieldNode, a value type wrapping the flat representation.
class FqElement {
 public:
  FqElement() = default;  // detached; only assignable
  explicit FqElement(FieldPtr f) : f_(std::move(f)), v_(f_->abs_degree(), 0) {}
  FqElement(FieldPtr f, std::vector<Word> flat) : f_(std::move(f)), v_(std::move(flat)) {}

  static FqElement zero(const FieldPtr& f) { return FqElement(f); }
  static FqElement one(const FieldPtr& f);
  static FqElement from_residue(const FieldPtr& f, std::uint64_t r);
  // The residue class of x for an extension node; throws for prime fields.
  static FqElement generator(const FieldPtr& f);

  const FieldPtr& field() const { return f_; }
  ConstWordSpan flat() const { return v_; }
  std::vector<Word>& words() { return v_; }

  bool is_zero() const { return f_->is_zero(v_); }
  bool valid() const { return f_ != nullptr; }

  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator*(const FqElement& o) const;
  FqElement operator/(const FqElement& o) const;
  FqElement operator-() const;
  bool operator==(const FqElement& o) const;
  bool operator!=(const FqElement& o) const { return !(*this == o); }

  FqElement pow(std::uint64_t e) const;
  FqElement inverse() const;

  // Embeds into an extension of the owner (throws FieldMismatch otherwise).
  FqElement promoted_to(const FieldPtr& ext) const;
  // Re-types into an ancestor field; throws NotInSubfield when the value
  // does not lie there.
  FqElement descended_to(const FieldPtr& base) const;
  bool lies_in(const FieldPtr& base) const;

 private:
  void check_same(const FqElement& o) const;
  FieldPtr f_;
  std::vector<Word> v_;
};

// Deterministic total order on same-field elements (flat lexicographic).
bool canonical_less(const FqElement& a, const FqElement& b);

// --- tower construction -----------------------------------------------------

FieldPtr mk_prime_field(std::uint64_t p);
// Extension by a monic irreducible minpoly over `base`; irreducibility is
// verified at construction. The generator is the residue class of x.
FieldPtr mk_extension(const FieldPtr& base, const DensePoly& minpoly);
// Extension by the canonical minpoly: the lexicographically smallest monic
// irreducible of degree s over base, coefficient tuple (c_0, ..., c_{s-1})
// compared low-degree-first.
FieldPtr mk_extension_deg(const FieldPtr& base, std::size_t s);
DensePoly canonical_minpoly(const FieldPtr& base, std::size_t s);

// --- relative maps -----------------------------------------------------------

// x^(q_base^i) by repeated q-th powering.
FqElement frobenius_power(const FqElement& x, std::uint64_t i, const FieldPtr& base);
// Sum of the Frobenius conjugates of x over base; the result lies in base.
FqElement rel_trace(const FqElement& x, const FieldPtr& base);
// Smallest d >= 1 with x^(q_base^d) = x; divides the relative tower degree.
std::size_t degree_over(const FqElement& x, const FieldPtr& base);

// One representative (lexicographically smallest orbit member) per Frobenius
// orbit of elements of degree exactly s of `field` over `base`.
std::vector<FqElement> enumerate_orbit_reps(const FieldPtr& field, const FieldPtr& base,
                                            std::size_t s);

// Streaming candidate scanner behind enumerate_orbit_reps and the parallel
// B-set sweeps. Candidates are indexed 0 .. candidate_count()-1 in canonical
// element order, so disjoint index ranges partition the space. One scanner
// instance per worker; not thread safe.
class OrbitScanner {
 public:
  OrbitScanner(FieldPtr field, FieldPtr base);

  std::uint64_t candidate_count() const { return count_; }
  std::size_t span() const { return s_; }  // relative degree of field over base

  struct Candidate {
    ConstWordSpan alpha;
    bool is_rep = false;     // least member of its orbit
    std::size_t period = 0;  // degree over base (valid when is_rep)
    // Conjugate chain alpha^(q^j), j = 0..s-1, and the relative trace,
    // populated only when is_rep.
    const Word* conjugates = nullptr;
    ConstWordSpan trace;
  };

  // Decodes candidate `index` and classifies it. The returned spans point
  // into scanner-owned buffers valid until the next call.
  const Candidate& load(std::uint64_t index);

  const FieldPtr& field() const { return field_; }
  const FieldPtr& base() const { return base_; }

 private:
  FieldPtr field_;
  FieldPtr base_;
  std::size_t s_ = 1;
  std::size_t w_ = 1;
  std::uint64_t count_ = 0;
  FpMatrix frob_q_;
  std::vector<Word> alpha_;
  std::vector<Word> chain_;
  std::vector<Word> trace_;
  Candidate cand_;
};

}  // namespace cwprimes

#endif  // CWPRIMES_FIELD_HPP_
