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

#include <algorithm>

#include "cwprimes/field.hpp"
#include "cwprimes/poly.hpp"
#include "flat_ops.hpp"

namespace cwprimes {

using namespace flat;

FieldPtr mk_extension(const FieldPtr& base, const DensePoly& minpoly) {
  if (!minpoly.valid() || !minpoly.field()->same_field(*base))
    throw FieldMismatch("minpoly is not defined over the base field");
  if (minpoly.degree() < 2) throw DegreeTooSmall("extension minpoly must have degree >= 2");
  if (!minpoly.is_monic()) throw NotMonic("extension minpoly must be monic");
  if (!is_irreducible(minpoly)) throw ReducibleModulus("extension minpoly is reducible");

  const std::size_t s = static_cast<std::size_t>(minpoly.degree());
  const std::size_t wp = base->abs_degree();

  auto node = std::shared_ptr<FieldNode>(new FieldNode());
  node->kind_ = FieldNode::Kind::kExtension;
  node->p_ = base->characteristic();
  node->sdeg_ = s;
  node->w_ = wp * s;
  node->parent_ = base;

  unsigned __int128 order = 1;
  for (std::size_t i = 0; i < s; ++i) {
    order *= base->order();
    if (order > static_cast<unsigned __int128>(UINT64_MAX))
      throw ResourceBudget("field order exceeds 2^64");
  }
  node->order_ = static_cast<std::uint64_t>(order);

  node->minpoly_.assign(s * wp, 0);
  std::copy(minpoly.words().begin(), minpoly.words().begin() + s * wp, node->minpoly_.begin());
  node->neg_minpoly_.resize(s * wp);
  vec_neg(node->neg_minpoly_.data(), node->minpoly_.data(), s * wp, node->p_);

  node->scratch_words_ = (2 * s - 1) * wp + wp + base->scratch_words_;

  // Frobenius matrix for x -> x^p, columns are basis vectors raised to p.
  node->frob_p_ = FpMatrix(node->w_, node->p_);
  std::vector<Word> e(node->w_, 0), img(node->w_);
  for (std::size_t k = 0; k < node->w_; ++k) {
    std::fill(e.begin(), e.end(), 0);
    e[k] = 1;
    node->pow(e, node->p_, img);
    for (std::size_t r = 0; r < node->w_; ++r) node->frob_p_.at(r, k) = img[r];
  }
  return node;
}

namespace {

// Decodes index into an element of f in canonical order (word 0 most
// significant).
std::vector<Word> element_at_index(const FieldPtr& f, std::uint64_t idx) {
  const Word p = f->characteristic();
  std::vector<Word> v(f->abs_degree());
  for (std::size_t k = v.size(); k-- > 0;) {
    v[k] = static_cast<Word>(idx % p);
    idx /= p;
  }
  return v;
}

}  // namespace

DensePoly canonical_minpoly(const FieldPtr& base, std::size_t s) {
  if (s < 2) throw DegreeTooSmall("canonical minpoly needs degree >= 2");
  const std::uint64_t q = base->order();
  const std::size_t w = base->abs_degree();
  // Odometer over coefficient tuples (c_0, ..., c_{s-1}), c_{s-1} fastest,
  // which enumerates candidates in ascending low-degree-first order.
  std::vector<std::uint64_t> digits(s, 0);
  DensePoly cand(base);
  while (true) {
    cand.words().assign((s + 1) * w, 0);
    base->set_one(WordSpan(cand.words().data() + s * w, w));
    for (std::size_t j = 0; j < s; ++j) {
      std::vector<Word> cj = element_at_index(base, digits[j]);
      std::copy(cj.begin(), cj.end(), cand.words().begin() + j * w);
    }
    if (is_irreducible(cand)) return cand;
    std::size_t pos = s;
    while (pos-- > 0) {
      if (++digits[pos] < q) break;
      digits[pos] = 0;
      if (pos == 0) throw Error("no irreducible of requested degree found");
    }
  }
}

FieldPtr mk_extension_deg(const FieldPtr& base, std::size_t s) {
  return mk_extension(base, canonical_minpoly(base, s));
}

}  // namespace cwprimes
