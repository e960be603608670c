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

#include "cwprimes/gfixed.hpp"

#include <algorithm>

#include "cwprimes/factor.hpp"
#include "flat_ops.hpp"
#include "linalg.hpp"

namespace cwprimes {

using namespace flat;

namespace {

constexpr std::uint64_t kScanBudget = std::uint64_t{1} << 22;

FqElement element_at(const FieldPtr& f, std::uint64_t idx) {
  const Word p = f->characteristic();
  std::vector<Word> v(f->abs_degree());
  for (std::size_t k = v.size(); k-- > 0;) {
    v[k] = static_cast<Word>(idx % p);
    idx /= p;
  }
  return FqElement(f, std::move(v));
}

FqElement scale_residue(const FqElement& x, Word i) {
  const Word p = x.field()->characteristic();
  FqElement r(x.field());
  for (std::size_t k = 0; k < r.words().size(); ++k)
    r.words()[k] = mulmod(i, x.flat()[k], p);
  return r;
}

// Lexicographically smallest nonzero member of the line x*F_p.
FqElement line_canonical(const FqElement& x) {
  const Word p = x.field()->characteristic();
  FqElement best = x;
  for (Word i = 2; i < p; ++i) {
    FqElement cand = scale_residue(x, i);
    if (canonical_less(cand, best)) best = cand;
  }
  return best;
}

}  // namespace

// --- TranslationGroup ------------------------------------------------------------

TranslationGroup TranslationGroup::trivial(const FieldPtr& f) {
  TranslationGroup g;
  g.f_ = f;
  g.gen_ = FqElement::zero(f);
  return g;
}

TranslationGroup TranslationGroup::from_generator(const FqElement& chi) {
  TranslationGroup g;
  g.f_ = chi.field();
  g.gen_ = chi.is_zero() ? chi : line_canonical(chi);
  return g;
}

std::size_t TranslationGroup::order() const {
  return gen_.is_zero() ? 1 : f_->characteristic();
}

std::vector<FqElement> TranslationGroup::members() const {
  std::vector<FqElement> out{FqElement::zero(f_)};
  if (gen_.is_zero()) return out;
  for (Word i = 1; i < f_->characteristic(); ++i) out.push_back(scale_residue(gen_, i));
  std::sort(out.begin(), out.end(), [](const FqElement& a, const FqElement& b) {
    return canonical_less(a, b);
  });
  return out;
}

bool TranslationGroup::contains(const FqElement& x) const {
  if (x.is_zero()) return true;
  if (gen_.is_zero()) return false;
  for (Word i = 1; i < f_->characteristic(); ++i)
    if (scale_residue(gen_, i) == x) return true;
  return false;
}

bool TranslationGroup::operator==(const TranslationGroup& o) const {
  return f_->same_field(*o.f_) && gen_ == o.gen_;
}

// --- stabilizer --------------------------------------------------------------------

std::vector<FqElement> stabilizer(const DensePoly& f) {
  if (!f.valid() || f.is_zero()) throw ZeroInput("stabilizer of the zero polynomial");
  const FieldPtr& K = f.field();
  const std::uint64_t q = K->order();
  if (q > kScanBudget) throw ResourceBudget("stabilizer scan beyond the field-size budget");

  std::vector<FqElement> out{FqElement::zero(K)};
  if (f.degree() <= 0) {
    // Constants are fixed by everything.
    for (std::uint64_t i = 1; i < q; ++i) out.push_back(element_at(K, i));
    return out;
  }
  const Word p = K->characteristic();
  if (static_cast<std::uint64_t>(f.degree()) % p != 0) {
    // deg(f)*alpha must vanish for the T^(deg-1) coefficient to survive.
    return out;
  }
  for (std::uint64_t i = 1; i < q; ++i) {
    FqElement alpha = element_at(K, i);
    if (line_canonical(alpha) != alpha) continue;  // one probe per F_p-line
    if (translate(f, alpha) == f) {
      for (Word j = 1; j < p; ++j) out.push_back(scale_residue(alpha, j));
    }
  }
  std::sort(out.begin(), out.end(), [](const FqElement& a, const FqElement& b) {
    return canonical_less(a, b);
  });
  return out;
}

// --- bracket and decomposition -------------------------------------------------------

DensePoly bracket_G(const TranslationGroup& G) {
  const FieldPtr& K = G.field();
  if (G.order() == 1) return DensePoly::T(K);
  const Word p = K->characteristic();
  DensePoly r(K);
  std::vector<FqElement> coeffs(p + 1, FqElement::zero(K));
  coeffs[p] = FqElement::one(K);
  coeffs[1] = -G.generator().pow(p - 1);
  return DensePoly::from_coeffs(K, coeffs);
}

std::optional<DensePoly> decompose_in_bracket(const DensePoly& f, const TranslationGroup& G) {
  if (!f.is_monic()) throw NotMonic("decompose_in_bracket needs a monic polynomial");
  const DensePoly b = bracket_G(G);
  DensePoly rest = f;
  std::vector<FqElement> g_coeffs;
  while (true) {
    auto [quot, rem] = divmod(rest, b);
    if (rem.degree() > 0) return std::nullopt;
    g_coeffs.push_back(rem.is_zero() ? FqElement::zero(f.field()) : rem.coeff(0));
    if (quot.is_zero()) break;
    rest = std::move(quot);
  }
  DensePoly g = DensePoly::from_coeffs(f.field(), g_coeffs);
  if (compose(g, b) != f) throw Error("bracket decomposition failed its round trip");
  return g;
}

// --- trinomials ----------------------------------------------------------------------

bool trinomial_irreducible(const FqElement& beta, const FqElement& gamma) {
  if (beta.is_zero()) throw InvalidBeta("trinomial beta must be nonzero");
  const FieldPtr& K = gamma.field();
  FqElement beta_k = beta.field()->same_field(*K) ? beta : beta.promoted_to(K);
  // Root of T^p - beta*T - gamma exists iff gamma is in the image of the
  // F_p-linear map x -> x^p - beta*x.
  FpMatrix m = frobenius_minus_mul_matrix(K, 1, beta_k);
  std::vector<Word> rhs(gamma.flat().begin(), gamma.flat().end());
  return !solve_linear_fp(m, rhs, K->characteristic()).has_value();
}

std::vector<DensePoly> factor_additive_trinomial(const FqElement& alpha, const FieldPtr& base) {
  const FieldPtr& K = alpha.field();
  if (!K->has_ancestor(*base)) throw FieldMismatch("alpha does not live above the base field");
  const std::uint64_t q = base->order();
  const Word p = base->characteristic();

  // The trinomial itself, for the round-trip check.
  std::vector<FqElement> tri(q + 1, FqElement::zero(K));
  tri[q] = FqElement::one(K);
  tri[1] = -FqElement::one(K);
  tri[0] = -alpha;
  const DensePoly target = DensePoly::from_coeffs(K, tri);

  const FqElement w = rel_trace(alpha, base);
  std::vector<DensePoly> factors;
  if (w.is_zero()) {
    // Splits completely: roots are x0 + F_q.
    FpMatrix m = frobenius_minus_mul_matrix(K, base->abs_degree(), FqElement::one(K));
    std::vector<Word> rhs(alpha.flat().begin(), alpha.flat().end());
    auto x0 = solve_linear_fp(m, rhs, p);
    if (!x0) throw Error("trace-zero additive trinomial failed to split");
    FqElement root0(K, std::move(*x0));
    for (std::uint64_t i = 0; i < q; ++i) {
      FqElement root = root0 + element_at(base, i).promoted_to(K);
      factors.push_back(DensePoly::from_coeffs(K, {-root, FqElement::one(K)}));
    }
  } else {
    const TranslationGroup G = TranslationGroup::from_generator(w);
    const FqElement beta = w.pow(p - 1);
    // [1] = C([1]_G) over the base; then T^q - T - alpha factors through the
    // roots of C(X) - alpha.
    auto C = decompose_in_bracket(bracket(base, 1), G);
    if (!C) throw Error("the q-bracket must decompose through [1]_G");
    DensePoly h = promote_poly(*C, K) - DensePoly::constant(alpha);
    Rng rng(0x9e3779b97f4a7c15ull);
    std::vector<FqElement> gammas = roots(h, rng);
    if (gammas.size() != q / p)
      throw Error("additive trinomial: expected q/p distinct gamma values");
    for (const FqElement& g : gammas) {
      std::vector<FqElement> cs(p + 1, FqElement::zero(K));
      cs[p] = FqElement::one(K);
      cs[1] = -beta.promoted_to(K);
      cs[0] = -g;
      factors.push_back(DensePoly::from_coeffs(K, cs));
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const DensePoly& a, const DensePoly& b) { return canonical_less(a, b); });
  DensePoly prod = DensePoly::one(K);
  for (const DensePoly& f : factors) prod = prod * f;
  if (prod != target) throw Error("additive trinomial factorization failed its round trip");
  return factors;
}

// --- LOKI decomposition ----------------------------------------------------------------

std::vector<DensePoly> loki_decompose(const DensePoly& f, const TranslationGroup& G) {
  if (!f.is_monic() || f.degree() < 1 || !is_irreducible(f))
    throw NotPrime("loki_decompose needs a monic prime");
  if (G.order() == 1 || !G.field()->same_field(*f.field()))
    throw NotFixed("loki_decompose needs a G of order p over the polynomial field");
  if (translate(f, G.generator()) != f) throw NotFixed("polynomial is not G-fixed");
  const Word p = f.field()->characteristic();
  if (static_cast<std::uint64_t>(f.degree()) % p != 0)
    throw TheoremViolation("G-fixed prime with degree not divisible by p");
  const std::size_t s = static_cast<std::size_t>(f.degree()) / p;

  const FieldPtr ext = s == 1 ? f.field() : mk_extension_deg(f.field(), s);
  Rng rng(0x9e3779b97f4a7c15ull);
  std::vector<DensePoly> out;
  if (s == 1) {
    out.push_back(f);
  } else {
    for (const PolyFactor& pf : factor(promote_poly(f, ext), rng)) {
      for (std::size_t i = 0; i < pf.multiplicity; ++i) out.push_back(pf.factor);
    }
  }
  const FqElement beta = G.generator().pow(p - 1).promoted_to(ext);
  for (const DensePoly& g : out) {
    bool shape = g.degree() == static_cast<long>(p) && g.is_monic() && g.coeff(1) == -beta;
    for (std::size_t j = 2; j < p && shape; ++j) shape = g.coeff(j).is_zero();
    if (!shape)
      throw TheoremViolation("factor over F_{q^s} is not almost Artin-Schreier G-fixed");
  }
  if (out.size() != s) throw TheoremViolation("expected exactly s almost Artin-Schreier factors");
  return out;
}

}  // namespace cwprimes
