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

#include "cwprimes/factor.hpp"

#include <algorithm>
#include <cassert>

namespace cwprimes {

namespace {

// Inverse of the p-power Frobenius: x^(p^(k-1)) where p^k is the field order.
FqElement pth_root(const FqElement& x) {
  const FieldPtr& K = x.field();
  const std::size_t k = K->abs_degree();
  if (k == 1) return x;  // x^p = x in F_p
  FpMatrix m = K->frobenius_matrix(k - 1);
  FqElement r(K);
  m.apply(x.flat().data(), r.words().data());
  return r;
}

// For f = g(T^p), recovers g by taking p-th roots of the surviving
// coefficients.
DensePoly pth_root_poly(const DensePoly& f) {
  const FieldPtr& K = f.field();
  const Word p = K->characteristic();
  std::vector<FqElement> coeffs;
  const std::size_t n = static_cast<std::size_t>(f.degree());
  for (std::size_t i = 0; i <= n; ++i) {
    FqElement c = f.coeff(i);
    if (i % p == 0) {
      coeffs.push_back(pth_root(c));
    } else if (!c.is_zero()) {
      throw Error("pth_root_poly: polynomial is not a p-th power composition");
    }
  }
  return DensePoly::from_coeffs(K, coeffs);
}

void squarefree_decompose(const DensePoly& f_in,
                          std::vector<std::pair<DensePoly, std::size_t>>& out,
                          std::size_t outer_mult) {
  DensePoly f = monic(f_in);
  if (f.degree() < 1) return;
  DensePoly fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_decompose(pth_root_poly(f), out, outer_mult * f.field()->characteristic());
    return;
  }
  DensePoly c = gcd(f, fp);
  DensePoly w = divmod(f, c).first;
  std::size_t i = 1;
  while (w.degree() > 0) {
    DensePoly y = gcd(w, c);
    DensePoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac, i * outer_mult);
    w = std::move(y);
    c = divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0)
    squarefree_decompose(pth_root_poly(c), out, outer_mult * f.field()->characteristic());
}

// Distinct-degree split of a squarefree monic polynomial: (product, d) pairs.
std::vector<std::pair<DensePoly, std::size_t>> distinct_degree(DensePoly f) {
  const FieldPtr& K = f.field();
  std::vector<std::pair<DensePoly, std::size_t>> out;
  DensePoly t = DensePoly::T(K);
  DensePoly u = mod(t, f);
  std::size_t d = 0;
  while (f.degree() > 0 && 2 * (d + 1) <= static_cast<std::size_t>(f.degree())) {
    ++d;
    u = powmod_frobenius(u, 1, f, K);
    DensePoly g = gcd(u - t, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      u = mod(u, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<std::size_t>(f.degree()));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting. Odd q uses the (q-1)/2 power of
// the norm chain (all exponents stay below q); characteristic 2 uses the
// absolute trace map.
void equal_degree(const DensePoly& g, std::size_t d, Rng& rng, std::vector<DensePoly>& out) {
  const FieldPtr& K = g.field();
  if (static_cast<std::size_t>(g.degree()) == d) {
    out.push_back(monic(g));
    return;
  }
  const std::uint64_t q = K->order();
  const Word p = K->characteristic();
  while (true) {
    DensePoly r = random_poly_below(K, static_cast<std::size_t>(g.degree()), rng);
    if (r.degree() < 1) continue;
    DensePoly u(K);
    if (p != 2) {
      DensePoly v = mod(r, g);
      DensePoly w = v;
      for (std::size_t i = 1; i < d; ++i) {
        v = powmod_frobenius(v, 1, g, K);
        w = mod(w * v, g);
      }
      u = powmod(w, (q - 1) / 2, g) - DensePoly::one(K);
    } else {
      // trace map over F_2: r + r^2 + r^4 + ... (abs_degree * d terms)
      const std::size_t steps = K->abs_degree() * d;
      DensePoly v = mod(r, g);
      DensePoly acc = v;
      for (std::size_t i = 1; i < steps; ++i) {
        v = mod(v * v, g);
        acc = acc + v;
      }
      u = mod(acc, g);
    }
    if (u.is_zero()) continue;
    DensePoly h = gcd(u, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

DensePoly random_poly_below(const FieldPtr& f, std::size_t deg_bound, Rng& rng) {
  DensePoly r(f);
  const std::size_t w = f->abs_degree();
  const Word p = f->characteristic();
  r.words().assign(deg_bound * w, 0);
  for (auto& word : r.words()) word = static_cast<Word>(rng() % p);
  r.normalize();
  return r;
}

std::vector<PolyFactor> factor(const DensePoly& f, Rng& rng) {
  if (!f.valid() || f.degree() < 1)
    throw DegreeTooSmall("factorization is defined for degree >= 1");
  std::vector<std::pair<DensePoly, std::size_t>> sqf;
  squarefree_decompose(f, sqf, 1);
  std::vector<PolyFactor> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [prod, d] : distinct_degree(part)) {
      std::vector<DensePoly> irreducibles;
      equal_degree(prod, d, rng, irreducibles);
      for (DensePoly& irr : irreducibles) out.push_back({std::move(irr), mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return canonical_less(a.factor, b.factor); });
  return out;
}

std::vector<FqElement> roots(const DensePoly& f, Rng& rng) {
  std::vector<FqElement> out;
  for (const PolyFactor& pf : factor(f, rng)) {
    if (pf.factor.degree() == 1) out.push_back(-pf.factor.coeff(0));
  }
  return out;
}

}  // namespace cwprimes
