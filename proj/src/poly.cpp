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

#include "cwprimes/poly.hpp"

#include <algorithm>
#include <cassert>

#include "flat_ops.hpp"

namespace cwprimes {

using namespace flat;

namespace {

// Schoolbook multiplication over a prime field with lazy 64-bit accumulation.
// dst has length na+nb-1 and is overwritten.
void mul_school_prime(const Word* a, std::size_t na, const Word* b, std::size_t nb, Word* dst,
                      Word p) {
  for (std::size_t k = 0; k < na + nb - 1; ++k) {
    const std::size_t ilo = k >= nb - 1 ? k - (nb - 1) : 0;
    const std::size_t ihi = std::min(k, na - 1);
    std::uint64_t acc = 0;
    for (std::size_t i = ilo; i <= ihi; ++i) {
      acc += static_cast<std::uint64_t>(a[i]) * b[k - i];
      if (acc >> 62) acc %= p;
    }
    dst[k] = static_cast<Word>(acc % p);
  }
}

constexpr std::size_t kKaratsubaCutoff = 40;

// Karatsuba over a prime field. Degrees at play stay far below FFT territory;
// the cutoff keeps small products on the schoolbook path.
std::vector<Word> kmul_prime(const Word* a, std::size_t na, const Word* b, std::size_t nb,
                             Word p) {
  if (na == 0 || nb == 0) return {};
  if (std::min(na, nb) <= kKaratsubaCutoff) {
    std::vector<Word> dst(na + nb - 1);
    mul_school_prime(a, na, b, nb, dst.data(), p);
    return dst;
  }
  const std::size_t m = (std::max(na, nb) + 1) / 2;
  const std::size_t na0 = std::min(na, m), nb0 = std::min(nb, m);
  const std::size_t na1 = na - na0, nb1 = nb - nb0;

  std::vector<Word> z0 = kmul_prime(a, na0, b, nb0, p);
  std::vector<Word> z2 =
      (na1 && nb1) ? kmul_prime(a + na0, na1, b + nb0, nb1, p) : std::vector<Word>();

  std::vector<Word> sa(std::max(na0, na1)), sb(std::max(nb0, nb1));
  for (std::size_t i = 0; i < sa.size(); ++i) {
    Word lo = i < na0 ? a[i] : 0;
    Word hi = i < na1 ? a[na0 + i] : 0;
    sa[i] = addmod(lo, hi, p);
  }
  for (std::size_t i = 0; i < sb.size(); ++i) {
    Word lo = i < nb0 ? b[i] : 0;
    Word hi = i < nb1 ? b[nb0 + i] : 0;
    sb[i] = addmod(lo, hi, p);
  }
  std::vector<Word> z1 = kmul_prime(sa.data(), sa.size(), sb.data(), sb.size(), p);
  for (std::size_t i = 0; i < z1.size(); ++i) {
    Word v = z1[i];
    if (i < z0.size()) v = submod(v, z0[i], p);
    if (i < z2.size()) v = submod(v, z2[i], p);
    z1[i] = v;
  }

  std::vector<Word> dst(na + nb - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) dst[i] = z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i)
    if (z1[i]) dst[m + i] = addmod(dst[m + i], z1[i], p);
  for (std::size_t i = 0; i < z2.size(); ++i)
    if (z2[i]) dst[2 * m + i] = addmod(dst[2 * m + i], z2[i], p);
  return dst;
}

// Power-series inverse mod T^n over a prime field (Newton iteration).
std::vector<Word> series_inv_prime(const Word* b, std::size_t nb, std::size_t n, Word p) {
  assert(nb > 0 && b[0] != 0);
  std::vector<Word> x{invmod(b[0], p)};
  std::size_t k = 1;
  while (k < n) {
    const std::size_t k2 = std::min(2 * k, n);
    std::vector<Word> t = kmul_prime(b, std::min(nb, k2), x.data(), x.size(), p);
    t.resize(k2, 0);
    for (auto& w : t) w = w == 0 ? 0 : p - w;  // t = -b*x
    t[0] = addmod(t[0], 2 % p, p);             // t = 2 - b*x
    std::vector<Word> x2 = kmul_prime(x.data(), x.size(), t.data(), t.size(), p);
    x2.resize(k2, 0);
    x = std::move(x2);
    k = k2;
  }
  return x;
}

constexpr std::size_t kNewtonCutoff = 384;

}  // namespace

// --- DensePoly basics ----------------------------------------------------------

DensePoly DensePoly::one(const FieldPtr& f) {
  DensePoly r(f);
  r.c_.assign(f->abs_degree(), 0);
  f->set_one(WordSpan(r.c_.data(), f->abs_degree()));
  return r;
}

DensePoly DensePoly::constant(const FqElement& c) {
  DensePoly r(c.field());
  if (!c.is_zero()) r.c_.assign(c.flat().begin(), c.flat().end());
  return r;
}

DensePoly DensePoly::T(const FieldPtr& f) {
  DensePoly r(f);
  r.c_.assign(2 * f->abs_degree(), 0);
  f->set_one(WordSpan(r.c_.data() + f->abs_degree(), f->abs_degree()));
  return r;
}

DensePoly DensePoly::monomial(const FqElement& c, std::size_t deg) {
  DensePoly r(c.field());
  if (c.is_zero()) return r;
  const std::size_t w = c.field()->abs_degree();
  r.c_.assign((deg + 1) * w, 0);
  std::copy(c.flat().begin(), c.flat().end(), r.c_.begin() + deg * w);
  return r;
}

DensePoly DensePoly::from_coeffs(const FieldPtr& f, const std::vector<FqElement>& coeffs) {
  DensePoly r(f);
  const std::size_t w = f->abs_degree();
  r.c_.assign(coeffs.size() * w, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].field()->same_field(*f)) throw FieldMismatch("coefficient field mismatch");
    std::copy(coeffs[i].flat().begin(), coeffs[i].flat().end(), r.c_.begin() + i * w);
  }
  r.normalize();
  return r;
}

FqElement DensePoly::coeff(std::size_t i) const {
  const std::size_t w = stride();
  if (static_cast<long>(i) > degree()) return FqElement::zero(f_);
  return FqElement(f_, std::vector<Word>(c_.begin() + i * w, c_.begin() + (i + 1) * w));
}

FqElement DensePoly::leading_coeff() const {
  if (is_zero()) return FqElement::zero(f_);
  return coeff(static_cast<std::size_t>(degree()));
}

void DensePoly::set_coeff(std::size_t i, const FqElement& c) {
  if (!c.field()->same_field(*f_)) throw FieldMismatch("coefficient field mismatch");
  const std::size_t w = stride();
  if ((i + 1) * w > c_.size()) c_.resize((i + 1) * w, 0);
  std::copy(c.flat().begin(), c.flat().end(), c_.begin() + i * w);
  normalize();
}

ConstWordSpan DensePoly::coeff_flat(std::size_t i) const {
  return ConstWordSpan(c_.data() + i * stride(), stride());
}

bool DensePoly::is_monic() const {
  if (is_zero()) return false;
  std::vector<Word> one(stride());
  f_->set_one(one);
  return vec_equal(c_.data() + degree() * stride(), one.data(), stride());
}

void DensePoly::normalize() {
  const std::size_t w = stride();
  std::size_t n = c_.size() / w;
  while (n > 0 && vec_is_zero(c_.data() + (n - 1) * w, w)) --n;
  c_.resize(n * w);
}

bool DensePoly::operator==(const DensePoly& o) const {
  if (!f_ || !o.f_) return f_ == o.f_;
  return f_->same_field(*o.f_) && c_ == o.c_;
}

bool canonical_less(const DensePoly& a, const DensePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.words().begin(), a.words().end(), b.words().begin(),
                                      b.words().end());
}

// --- ring operations -------------------------------------------------------------

namespace {
void check_same_field(const DensePoly& a, const DensePoly& b) {
  if (!a.valid() || !b.valid() || !a.field()->same_field(*b.field()))
    throw FieldMismatch("polynomial field mismatch");
}
}  // namespace

DensePoly DensePoly::operator+(const DensePoly& o) const {
  check_same_field(*this, o);
  const Word p = f_->characteristic();
  DensePoly r(f_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.c_.size(); ++k) {
    Word x = k < c_.size() ? c_[k] : 0;
    Word y = k < o.c_.size() ? o.c_[k] : 0;
    r.c_[k] = addmod(x, y, p);
  }
  r.normalize();
  return r;
}

DensePoly DensePoly::operator-(const DensePoly& o) const {
  check_same_field(*this, o);
  const Word p = f_->characteristic();
  DensePoly r(f_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.c_.size(); ++k) {
    Word x = k < c_.size() ? c_[k] : 0;
    Word y = k < o.c_.size() ? o.c_[k] : 0;
    r.c_[k] = submod(x, y, p);
  }
  r.normalize();
  return r;
}

DensePoly DensePoly::operator-() const {
  DensePoly r(f_);
  r.c_.resize(c_.size());
  vec_neg(r.c_.data(), c_.data(), c_.size(), f_->characteristic());
  return r;
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
  check_same_field(*this, o);
  DensePoly r(f_);
  if (is_zero() || o.is_zero()) return r;
  const std::size_t w = stride();
  const std::size_t na = c_.size() / w, nb = o.c_.size() / w;
  if (w == 1) {
    r.c_ = kmul_prime(c_.data(), na, o.c_.data(), nb, f_->characteristic());
    r.normalize();
    return r;
  }
  r.c_.assign((na + nb - 1) * w, 0);
  std::vector<Word> prod(w);
  for (std::size_t i = 0; i < na; ++i) {
    ConstWordSpan ai(c_.data() + i * w, w);
    if (f_->is_zero(ai)) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      ConstWordSpan bj(o.c_.data() + j * w, w);
      if (f_->is_zero(bj)) continue;
      f_->mul(ai, bj, prod);
      vec_add_into(r.c_.data() + (i + j) * w, prod.data(), w, f_->characteristic());
    }
  }
  r.normalize();
  return r;
}

DensePoly mul_scalar(const DensePoly& f, const FqElement& c) {
  if (c.is_zero() || f.is_zero()) return DensePoly::zero(f.field());
  const std::size_t w = f.stride();
  DensePoly r(f.field());
  r.words().resize(f.words().size());
  std::vector<Word> prod(w);
  const std::size_t n = f.words().size() / w;
  for (std::size_t i = 0; i < n; ++i) {
    f.field()->mul(f.coeff_flat(i), c.flat(), prod);
    std::copy(prod.begin(), prod.end(), r.words().begin() + i * w);
  }
  r.normalize();
  return r;
}

DensePoly monic(const DensePoly& f) {
  if (f.is_zero()) return f;
  FqElement lc = f.leading_coeff();
  std::vector<Word> one(f.stride());
  f.field()->set_one(one);
  if (vec_equal(lc.flat().data(), one.data(), f.stride())) return f;
  return mul_scalar(f, lc.inverse());
}

std::pair<DensePoly, DensePoly> divmod(const DensePoly& f, const DensePoly& g) {
  check_same_field(f, g);
  if (g.is_zero()) throw DivideByZero("polynomial division by zero");
  const long df = f.degree(), dg = g.degree();
  if (df < dg) return {DensePoly::zero(f.field()), f};

  const std::size_t w = f.stride();
  const Word p = f.field()->characteristic();
  const std::size_t qn = static_cast<std::size_t>(df - dg) + 1;

  if (w == 1 && static_cast<std::size_t>(dg) >= kNewtonCutoff && qn >= kNewtonCutoff) {
    // Newton division via reversed power series.
    const Word* a = f.words().data();
    const Word* b = g.words().data();
    std::vector<Word> arev(qn), brev(std::min<std::size_t>(dg + 1, qn));
    for (std::size_t i = 0; i < arev.size(); ++i) arev[i] = a[df - i];
    for (std::size_t i = 0; i < brev.size(); ++i) brev[i] = b[dg - i];
    std::vector<Word> binv = series_inv_prime(brev.data(), brev.size(), qn, p);
    std::vector<Word> qrev = kmul_prime(arev.data(), arev.size(), binv.data(), binv.size(), p);
    qrev.resize(qn, 0);
    DensePoly q(f.field());
    q.words().assign(qn, 0);
    for (std::size_t i = 0; i < qn; ++i) q.words()[i] = qrev[qn - 1 - i];
    q.normalize();
    DensePoly r = f - q * g;
    assert(r.degree() < dg);
    return {q, r};
  }

  DensePoly q(f.field()), r = f;
  q.words().assign(qn * w, 0);
  FqElement inv_lead = g.leading_coeff().inverse();
  std::vector<Word> factor(w), prod(w);
  std::vector<Word>& rw = r.words();
  rw.resize((df + 1) * w, 0);
  for (long i = df; i >= dg; --i) {
    ConstWordSpan top(rw.data() + i * w, w);
    if (f.field()->is_zero(top)) continue;
    f.field()->mul(top, inv_lead.flat(), factor);
    std::copy(factor.begin(), factor.end(), q.words().begin() + (i - dg) * w);
    // r -= factor * g * T^(i-dg)
    if (w == 1) {
      const Word c = factor[0];
      Word* rr = rw.data() + (i - dg);
      const Word* gw = g.words().data();
      for (long j = 0; j <= dg; ++j)
        rr[j] = submod(rr[j], mulmod(c, gw[j], p), p);
    } else {
      for (long j = 0; j <= dg; ++j) {
        ConstWordSpan gj(g.words().data() + j * w, w);
        if (f.field()->is_zero(gj)) continue;
        f.field()->mul(ConstWordSpan(factor), gj, prod);
        Word* slot = rw.data() + (i - dg + j) * w;
        for (std::size_t k = 0; k < w; ++k) slot[k] = submod(slot[k], prod[k], p);
      }
    }
  }
  q.normalize();
  r.normalize();
  return {q, r};
}

DensePoly mod(const DensePoly& f, const DensePoly& g) { return divmod(f, g).second; }

bool divides(const DensePoly& g, const DensePoly& f) { return mod(f, g).is_zero(); }

DensePoly gcd(const DensePoly& f, const DensePoly& g) {
  check_same_field(f, g);
  if (f.is_zero() && g.is_zero()) throw DivideByZero("gcd of two zero polynomials");
  DensePoly a = f, b = g;
  while (!b.is_zero()) {
    DensePoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

DensePoly powmod(const DensePoly& f, std::uint64_t e, const DensePoly& m) {
  check_same_field(f, m);
  if (m.is_zero()) throw DivideByZero("powmod modulus is zero");
  DensePoly base = mod(f, m);
  DensePoly acc = mod(DensePoly::one(f.field()), m);
  while (e) {
    if (e & 1) acc = mod(acc * base, m);
    e >>= 1;
    if (e) base = mod(base * base, m);
  }
  return acc;
}

DensePoly powmod_frobenius(const DensePoly& f, std::uint64_t i, const DensePoly& m,
                           const FieldPtr& base) {
  DensePoly r = mod(f, m);
  const std::uint64_t q = base->order();
  for (std::uint64_t k = 0; k < i; ++k) r = powmod(r, q, m);
  return r;
}

DensePoly derivative(const DensePoly& f) {
  DensePoly r(f.field());
  if (f.degree() < 1) return r;
  const std::size_t w = f.stride();
  const Word p = f.field()->characteristic();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  r.words().assign(n * w, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const Word c = static_cast<Word>(i % p);
    if (c == 0) continue;
    const Word* src = f.words().data() + i * w;
    Word* dst = r.words().data() + (i - 1) * w;
    for (std::size_t k = 0; k < w; ++k) dst[k] = mulmod(c, src[k], p);
  }
  r.normalize();
  return r;
}

FqElement evaluate(const DensePoly& f, const FqElement& x) {
  const FieldPtr& xf = x.field();
  if (!xf->has_ancestor(*f.field()))
    throw FieldMismatch("evaluation point field is not an extension of the coefficient field");
  FqElement acc = FqElement::zero(xf);
  for (long i = f.degree(); i >= 0; --i) {
    acc = acc * x + f.coeff(static_cast<std::size_t>(i)).promoted_to(xf);
  }
  return acc;
}

DensePoly compose(const DensePoly& f, const DensePoly& g) {
  check_same_field(f, g);
  DensePoly acc = DensePoly::zero(f.field());
  for (long i = f.degree(); i >= 0; --i) {
    acc = acc * g + DensePoly::constant(f.coeff(static_cast<std::size_t>(i)));
  }
  return acc;
}

DensePoly translate(const DensePoly& f, const FqElement& c) {
  const FieldPtr& cf = c.field();
  DensePoly base = f;
  if (!cf->same_field(*f.field())) {
    if (!cf->has_ancestor(*f.field()))
      throw FieldMismatch("translation constant must live in the polynomial field or above");
    base = promote_poly(f, cf);
  }
  // Horner with multiplication by (T + c): shift then add c*acc.
  const std::size_t w = base.stride();
  DensePoly acc(base.field());
  for (long i = base.degree(); i >= 0; --i) {
    if (!acc.is_zero()) {
      DensePoly shifted(base.field());
      shifted.words().assign(acc.words().size() + w, 0);
      std::copy(acc.words().begin(), acc.words().end(), shifted.words().begin() + w);
      acc = shifted + mul_scalar(acc, c);
    }
    DensePoly cst = DensePoly::constant(base.coeff(static_cast<std::size_t>(i)));
    acc = acc + cst;
  }
  return acc;
}

FqElement resultant(const DensePoly& f, const DensePoly& g) {
  check_same_field(f, g);
  if (f.is_zero() || g.is_zero()) throw DivideByZero("resultant of zero polynomial");
  const FieldPtr& K = f.field();
  DensePoly a = f, b = g;
  FqElement res = FqElement::one(K);
  const Word p = K->characteristic();
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() * b.degree()) % 2 == 1) negate = !negate;
    std::swap(a, b);
  }
  while (b.degree() > 0) {
    DensePoly r = mod(a, b);
    if (r.is_zero()) return FqElement::zero(K);
    const long da = a.degree(), db = b.degree(), dr = r.degree();
    if ((da * db) % 2 == 1) negate = !negate;
    res = res * b.leading_coeff().pow(static_cast<std::uint64_t>(da - dr));
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant (or the loop never ran with deg b == 0).
  res = res * b.leading_coeff().pow(static_cast<std::uint64_t>(a.degree()));
  if (negate && p != 2) res = -res;
  return res;
}

DensePoly pow_q_spread(const DensePoly& f) {
  if (f.is_zero()) return f;
  const std::uint64_t q = f.field()->order();
  const std::size_t w = f.stride();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  DensePoly r(f.field());
  r.words().assign((n * q + 1) * w, 0);
  std::vector<Word> tmp(w);
  for (std::size_t i = 0; i <= n; ++i) {
    ConstWordSpan ci(f.words().data() + i * w, w);
    if (f.field()->is_zero(ci)) continue;
    f.field()->pow(ci, q, tmp);
    std::copy(tmp.begin(), tmp.end(), r.words().begin() + i * q * w);
  }
  r.normalize();
  return r;
}

DensePoly promote_poly(const DensePoly& f, const FieldPtr& ext) {
  if (!ext->has_ancestor(*f.field())) throw FieldMismatch("promotion target is not an extension");
  const std::size_t wold = f.stride(), wnew = ext->abs_degree();
  DensePoly r(ext);
  if (f.is_zero()) return r;
  const std::size_t n = static_cast<std::size_t>(f.degree()) + 1;
  r.words().assign(n * wnew, 0);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(f.words().begin() + i * wold, f.words().begin() + (i + 1) * wold,
              r.words().begin() + i * wnew);
  return r;
}

DensePoly descend_poly(const DensePoly& f, const FieldPtr& base) {
  if (!f.field()->has_ancestor(*base)) throw FieldMismatch("descent target is not an ancestor");
  const std::size_t wold = f.stride(), wnew = base->abs_degree();
  DensePoly r(base);
  if (f.is_zero()) return r;
  const std::size_t n = static_cast<std::size_t>(f.degree()) + 1;
  r.words().assign(n * wnew, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = wnew; k < wold; ++k)
      if (f.words()[i * wold + k] != 0)
        throw NotInSubfield("coefficient does not lie in the subfield");
    std::copy(f.words().begin() + i * wold, f.words().begin() + i * wold + wnew,
              r.words().begin() + i * wnew);
  }
  return r;
}

bool is_irreducible(const DensePoly& f) {
  if (f.degree() < 1) throw DegreeTooSmall("irreducibility is defined for degree >= 1");
  if (f.degree() == 1) return true;
  const DensePoly m = monic(f);
  const std::size_t n = static_cast<std::size_t>(m.degree());
  const FieldPtr& K = m.field();
  const DensePoly t = DensePoly::T(K);

  std::vector<std::size_t> prime_divs;
  std::size_t nn = n;
  for (std::size_t d = 2; d * d <= nn; ++d) {
    if (nn % d == 0) {
      prime_divs.push_back(d);
      while (nn % d == 0) nn /= d;
    }
  }
  if (nn > 1) prime_divs.push_back(nn);
  // Visit the maximal proper divisors n/ell in ascending order so the
  // Frobenius chain u = T^(q^k) mod m advances monotonically.
  std::sort(prime_divs.rbegin(), prime_divs.rend());

  DensePoly u = mod(t, m);
  std::size_t reached = 0;
  for (std::size_t ell : prime_divs) {
    const std::size_t target = n / ell;
    u = powmod_frobenius(u, target - reached, m, K);
    reached = target;
    DensePoly g = gcd(u - t, m);
    if (g.degree() != 0) return false;
  }
  u = powmod_frobenius(u, n - reached, m, K);
  return (u - mod(t, m)).is_zero();
}

DensePoly bracket(const FieldPtr& f, std::uint64_t i) {
  if (i == 0) return DensePoly::one(f);  // the empty-product convention [0] = 1
  const std::uint64_t q = f->order();
  unsigned __int128 deg = 1;
  for (std::uint64_t k = 0; k < i; ++k) {
    deg *= q;
    if (deg > (static_cast<unsigned __int128>(1) << 35))
      throw ResourceBudget("bracket degree q^i too large to materialize");
  }
  const std::size_t d = static_cast<std::size_t>(deg);
  const std::size_t w = f->abs_degree();
  DensePoly r(f);
  r.words().assign((d + 1) * w, 0);
  f->set_one(WordSpan(r.words().data() + d * w, w));
  std::vector<Word> mone(w);
  f->set_one(mone);
  f->neg(ConstWordSpan(mone), mone);
  std::copy(mone.begin(), mone.end(), r.words().begin() + w);
  return r;
}

}  // namespace cwprimes
