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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cwprimes/carlitz.hpp"
#include "test_util.hpp"

using namespace cwtest;

namespace {

DensePoly random_poly(const FieldPtr& f, std::size_t deg, std::mt19937_64& rng,
                      bool monic = false) {
  std::vector<FqElement> cs;
  for (std::size_t i = 0; i <= deg; ++i) {
    FqElement c(f);
    for (auto& w : c.words()) w = static_cast<Word>(rng() % f->characteristic());
    cs.push_back(c);
  }
  if (monic) cs[deg] = FqElement::one(f);
  return DensePoly::from_coeffs(f, cs);
}

// T^(q_base) - T over ext.
DensePoly sub_bracket(const FieldPtr& ext, const FieldPtr& base) {
  return DensePoly::monomial(FqElement::one(ext), static_cast<std::size_t>(base->order())) -
         DensePoly::T(ext);
}

// Evaluates the additive polynomial of a twisted polynomial at `a` mod M:
// sum_i c_i * a^(q^i).
DensePoly additive_eval_mod(const TwistedPoly& G, const DensePoly& a, const DensePoly& M) {
  const FieldPtr& K = G.base();
  const std::uint64_t q = K->order();
  DensePoly acc = DensePoly::zero(K);
  DensePoly power = mod(a, M);
  for (long i = 0; i <= G.tau_degree(); ++i) {
    acc = mod(acc + G.coeff(static_cast<std::size_t>(i)) * power, M);
    power = powmod(power, q, M);
  }
  return acc;
}

}  // namespace

TEST_CASE("twisted multiplication") {
  FieldPtr f3 = F3();
  TwistedPoly tau = TwistedPoly::tau(f3);
  TwistedPoly tpoly = TwistedPoly::from_coeffs(f3, {DensePoly::T(f3)});
  // tau * T = T^q * tau
  TwistedPoly prod = twisted_mul(tau, tpoly);
  CHECK(prod.tau_degree() == 1);
  CHECK(prod.coeff(0).is_zero());
  CHECK(prod.coeff(1) == P(f3, "T^3"));
  // A * 1 = A
  TwistedPoly rho_t2 = rho_coeffs(P(f3, "T^2"));
  CHECK(twisted_mul(rho_t2, TwistedPoly::one(f3)) == rho_t2);
  // (tau + T)^2 = tau^2 + (T^q + T) tau + T^2
  TwistedPoly rt = rho_coeffs(DensePoly::T(f3));
  TwistedPoly sq = twisted_mul(rt, rt);
  CHECK(sq.coeff(2) == DensePoly::one(f3));
  CHECK(sq.coeff(1) == P(f3, "T^3 + T"));
  CHECK(sq.coeff(0) == P(f3, "T^2"));
  CHECK(sq == rho_t2);
}

TEST_CASE("rho_coeffs basics") {
  FieldPtr f3 = F3();
  TwistedPoly rt = rho_coeffs(DensePoly::T(f3));
  CHECK(rt.tau_degree() == 1);
  CHECK(rt.coeff(0) == DensePoly::T(f3));
  CHECK(rt.coeff(1) == DensePoly::one(f3));
  TwistedPoly c = rho_coeffs(P(f3, "2"));
  CHECK(c.tau_degree() == 0);
  CHECK(c.coeff(0) == P(f3, "2"));
  CHECK_THROWS_AS(rho_coeffs(DensePoly::zero(f3)), ZeroInput);
  // tau-coefficient 0 of rho^N equals N; leading coefficient 1 for monic N.
  TwistedPoly big = rho_coeffs(P(f3, "T^3 + 2*T + 1"));
  CHECK(big.coeff(0) == P(f3, "T^3 + 2*T + 1"));
  CHECK(big.tau_degree() == 3);
  CHECK(big.coeff(3) == DensePoly::one(f3));
}

TEST_CASE("rho is a ring homomorphism") {
  std::mt19937_64 rng(41);
  for (const FieldPtr& K : {F3(), F4_paper()}) {
    for (int trial = 0; trial < 15; ++trial) {
      DensePoly m = random_poly(K, rng() % 4, rng);
      DensePoly n = random_poly(K, rng() % 4, rng);
      if (m.is_zero() || n.is_zero()) continue;
      CHECK(rho_coeffs(m * n) == twisted_mul(rho_coeffs(m), rho_coeffs(n)));
      if (!(m + n).is_zero()) CHECK(rho_coeffs(m + n) == rho_coeffs(m) + rho_coeffs(n));
    }
  }
}

TEST_CASE("carlitz_eval_mod basics and oracle equivalence") {
  FieldPtr f3 = F3();
  DensePoly m = P(f3, "T^4 + T + 2");
  // rho_T(1) = 1 + T.
  CHECK(carlitz_eval_mod(DensePoly::T(f3), DensePoly::one(f3), m) == P(f3, "T + 1"));
  std::mt19937_64 rng(43);
  for (const FieldPtr& K : {F3(), F4_paper()}) {
    for (int trial = 0; trial < 12; ++trial) {
      DensePoly n = random_poly(K, 1 + rng() % 3, rng);
      if (n.is_zero()) continue;
      DensePoly mm = random_poly(K, 2 + rng() % 3, rng, true);
      DensePoly a = random_poly(K, rng() % 2, rng);
      CHECK(carlitz_eval_mod(n, a, mm) == additive_eval_mod(rho_coeffs(n), a, mm));
    }
  }
}

TEST_CASE("carlitz action is F_q-linear") {
  std::mt19937_64 rng(47);
  FieldPtr f9 = F9_paper();
  for (int trial = 0; trial < 15; ++trial) {
    DensePoly n = random_poly(f9, 1 + rng() % 3, rng);
    if (n.is_zero()) continue;
    DensePoly m = random_poly(f9, 3, rng, true);
    DensePoly a = random_poly(f9, 2, rng);
    DensePoly b = random_poly(f9, 2, rng);
    FqElement c(f9);
    for (auto& w : c.words()) w = static_cast<Word>(rng() % 3);
    DensePoly lhs = carlitz_eval_mod(n, a + mul_scalar(b, c), m);
    DensePoly rhs = mod(carlitz_eval_mod(n, a, m) + mul_scalar(carlitz_eval_mod(n, b, m), c), m);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the degree-6 prime satisfies the definition congruence") {
  FieldPtr f3 = F3();
  DensePoly prime = P(f3, "T^6 + T^4 + T^3 + T^2 + 2*T + 2");
  DensePoly p2 = prime * prime;
  CHECK(carlitz_eval_mod(prime - DensePoly::one(f3), DensePoly::one(f3), p2).is_zero());
}

TEST_CASE("every F_2 prime of degree >= 2 kills rho_{P-1}(1)") {
  FieldPtr f2 = mk_prime_field(2);
  for (std::size_t d = 2; d <= 5; ++d) {
    for (const DensePoly& prime : all_monic_irreducible(f2, d)) {
      DensePoly p2 = prime * prime;
      CHECK(carlitz_eval_mod(prime - DensePoly::one(f2), DensePoly::one(f2), p2).is_zero());
    }
  }
}

TEST_CASE("f_sequence_exact basics") {
  FieldPtr f3 = F3();
  BracketCache cache(f3);
  CHECK(f_sequence_exact(0, cache) == DensePoly::one(f3));
  CHECK(f_sequence_exact(1, cache) == bracket(f3, 1) - DensePoly::one(f3));
  DensePoly f5 = f_sequence_exact(5, cache);
  CHECK(to_string(gcd(f5, bracket(f3, 6))) == "T^6 + T^4 + T^3 + T^2 + 2*T + 2");
  CHECK_THROWS_AS(f_sequence_exact(40, cache), ResourceBudget);
}

TEST_CASE("f_sequence_exact matches the rational-sum numerator") {
  // F_n is the numerator of sum_{j<=n} (-1)^j / L_j over the common
  // denominator L_n. (The numerator is not always coprime to L_n: over F_3,
  // F_1 = T^3+2T+2 is prime and divides both F_4 and L_4.)
  FieldPtr f3 = F3();
  BracketCache cache(f3);
  for (std::size_t n = 1; n <= 4; ++n) {
    DensePoly numerator = DensePoly::zero(f3);
    for (std::size_t j = 0; j <= n; ++j) {
      // L_n / L_j = [n][n-1]...[j+1]
      DensePoly q = DensePoly::one(f3);
      for (std::size_t i = j + 1; i <= n; ++i) q = q * bracket(f3, i);
      numerator = (j % 2 == 0) ? numerator + q : numerator - q;
    }
    DensePoly fn = f_sequence_exact(n, cache);
    CHECK(fn == numerator);
  }
}

TEST_CASE("bracket cache recurrence bookkeeping") {
  FieldPtr f3 = F3();
  BracketCache cache(f3);
  CHECK(cache.bracket(0) == DensePoly::one(f3));
  CHECK(cache.L(0) == DensePoly::one(f3));
  CHECK(cache.bracket(2) == bracket(f3, 2));
  CHECK(cache.L(2) == bracket(f3, 2) * bracket(f3, 1));
  BracketCache tiny(f3, 16);
  CHECK_THROWS_AS(tiny.bracket(5), ResourceBudget);
}

TEST_CASE("f_sequence_mod") {
  FieldPtr f3 = F3();
  DensePoly p6 = P(f3, "T^6 + T^4 + T^3 + T^2 + 2*T + 2");
  CHECK(f_sequence_mod(5, p6).is_zero());
  DensePoly p9 = P(f3, "T^9 + T^6 + T^4 + T^2 + 2*T + 2");
  CHECK(f_sequence_mod(8, p9).is_zero());
  // No reduction when the modulus degree dominates.
  BracketCache cache(f3);
  DensePoly big = P(f3, "T^400 + T + 1");
  CHECK(f_sequence_mod(4, big) == f_sequence_exact(4, cache));
}

TEST_CASE("f_sequence_scalar") {
  FieldPtr f5 = F5();
  CHECK(f_sequence_scalar(0, FqElement::from_residue(f5, 3), f5) == FqElement::one(f5));
  // Table row: alpha = 4 gives the degree-5 c-Wieferich prime over F_5.
  CHECK(f_sequence_scalar(4, FqElement::from_residue(f5, 4), f5).is_zero());
  CHECK(!f_sequence_scalar(4, FqElement::from_residue(f5, 1), f5).is_zero());
  CHECK(!f_sequence_scalar(4, FqElement::from_residue(f5, 2), f5).is_zero());
  CHECK(!f_sequence_scalar(4, FqElement::from_residue(f5, 3), f5).is_zero());
}

TEST_CASE("f_sequence_scalar equals f_sequence_mod in the quotient") {
  std::mt19937_64 rng(53);
  for (const FieldPtr& base : {F3(), F5()}) {
    for (std::size_t s : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
      FieldPtr ext = s == 1 ? base : mk_extension_deg(base, s);
      for (int trial = 0; trial < 8; ++trial) {
        FqElement alpha(ext);
        for (auto& w : alpha.words()) w = static_cast<Word>(rng() % base->characteristic());
        const std::size_t n = rng() % 31;
        // T^q - T - alpha over the extension.
        DensePoly tri = sub_bracket(ext, base) - DensePoly::constant(alpha);
        DensePoly fm = f_sequence_mod(n, tri, base);
        FqElement fs = f_sequence_scalar(n, alpha, base);
        CHECK(fm == DensePoly::constant(fs));
      }
    }
  }
}

TEST_CASE("is_cwieferich on the paper examples") {
  FieldPtr f3 = F3();
  DensePoly p6 = P(f3, "T^6 + T^4 + T^3 + T^2 + 2*T + 2");
  CHECK(is_cwieferich(p6, CwMethod::kDefinition));
  CHECK(is_cwieferich(p6, CwMethod::kCriterion));
  // No degree-1 c-Wieferich primes.
  CHECK(!is_cwieferich(P(f3, "T"), CwMethod::kDefinition));
  CHECK(!is_cwieferich(P(f3, "T + 1"), CwMethod::kCriterion));
  // The other fixed degree-6 polynomial is prime but not c-Wieferich.
  DensePoly q6 = P(f3, "T^6 + T^4 + 2*T^3 + T^2 + T + 2");
  CHECK(is_irreducible(q6));
  CHECK(!is_cwieferich(q6, CwMethod::kDefinition));
  CHECK(!is_cwieferich(q6, CwMethod::kCriterion));
  CHECK_THROWS_AS(is_cwieferich(P(f3, "T^2 + 2"), CwMethod::kDefinition), NotPrime);
  CHECK_THROWS_AS(is_cwieferich(P(f3, "2*T^2 + 2*T + 1"), CwMethod::kCriterion), NotPrime);
}

TEST_CASE("lemma_reduce_check") {
  FieldPtr f3 = F3();
  DensePoly q = P(f3, "T^2 + 1");
  CHECK(lemma_reduce_check(1, 2, 0, q));
  CHECK(lemma_reduce_check(0, 2, 0, q));  // trivially F_0 = F_0
  std::mt19937_64 rng(59);
  int done = 0;
  while (done < 50) {
    const FieldPtr base = (rng() % 2 == 0) ? F3() : F5();
    const std::size_t d = 1 + rng() % 4;
    auto primes = all_monic_irreducible(base, d);
    const DensePoly& prime = primes[rng() % primes.size()];
    const std::size_t s = rng() % 4, ell = rng() % d;
    CHECK(lemma_reduce_check(s, d, ell, prime));
    ++done;
  }
}
