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
#include <set>

#include "cwprimes/gfixed.hpp"
#include "test_util.hpp"

using namespace cwtest;

namespace {

std::set<std::string> texts(const std::vector<FqElement>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(to_string(x));
  return out;
}

}  // namespace

TEST_CASE("translation groups") {
  FieldPtr f9 = F9_paper();
  TranslationGroup triv = TranslationGroup::trivial(f9);
  CHECK(triv.order() == 1);
  CHECK(triv.members().size() == 1);

  FqElement t = FqElement::generator(f9);
  TranslationGroup g1 = TranslationGroup::from_generator(t);
  TranslationGroup g2 = TranslationGroup::from_generator(t + t);  // 2t spans the same line
  CHECK(g1.order() == 3);
  CHECK(g1 == g2);
  CHECK(g1.generator() == t);  // t = (0,1) precedes 2t = (0,2)
  CHECK(g1.contains(t + t));
  CHECK(!g1.contains(FqElement::one(f9)));
}

TEST_CASE("stabilizer examples") {
  FieldPtr f9 = F9_paper();
  CHECK(texts(stabilizer(DensePoly::T(f9))) == std::set<std::string>{"0"});
  // The paper's G_2 = {0, t+2, 2t+1} for T^3 + (t+1)T + 1.
  auto stab = stabilizer(P(f9, "T^3 + (t + 1)*T + 1"));
  CHECK(texts(stab) == std::set<std::string>{"0", "t + 2", "2*t + 1"});
  // Constants are fixed by all of F_q.
  CHECK(stabilizer(DensePoly::one(f9)).size() == 9);
  CHECK_THROWS_AS(stabilizer(DensePoly::zero(f9)), ZeroInput);
}

TEST_CASE("stabilizer is a subgroup of order 1 or p on primes") {
  std::mt19937_64 rng(61);
  FieldPtr f9 = F9_paper();
  for (const DensePoly& prime : all_monic_irreducible(f9, 3)) {
    auto stab = stabilizer(prime);
    CHECK((stab.size() == 1 || stab.size() == 3));
    if (stab.size() == 3) {
      TranslationGroup g = TranslationGroup::from_generator(stab[1]);
      for (const FqElement& m : g.members()) CHECK(translate(prime, m) == prime);
    }
  }
  (void)rng;
}

TEST_CASE("bracket_G") {
  FieldPtr f3 = F3();
  TranslationGroup full = TranslationGroup::from_generator(FqElement::one(f3));
  CHECK(to_string(bracket_G(full)) == "T^3 + 2*T");  // T^p - T
  CHECK(to_string(bracket_G(TranslationGroup::trivial(f3))) == "T");

  FieldPtr f9 = F9_paper();
  FqElement chi = E(f9, "t + 2");
  TranslationGroup g = TranslationGroup::from_generator(chi);
  DensePoly b = bracket_G(g);
  // [1]_G = prod over members, and divides [1].
  DensePoly prod = DensePoly::one(f9);
  for (const FqElement& m : g.members()) prod = prod * (DensePoly::T(f9) + DensePoly::constant(m));
  CHECK(b == prod);
  CHECK(mod(bracket(f9, 1), b).is_zero());
  // chi^2 = 2t+2, so [1]_G = T^3 - (2t+2)T = T^3 + (t+1)T.
  CHECK(to_string(b) == "T^3 + (t + 1)*T");
}

TEST_CASE("decompose_in_bracket") {
  FieldPtr f3 = F3();
  TranslationGroup g = TranslationGroup::from_generator(FqElement::one(f3));
  DensePoly b = bracket_G(g);
  // f = [1]_G -> g = X.
  auto gx = decompose_in_bracket(b, g);
  REQUIRE(gx.has_value());
  CHECK(*gx == DensePoly::T(f3));
  // The degree-6 c-Wieferich prime decomposes as X^2 + X + 2 in X = T^3 - T.
  auto g6 = decompose_in_bracket(P(f3, "T^6 + T^4 + T^3 + T^2 + 2*T + 2"), g);
  REQUIRE(g6.has_value());
  CHECK(to_string(*g6) == "T^2 + T + 2");
  // T is not fixed by a group of order p.
  CHECK(!decompose_in_bracket(DensePoly::T(f3), g).has_value());
  CHECK_THROWS_AS(decompose_in_bracket(P(f3, "2*T^3"), g), NotMonic);
}

TEST_CASE("decompose_in_bracket round-trips and detects fixedness") {
  std::mt19937_64 rng(67);
  FieldPtr f9 = F9_paper();
  FqElement chi = E(f9, "t + 2");
  TranslationGroup g = TranslationGroup::from_generator(chi);
  DensePoly b = bracket_G(g);
  for (int trial = 0; trial < 20; ++trial) {
    // Build a G-fixed f = h([1]_G) from a random monic h.
    std::vector<FqElement> cs;
    const std::size_t d = 1 + rng() % 3;
    for (std::size_t i = 0; i < d; ++i) {
      FqElement c(f9);
      for (auto& w : c.words()) w = static_cast<Word>(rng() % 3);
      cs.push_back(c);
    }
    cs.push_back(FqElement::one(f9));
    DensePoly h = DensePoly::from_coeffs(f9, cs);
    DensePoly f = compose(h, b);
    auto back = decompose_in_bracket(f, g);
    REQUIRE(back.has_value());
    CHECK(*back == h);
    // NotFixed <=> some member moves f.
    bool fixed_all = true;
    for (const FqElement& m : g.members()) fixed_all &= (translate(f, m) == f);
    CHECK(fixed_all);
  }
}

TEST_CASE("trinomial irreducibility") {
  FieldPtr f3 = F3();
  CHECK(trinomial_irreducible(FqElement::one(f3), FqElement::one(f3)));       // T^3-T-1
  CHECK(!trinomial_irreducible(FqElement::one(f3), FqElement::zero(f3)));     // root 0
  CHECK_THROWS_AS(trinomial_irreducible(FqElement::zero(f3), FqElement::one(f3)), InvalidBeta);

  // The Example 2.3 cubics are irreducible over F_81: beta = -(2t^3+2t^2+2).
  FieldPtr f81 = F81_paper();
  FqElement beta = -E(f81, "2*t^3 + 2*t^2 + 2");
  for (const char* gtext : {"2*t^2 + t", "t^3 + t", "2*t^3 + t^2 + t"}) {
    CHECK(trinomial_irreducible(beta, -E(f81, gtext)));
  }

  // Equivalence with the definition via actual irreducibility, across a
  // small sweep of gamma.
  FieldPtr f9 = F9_paper();
  FqElement b9 = E(f9, "t + 1");
  for (std::uint64_t i = 0; i < 9; ++i) {
    FqElement gamma(f9);
    std::uint64_t idx = i;
    for (std::size_t k = gamma.words().size(); k-- > 0;) {
      gamma.words()[k] = static_cast<Word>(idx % 3);
      idx /= 3;
    }
    std::vector<FqElement> cs(4, FqElement::zero(f9));
    cs[3] = FqElement::one(f9);
    cs[1] = -b9;
    cs[0] = -gamma;
    DensePoly tri = DensePoly::from_coeffs(f9, cs);
    CHECK(trinomial_irreducible(b9, gamma) == is_irreducible(tri));
  }
}

TEST_CASE("factor_additive_trinomial over an absolute extension, q = p") {
  // Base F_3, so the trinomial is T^3 - T - t over F_81 (t^4+2t^3+2 = 0).
  FieldPtr f81 = F81_paper();
  FieldPtr f3 = F3();
  FqElement t = FqElement::generator(f81);
  FqElement tr3 = rel_trace(t, f3);
  auto fs = factor_additive_trinomial(t, f3);
  if (tr3.is_zero()) {
    CHECK(fs.size() == 3);  // splits into linears
  } else {
    CHECK(fs.size() == 1);  // the Artin-Schreier trinomial itself
    CHECK(fs[0].degree() == 3);
  }
}

TEST_CASE("factor_additive_trinomial through a genuine tower over F_9") {
  // F_{3^4} as a degree-2 step above the paper F_9: T^9 - T - alpha with
  // alpha the step generator.
  FieldPtr f9 = F9_paper();
  FieldPtr f81t = mk_extension_deg(f9, 2);
  FqElement z = FqElement::generator(f81t);
  auto fs = factor_additive_trinomial(z, f9);
  FqElement tr = rel_trace(z, f9);
  DensePoly prod = DensePoly::one(f81t);
  for (const DensePoly& f : fs) prod = prod * f;
  DensePoly target = DensePoly::monomial(FqElement::one(f81t), 9) - DensePoly::T(f81t) -
                     DensePoly::constant(z);
  CHECK(prod == target);
  if (tr.is_zero()) {
    CHECK(fs.size() == 9);
  } else {
    CHECK(fs.size() == 3);
    FqElement beta = tr.pow(2).promoted_to(f81t);
    for (const DensePoly& f : fs) {
      CHECK(f.degree() == 3);
      CHECK(f.coeff(1) == -beta);
      CHECK(f.coeff(2).is_zero());
    }
  }
  // alpha = 0: T^q - T splits into T * prod (T - c).
  auto fs0 = factor_additive_trinomial(FqElement::zero(f81t), f9);
  CHECK(fs0.size() == 9);
  for (const DensePoly& f : fs0) CHECK(f.degree() == 1);
}

TEST_CASE("factor_additive_trinomial agrees with the generic factorization") {
  std::mt19937_64 rng(71);
  Rng frng(73);
  int done = 0;
  struct Case {
    FieldPtr base;
    FieldPtr ext;
  };
  std::vector<Case> cases;
  cases.push_back({F3(), mk_extension_deg(F3(), 2)});
  cases.push_back({F3(), mk_extension_deg(F3(), 3)});
  cases.push_back({F9_paper(), mk_extension_deg(F9_paper(), 2)});
  cases.push_back({F4_paper(), mk_extension_deg(F4_paper(), 2)});
  cases.push_back({F5(), mk_extension_deg(F5(), 2)});
  while (done < 200) {
    const Case& c = cases[rng() % cases.size()];
    FqElement alpha(c.ext);
    for (auto& w : alpha.words()) w = static_cast<Word>(rng() % c.ext->characteristic());
    auto fast = factor_additive_trinomial(alpha, c.base);
    DensePoly tri = DensePoly::monomial(FqElement::one(c.ext),
                                        static_cast<std::size_t>(c.base->order())) -
                    DensePoly::T(c.ext) - DensePoly::constant(alpha);
    auto generic = factor(tri, frng);
    REQUIRE(fast.size() == generic.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(generic[i].multiplicity == 1);
      CHECK(fast[i] == generic[i].factor);
    }
    ++done;
  }
}

TEST_CASE("loki decomposition") {
  FieldPtr f3 = F3();
  TranslationGroup g = TranslationGroup::from_generator(FqElement::one(f3));
  DensePoly p6 = P(f3, "T^6 + T^4 + T^3 + T^2 + 2*T + 2");
  auto fs = loki_decompose(p6, g);
  REQUIRE(fs.size() == 2);
  for (const DensePoly& f : fs) {
    CHECK(f.degree() == 3);
    CHECK(f.coeff(2).is_zero());
    CHECK(f.coeff(1) == -FqElement::one(f.field()));  // T^3 - T - gamma
  }
  // s = 1: already almost Artin-Schreier.
  DensePoly as = P(f3, "T^3 + 2*T + 2");  // T^3 - T - 1
  CHECK(is_irreducible(as));
  auto fs1 = loki_decompose(as, g);
  REQUIRE(fs1.size() == 1);
  CHECK(fs1[0] == as);
  // Non-fixed prime -> NotFixed (the paper lists T^3+T+1 as non-fixed
  // over F_16).
  FieldPtr f16 = F16_paper();
  TranslationGroup g2 = TranslationGroup::from_generator(FqElement::one(f16));
  CHECK_THROWS_AS(loki_decompose(P(f16, "T^3 + T + 1"), g2), NotFixed);
  CHECK_THROWS_AS(loki_decompose(P(f3, "T^2 + 2"), g), NotPrime);
}
