#include <doctest.h>

#include <ostream>

#include "support/oracles.hpp"
#include "weylcup/schubert.hpp"

using namespace weylcup;

namespace {

// Independent subword enumeration of the restriction for tiny words: iterate
// all 2^m subsets, multiply the position roots, keep products equal to u.
RestrictionPoly bruteRestriction(const WeylGroup& W, int u, int v) {
  const RootSystem& rs = W.rootSystem();
  const std::vector<int>& word = W.minWord(v);
  size_t m = word.size();
  // position roots
  std::vector<RootVec> beta;
  WeylElement prefix = WeylElement::identity(rs);
  for (int letter : word) {
    RootVec e(static_cast<size_t>(rs.rank()), 0);
    e[static_cast<size_t>(letter - 1)] = 1;
    beta.push_back(prefix.actRoot(e));
    prefix = prefix * WeylElement::simpleReflection(rs, letter);
  }
  RestrictionPoly total;
  for (size_t mask = 0; mask < (1u << m); ++mask) {
    WeylElement prod = WeylElement::identity(rs);
    int letters = 0;
    for (size_t j = 0; j < m; ++j)
      if (mask & (1u << j)) {
        prod = prod * WeylElement::simpleReflection(rs, word[j]);
        ++letters;
      }
    if (letters != W.length(u) || !(prod == W.element(u))) continue;
    RestrictionPoly term;
    term.addMonomialTimes(std::vector<int>(static_cast<size_t>(rs.rank()), 0), 1);
    for (size_t j = 0; j < m; ++j)
      if (mask & (1u << j)) term = term.timesLinear(beta[j]);
    total = total + term;
  }
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("schubert");

TEST_CASE("restrictions: frozen small values") {
  RootSystem rs = RootSystem::parse("A2");
  WeylGroup W = WeylGroup::enumerate(rs);
  SchubertCalc calc(W);
  int e = W.identityIdx();
  int s1 = W.indexOf(WeylElement::fromWord(rs, {1}));
  int w0 = W.longestIdx();

  for (size_t v = 0; v < W.size(); ++v) {
    RestrictionPoly p = calc.billeyRestriction(e, static_cast<int>(v));
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms.begin()->second == 1);
  }

  // xi^{s1}(s1) = a1
  RestrictionPoly q = calc.billeyRestriction(s1, s1);
  REQUIRE(q.terms.size() == 1);
  CHECK(q.terms.at({1, 0}) == 1);

  // xi^{s1}(w0): sum over the two subword positions of the word s1 s2 s1
  RestrictionPoly r = calc.billeyRestriction(s1, w0);
  CHECK(r == bruteRestriction(W, s1, w0));
  // the positions carry a1 and s1 s2 (a1) = a2
  RestrictionPoly expect;
  expect.addMonomialTimes({1, 0}, 1);
  expect.addMonomialTimes({0, 1}, 1);
  CHECK(r.terms == expect.terms);

  // triangularity: zero unless u <= v
  int s2 = W.indexOf(WeylElement::fromWord(rs, {2}));
  CHECK(calc.billeyRestriction(s1, s2).isZero());

  // degree of the diagonal value, homogeneous of the length
  for (size_t v = 0; v < W.size(); ++v) {
    RestrictionPoly d = calc.billeyRestriction(static_cast<int>(v), static_cast<int>(v));
    CHECK(d.degree() == W.length(static_cast<int>(v)));
  }
}

TEST_CASE("restriction polynomials agree with brute subword sums") {
  RootSystem rs = RootSystem::parse("B2");
  WeylGroup W = WeylGroup::enumerate(rs);
  SchubertCalc calc(W);
  for (size_t u = 0; u < W.size(); ++u)
    for (size_t v = 0; v < W.size(); ++v) {
      RestrictionPoly a = calc.billeyRestriction(static_cast<int>(u), static_cast<int>(v));
      RestrictionPoly b = bruteRestriction(W, static_cast<int>(u), static_cast<int>(v));
      CHECK(a.terms == b.terms);
      if (!W.bruhatLeqIdx(static_cast<int>(u), static_cast<int>(v))) CHECK(a.isZero());
    }
}

TEST_CASE("structure constants: identity, frozen product, duality") {
  RootSystem rs = RootSystem::parse("A2");
  WeylGroup W = WeylGroup::enumerate(rs);
  SchubertCalc calc(W);
  int e = W.identityIdx();
  int s1 = W.indexOf(WeylElement::fromWord(rs, {1}));
  int s2 = W.indexOf(WeylElement::fromWord(rs, {2}));
  int s12 = W.indexOf(WeylElement::fromWord(rs, {1, 2}));
  int s21 = W.indexOf(WeylElement::fromWord(rs, {2, 1}));
  int w0 = W.longestIdx();

  for (size_t u = 0; u < W.size(); ++u)
    CHECK(calc.structureConstant(e, static_cast<int>(u), static_cast<int>(u)) == 1);

  // [Omega_{s1}][Omega_{s2}] = [Omega_{s1s2}] + [Omega_{s2s1}]
  CohClass prod = calc.multiplyBasis(s1, s2);
  REQUIRE(prod.size() == 2);
  CHECK(prod.at(s12) == 1);
  CHECK(prod.at(s21) == 1);

  // [Omega_{s1}]^2 = [Omega_{s2s1}]: the square of the divisor class is the
  // fibre curve class of the P^2 projection, and X_{s2} = Omega_{s2s1}.
  CohClass sq = calc.multiplyBasis(s1, s1);
  REQUIRE(sq.size() == 1);
  CHECK(sq.at(s21) == 1);
  CohClass sq2 = calc.multiplyBasis(s2, s2);
  REQUIRE(sq2.size() == 1);
  CHECK(sq2.at(s12) == 1);

  bool flag = false;
  CHECK(calc.structureConstant(s1, s2, w0, &flag) == 0);
  CHECK(flag);
}

TEST_CASE("duality, nonnegativity, symmetry, associativity") {
  for (const char* label : {"A2", "B2", "A3"}) {
    RootSystem rs = RootSystem::parse(label);
    WeylGroup W = WeylGroup::enumerate(rs);
    SchubertCalc calc(W);
    int w0 = W.longestIdx();
    for (size_t u = 0; u < W.size(); ++u) {
      // intersection of [Omega_u] with [X_u] is 1
      CHECK(calc.intersectionNumber({static_cast<int>(u)}, static_cast<int>(u)) == 1);
      CHECK(calc.structureConstant(static_cast<int>(u), W.compose(w0, static_cast<int>(u)), w0) ==
            1);
    }
    for (size_t u = 0; u < W.size(); ++u)
      for (size_t v = 0; v < W.size(); ++v) {
        if (W.length(static_cast<int>(u)) + W.length(static_cast<int>(v)) >
            rs.numPositiveRoots())
          continue;
        CohClass ab = calc.multiplyBasis(static_cast<int>(u), static_cast<int>(v));
        CohClass ba = calc.multiplyBasis(static_cast<int>(v), static_cast<int>(u));
        CHECK(ab == ba);
        for (const auto& [w, c] : ab) CHECK(c > 0);
      }
  }

  // associativity on a few random triples in B2
  RootSystem rs = RootSystem::parse("B2");
  WeylGroup W = WeylGroup::enumerate(rs);
  SchubertCalc calc(W);
  oracles::Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    int u = static_cast<int>(rng.below(static_cast<long long>(W.size())));
    int v = static_cast<int>(rng.below(static_cast<long long>(W.size())));
    int x = static_cast<int>(rng.below(static_cast<long long>(W.size())));
    CohClass left = calc.multiply(calc.multiplyBasis(u, v), x);
    CohClass right = calc.multiply(calc.multiplyBasis(v, x), u);
    CHECK(left == right);
  }
}

TEST_CASE("intersection numbers") {
  RootSystem rs = RootSystem::parse("A2");
  WeylGroup W = WeylGroup::enumerate(rs);
  SchubertCalc calc(W);
  int s1 = W.indexOf(WeylElement::fromWord(rs, {1}));
  int s12 = W.indexOf(WeylElement::fromWord(rs, {1, 2}));
  int w0 = W.longestIdx();
  // single class against itself
  CHECK(calc.intersectionNumber({s1}, s1) == 1);
  // partition pair: positive by the transversality fact
  CHECK(calc.intersectionNumber({s1, s12}, w0) >= 1);
  CHECK(calc.intersectionSymmetric({s1, s12}) >= 1);
  CHECK(calc.intersectionSymmetric({s1, s12}) == calc.intersectionNumber({s1}, W.compose(w0, s12)));
}

TEST_CASE("the A5 intersection number of the flag example is two") {
  RootSystem rs = RootSystem::parse("A5");
  WeylGroup W = WeylGroup::enumerate(rs);
  SchubertCalc calc(W);
  int w1 = W.indexOf(WeylElement::fromWord(rs, {2, 4, 3}));
  int w = W.indexOf(WeylElement::fromWord(rs, {1, 3, 5, 2, 4, 3}));
  REQUIRE(w1 >= 0);
  REQUIRE(w >= 0);
  CHECK(calc.intersectionNumber({w1, w1}, w) == 2);
}

TEST_SUITE_END();
