#include <doctest.h>

#include <ostream>

#include <set>

#include "support/oracles.hpp"
#include "weylcup/weyl.hpp"

using namespace weylcup;

TEST_SUITE_BEGIN("weyl");

TEST_CASE("simple reflection acts as the reflection formula") {
  RootSystem rs = RootSystem::parse("A2");
  WeylElement s1 = WeylElement::simpleReflection(rs, 1);
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b)
      CHECK(s1.actWeight(Weight({a, b})) == Weight({-a, a + b}));
  CHECK(WeylElement::fromWord(rs, {}).isIdentity());
}

TEST_CASE("braid words give equal elements") {
  RootSystem rs = RootSystem::parse("A2");
  WeylElement w1 = WeylElement::fromWord(rs, {1, 2, 1});
  WeylElement w2 = WeylElement::fromWord(rs, {2, 1, 2});
  CHECK(w1 == w2);
  CHECK(w1 == longestElement(rs));
  CHECK(w1.length(rs) == 3);
  CHECK(w1.minWord(rs) == std::vector<int>{1, 2, 1});
}

TEST_CASE("inversion sets: frozen small cases") {
  RootSystem rs = RootSystem::parse("A2");
  int ia1 = rs.rootIndex({1, 0}), ia2 = rs.rootIndex({0, 1}), ia12 = rs.rootIndex({1, 1});

  InvSet s1 = WeylElement::fromWord(rs, {1}).inversionSet(rs);
  CHECK(s1.count() == 1);
  CHECK(s1.test(static_cast<size_t>(ia1)));

  // s1 s2 inverts a2 and a1+a2 (apply it to every positive root)
  InvSet s12 = WeylElement::fromWord(rs, {1, 2}).inversionSet(rs);
  CHECK(s12.count() == 2);
  CHECK(s12.test(static_cast<size_t>(ia2)));
  CHECK(s12.test(static_cast<size_t>(ia12)));

  InvSet w0 = longestElement(rs).inversionSet(rs);
  CHECK(w0.count() == 3);
}

TEST_CASE("dot action: frozen examples and group law") {
  RootSystem rs = RootSystem::parse("A2");
  WeylElement s1 = WeylElement::fromWord(rs, {1});
  CHECK(s1.dot(Weight({0, 0})) == Weight({-2, 1}));
  WeylElement w0 = longestElement(rs);
  CHECK(w0.dot(-2 * rs.rho()) == Weight({0, 0}));

  oracles::Rng rng(777);
  for (int t = 0; t < 20; ++t) {
    std::vector<long long> c{rng.below(9) - 4, rng.below(9) - 4};
    Weight lam(c);
    CHECK(s1.dot(s1.inverse().dot(lam)) == lam);
  }
}

TEST_CASE("group orders via enumeration") {
  CHECK(WeylGroup::enumerate(RootSystem::parse("A2")).size() == 6);
  CHECK(WeylGroup::enumerate(RootSystem::parse("B2")).size() == 8);
  CHECK(WeylGroup::enumerate(RootSystem::parse("A5")).size() == 720);
  CHECK(WeylGroup::enumerate(RootSystem::parse("G2")).size() == 12);
  CHECK_THROWS_AS(WeylGroup::enumerate(RootSystem::parse("A5"), 100), GroupTooLarge);
}

TEST_CASE("minimal coset representatives") {
  RootSystem rs = RootSystem::parse("A2");
  WeylElement w0 = longestElement(rs);
  // I = all simple roots: the coset of w0 is all of W, whose minimum is e.
  CHECK(minimalCosetRep(rs, w0, {1, 2}).isIdentity());
  // I empty: w itself.
  CHECK(minimalCosetRep(rs, w0, {}) == w0);
  // I = {a1}: representative of length 2 with inversion set avoiding a1.
  WeylElement rep = minimalCosetRep(rs, w0, {1});
  CHECK(rep.length(rs) == 2);
  CHECK_FALSE(rep.inversionSet(rs).test(static_cast<size_t>(rs.rootIndex({1, 0}))));
}

TEST_CASE("bruhat order: frozen examples and poset sanity") {
  RootSystem rs = RootSystem::parse("A2");
  WeylElement e = WeylElement::identity(rs);
  WeylElement s1 = WeylElement::fromWord(rs, {1});
  WeylElement s2 = WeylElement::fromWord(rs, {2});
  WeylElement s21 = WeylElement::fromWord(rs, {2, 1});
  WeylElement w0 = longestElement(rs);
  CHECK(bruhatLeq(rs, e, w0));
  CHECK(bruhatLeq(rs, e, s1));
  CHECK_FALSE(bruhatLeq(rs, s1, s2));
  CHECK(bruhatLeq(rs, s1, s21));
  CHECK(bruhatLeq(rs, s2, s21));
  CHECK_FALSE(bruhatLeq(rs, w0, s21));

  WeylGroup W = WeylGroup::enumerate(rs);
  for (size_t u = 0; u < W.size(); ++u)
    for (size_t w = 0; w < W.size(); ++w)
      CHECK(W.bruhatLeqIdx(static_cast<int>(u), static_cast<int>(w)) ==
            bruhatLeq(rs, W.element(static_cast<int>(u)), W.element(static_cast<int>(w))));
}

TEST_CASE("inversion-set identities, exhaustive over small groups") {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = RootSystem::parse(label);
    WeylGroup W = WeylGroup::enumerate(rs);
    int w0 = W.longestIdx();
    InvSet all = W.inversions(w0);
    CHECK(static_cast<int>(all.count()) == rs.numPositiveRoots());
    for (size_t a = 0; a < W.size(); ++a) {
      int idx = static_cast<int>(a);
      // |Phi_w| = l(w) = reduced-word length
      CHECK(static_cast<int>(W.inversions(idx).count()) ==
            static_cast<int>(W.minWord(idx).size()));
      // Phi_{w0 w} is the complement of Phi_w
      int w0w = W.compose(w0, idx);
      CHECK(W.inversions(w0w) == (all & ~W.inversions(idx)));
      // sum of Phi_w = rho - w^{-1} rho
      Weight sum = Weight::zero(rs.rank());
      for (int k = 0; k < rs.numPositiveRoots(); ++k)
        if (W.inversions(idx).test(static_cast<size_t>(k)))
          sum = sum + rs.rootAsWeight(rs.positiveRoot(k));
      Weight rhs = rs.rho() - W.element(W.inverseIdx(idx)).actWeight(rs.rho());
      CHECK(sum == rhs);
      // w^{-1} . 0 = -sum
      CHECK(W.element(W.inverseIdx(idx)).dot(Weight::zero(rs.rank())) == -sum);
    }
  }
}

TEST_CASE("w^{-1}(Delta+) splits into the complement and minus the inversions") {
  RootSystem rs = RootSystem::parse("B2");
  WeylGroup W = WeylGroup::enumerate(rs);
  for (size_t a = 0; a < W.size(); ++a) {
    const WeylElement winv = W.element(W.inverseIdx(static_cast<int>(a)));
    std::multiset<RootVec> lhs, rhs;
    for (int k = 0; k < rs.numPositiveRoots(); ++k)
      lhs.insert(winv.actRoot(rs.positiveRoot(k)));
    for (int k = 0; k < rs.numPositiveRoots(); ++k) {
      RootVec r = rs.positiveRoot(k);
      if (W.inversions(static_cast<int>(a)).test(static_cast<size_t>(k))) {
        for (auto& x : r) x = -x;
        rhs.insert(r);
      } else {
        rhs.insert(r);
      }
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("word parsing") {
  CHECK(parseWord("s1*s2*s1", 2) == std::vector<int>{1, 2, 1});
  CHECK(parseWord("121", 2) == std::vector<int>{1, 2, 1});
  CHECK(parseWord("e", 5).empty());
  CHECK_THROWS_AS(parseWord("s3", 2), BadIndex);
  CHECK_THROWS_AS(parseWord("1x1", 2), ParseError);
}

TEST_SUITE_END();
