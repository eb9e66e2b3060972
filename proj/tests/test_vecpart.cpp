#include <doctest.h>

#include <ostream>

#include "support/oracles.hpp"
#include "weylcup/vecpart.hpp"

using namespace weylcup;

TEST_SUITE_BEGIN("vecpart");

TEST_CASE("P_S(0) = 1 and out-of-span values vanish") {
  RootSystem rs = RootSystem::parse("A2");
  RootMultiset full = RootMultiset::allPositive(rs);
  CHECK(partitionCount(rs, full, Weight({0, 0})) == 1);
  CHECK(partitionCount(rs, RootMultiset::empty(rs), std::vector<long long>{0, 0}) == 1);

  // S = {a1}: a2 is outside the span.
  RootMultiset s = RootMultiset::empty(rs);
  s.mult[static_cast<size_t>(rs.rootIndex({1, 0}))] = 1;
  CHECK(partitionCount(rs, s, std::vector<long long>{0, 1}) == 0);
  // negative coordinates vanish
  CHECK(kostantPartition(rs, std::vector<long long>{-1, 2}) == 0);
}

TEST_CASE("Kostant counts match brute enumeration") {
  RootSystem rs = RootSystem::parse("A2");
  // gamma = a1 + a2: {a1+a2} and {a1, a2}
  CHECK(kostantPartition(rs, std::vector<long long>{1, 1}) == 2);
  // gamma = 2a1 + a2: {a1, a1+a2} and {a1, a1, a2}
  CHECK(kostantPartition(rs, std::vector<long long>{2, 1}) == 2);
  // simple roots have exactly one expression
  CHECK(kostantPartition(rs, std::vector<long long>{1, 0}) == 1);

  oracles::Rng rng(42);
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem sys = RootSystem::parse(label);
    std::vector<long long> ones(static_cast<size_t>(sys.numPositiveRoots()), 1);
    for (int t = 0; t < 25; ++t) {
      std::vector<long long> gamma(static_cast<size_t>(sys.rank()));
      for (auto& x : gamma) x = rng.below(7);
      mpz_class lib = kostantPartition(sys, gamma);
      long brute = oracles::brutePartitionCount(sys, gamma, ones);
      CHECK(lib == brute);
    }
  }
}

TEST_CASE("multiset partition counts match brute enumeration") {
  RootSystem rs = RootSystem::parse("B2");
  oracles::Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    RootMultiset S = RootMultiset::empty(rs);
    for (auto& m : S.mult) m = rng.below(3);
    std::vector<long long> gamma(static_cast<size_t>(rs.rank()));
    for (auto& x : gamma) x = rng.below(6);
    CHECK(partitionCount(rs, S, gamma) == oracles::brutePartitionCount(rs, gamma, S.mult));
  }
}

TEST_CASE("theorem multiset: partition tuples give (k-1) Delta+") {
  RootSystem rs = RootSystem::parse("A2");
  WeylGroup W = WeylGroup::enumerate(rs);
  InvSet phi1 = WeylElement::fromWord(rs, {1}).inversionSet(rs);
  InvSet phi2 = WeylElement::fromWord(rs, {1, 2}).inversionSet(rs);
  InvSet w0 = longestElement(rs).inversionSet(rs);

  RootMultiset S = theoremMultiset(rs, {phi1, phi2}, w0);
  CHECK(S == RootMultiset::allPositive(rs, 1));

  // k = 1 with w1 = w: the empty multiset
  RootMultiset S1 = theoremMultiset(rs, {phi2}, phi2);
  CHECK(S1 == RootMultiset::empty(rs));
}

TEST_CASE("theorem multiset: general multiplicity recount") {
  RootSystem rs = RootSystem::parse("A5");
  WeylElement w1 = WeylElement::fromWord(rs, {2, 4, 3});
  WeylElement w = WeylElement::fromWord(rs, {1, 3, 5, 2, 4, 3});
  InvSet p1 = w1.inversionSet(rs), pw = w.inversionSet(rs);
  RootMultiset S = theoremMultiset(rs, {p1, p1}, pw);
  for (int k = 0; k < rs.numPositiveRoots(); ++k) {
    long long expect = 2 - 2 * (p1.test(static_cast<size_t>(k)) ? 1 : 0) +
                       (pw.test(static_cast<size_t>(k)) ? 1 : 0) - 1;
    if (expect < 0) expect = 0;  // reduction clamps at zero only for absent roots
    CHECK(S.mult[static_cast<size_t>(k)] == expect);
  }
}

TEST_CASE("generating-function consistency of disjoint unions") {
  RootSystem rs = RootSystem::parse("A2");
  oracles::Rng rng(44);
  for (int t = 0; t < 10; ++t) {
    RootMultiset S1 = RootMultiset::empty(rs), S2 = RootMultiset::empty(rs);
    for (auto& m : S1.mult) m = rng.below(2);
    for (auto& m : S2.mult) m = rng.below(2);
    RootMultiset SU = S1;
    SU.unionAdd(S2);
    std::vector<long long> gamma{rng.below(4), rng.below(4)};
    // P_{S1 u S2}(gamma) = sum_delta P_{S1}(delta) P_{S2}(gamma - delta)
    mpz_class expect = 0;
    for (long long d1 = 0; d1 <= gamma[0]; ++d1)
      for (long long d2 = 0; d2 <= gamma[1]; ++d2)
        expect += partitionCount(rs, S1, std::vector<long long>{d1, d2}) *
                  partitionCount(rs, S2, std::vector<long long>{gamma[0] - d1, gamma[1] - d2});
    CHECK(partitionCount(rs, SU, gamma) == expect);
  }
}

TEST_CASE("multiset parsing round trip") {
  RootSystem rs = RootSystem::parse("A2");
  RootMultiset S = parseRootMultiset(rs, "{a1:2, a1+a2:1}");
  CHECK(S.mult[static_cast<size_t>(rs.rootIndex({1, 0}))] == 2);
  CHECK(S.mult[static_cast<size_t>(rs.rootIndex({1, 1}))] == 1);
  CHECK(S.mult[static_cast<size_t>(rs.rootIndex({0, 1}))] == 0);
  CHECK_THROWS_AS(parseRootMultiset(rs, "{a1+a1:1}"), RootNotInSystem);
}

TEST_SUITE_END();
