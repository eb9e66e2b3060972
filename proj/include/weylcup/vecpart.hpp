#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "weylcup/weyl.hpp"

namespace weylcup {

// Multiset of positive roots, stored as a multiplicity per positive-root index.
struct RootMultiset {
  std::vector<long long> mult;  // size = numPositiveRoots

  static RootMultiset empty(const RootSystem& rs) {
    RootMultiset s;
    s.mult.assign(static_cast<size_t>(rs.numPositiveRoots()), 0);
    return s;
  }
  static RootMultiset allPositive(const RootSystem& rs, long long m = 1) {
    RootMultiset s;
    s.mult.assign(static_cast<size_t>(rs.numPositiveRoots()), m);
    return s;
  }
  static RootMultiset fromInversions(const RootSystem& rs, const InvSet& inv) {
    RootMultiset s = empty(rs);
    for (int k = 0; k < rs.numPositiveRoots(); ++k)
      if (inv.test(static_cast<size_t>(k))) s.mult[static_cast<size_t>(k)] = 1;
    return s;
  }

  RootMultiset& unionAdd(const RootMultiset& other) {
    for (size_t i = 0; i < mult.size(); ++i) mult[i] += other.mult[i];
    return *this;
  }
  // Reduce every nonzero multiplicity by one.
  RootMultiset& minusDeltaPlus() {
    for (auto& m : mult)
      if (m > 0) --m;
    return *this;
  }
  long long total() const {
    long long t = 0;
    for (auto m : mult) t += m;
    return t;
  }
  bool operator==(const RootMultiset& other) const { return mult == other.mult; }
};

// Number of ways to write gamma as a nonnegative integer combination of the
// multiset elements, i.e. the coefficient of e^gamma in
// prod_alpha (1 - e^alpha)^{-mult(alpha)}.  gamma is given as integer
// simple-root coordinates.
mpz_class partitionCount(const RootSystem& rs, const RootMultiset& S,
                         const std::vector<long long>& gammaRootCoords);

// Same, for a weight; zero when gamma is not in the nonnegative root lattice.
mpz_class partitionCount(const RootSystem& rs, const RootMultiset& S, const Weight& gamma);

// Kostant partition function P = P_{Delta+}.
mpz_class kostantPartition(const RootSystem& rs, const Weight& gamma);
mpz_class kostantPartition(const RootSystem& rs, const std::vector<long long>& gammaRootCoords);

// S = (U_i Phi_{w_i}^c  U  Phi_w) \ Delta+, multiplicities added, then every
// nonzero multiplicity reduced by one.  When Phi_w is partitioned by the
// Phi_{w_i} this equals (k-1) * Delta+.
RootMultiset theoremMultiset(const RootSystem& rs, const std::vector<InvSet>& wList, const InvSet& w);

// Parse "{a1:2, a1+a2:1}" or "{a1,a2}" into a multiset; roots are written as
// sums like "a1+a2" or "2a1+3a2".
RootMultiset parseRootMultiset(const RootSystem& rs, const std::string& text);
std::string multisetString(const RootSystem& rs, const RootMultiset& S);
std::string rootString(const RootSystem& rs, int posRootIdx);

}  // namespace weylcup
