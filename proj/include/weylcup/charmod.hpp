#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "weylcup/vecpart.hpp"
#include "weylcup/weyl.hpp"

namespace weylcup {

// Exact character of an irreducible module, stored on dominant-chamber
// representatives only; W-orbits are expanded on demand.
struct CharacterTable {
  Weight highestWeight;
  std::map<Weight, mpz_class> dominantMult;
  mpz_class dimension;
};

// Components of a tensor product: dominant weight -> multiplicity.
using Decomposition = std::map<Weight, mpz_class>;

// Representative of the W-orbit of nu in the dominant chamber (linear action).
Weight dominantRep(const RootSystem& rs, const Weight& nu);

// Sort lambda into the closed dominant chamber, tracking the sign of the
// sorting element.  singular is set when the result lies on a wall.
struct ChamberSort {
  bool singular = false;
  Weight sorted;
  int sign = 1;
};
ChamberSort sortToChamber(const RootSystem& rs, const Weight& lambda);

std::vector<Weight> weylOrbit(const RootSystem& rs, const Weight& nu);

mpz_class weylDimension(const RootSystem& rs, const Weight& mu);

// Freudenthal recursion; exact multiplicities for every weight of V_mu.
CharacterTable character(const RootSystem& rs, const Weight& mu);

// Weight multiplicity inside V_mu (0 when nu is not a weight).
mpz_class weightMultiplicity(const RootSystem& rs, const CharacterTable& table, const Weight& nu);

// Full weight multiset of V_mu, all orbits expanded.
std::map<Weight, mpz_class> fullWeightMultiset(const RootSystem& rs, const CharacterTable& table);

// Brauer-Klimyk: decompose V_mu1 (x) V_mu2 exactly.
Decomposition tensorDecompose(const RootSystem& rs, const Weight& mu1, const Weight& mu2);

// Iterated decomposition of V_mu1 (x) ... (x) V_muk.
Decomposition tensorDecomposeList(const RootSystem& rs, const std::vector<Weight>& mus);

mpz_class tensorMultiplicity(const RootSystem& rs, const std::vector<Weight>& mus, const Weight& mu);

// dim of the invariant subspace of V_mu1 (x) ... (x) V_muk.
mpz_class multiInvariantDim(const RootSystem& rs, const std::vector<Weight>& mus);

// Highest weight of the dual module, -w0(mu).
Weight dualWeight(const RootSystem& rs, const Weight& mu);

// Signed double sum over W^2 of Kostant partition values; agrees with
// tensorDecompose and is kept as an independent cross-check.
mpz_class steinbergMultiplicity(const RootSystem& rs, const WeylGroup& W, const Weight& mu,
                                const Weight& mu1, const Weight& mu2);

// Signed sum over W of Kostant partition values; agrees with character(mu).
mpz_class kostantWeightMultiplicity(const RootSystem& rs, const WeylGroup& W, const Weight& mu,
                                    const Weight& nu);

}  // namespace weylcup
