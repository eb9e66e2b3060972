#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "weylcup/charmod.hpp"
#include "weylcup/cupcrit.hpp"

namespace weylcup {

// A witness tuple (w_1..w_k, w) for the weight identity
// w^{-1} mu = sum_i w_i^{-1} mu_i, by enumerated-group indices.
struct WitnessTuple {
  std::vector<int> ws;
  int w = 0;
};

// First tuple (lexicographic in the enumeration order) satisfying the weight
// identity; nullopt when none exists.
std::optional<WitnessTuple> genPRVWitness(const WeylGroup& W, const std::vector<Weight>& mus,
                                          const Weight& mu, size_t searchCap = 100000000);

// Same, additionally requiring Phi_w = disjoint union of the Phi_{w_i}.
std::optional<WitnessTuple> cohomologicalWitness(const WeylGroup& W,
                                                 const std::vector<Weight>& mus, const Weight& mu,
                                                 size_t searchCap = 100000000);

// Multiplicity of V_{m mu} in the product of the V_{m mu_i} for m = 1..mMax.
// A bounded probe, not a certificate of stable behaviour.
std::map<long long, mpz_class> stableMultProbe(const RootSystem& rs,
                                               const std::vector<Weight>& mus, const Weight& mu,
                                               int mMax = 4,
                                               const mpz_class& dimBudget = mpz_class("1000000000000"));

struct ConeInequalityFailure {
  std::vector<int> ws;
  int w;
  std::vector<mpq_class> deficit;  // root coords of sum w_i^{-1}mu_i - w^{-1}mu
};

// Necessary cone inequalities: over every tuple with additive lengths and a
// nonzero intersection number, sum w_i^{-1}mu_i - w^{-1}mu must lie in the
// nonnegative rational span of the positive roots.
struct ConeMembership {
  bool member = true;
  std::vector<ConeInequalityFailure> failures;
};
ConeMembership bsMembership(const WeylGroup& W, SchubertCalc& calc,
                            const std::vector<Weight>& mus, const Weight& mu);

// Face data for a set I of simple roots (1-based indices).
struct FaceDatum {
  std::vector<int> simpleI;
  std::vector<int> ws;
  int w = 0;
  bool lengthAndIntersection = false;  // lengths add and intersection number is 1
  bool minimalInCosets = false;
  bool rhoSpanCondition = false;       // sum w_i^{-1}.0 - w^{-1}.0 in Z>=0 span of I
  int codimension = 0;
  bool valid() const { return lengthAndIntersection && minimalInCosets && rhoSpanCondition; }
};

FaceDatum ressayreFaceCheck(const WeylGroup& W, SchubertCalc& calc, const std::vector<int>& simpleI,
                            const std::vector<int>& ws, int w);

// Partition-function bound on the multiplicity attached to a tuple with
// nonzero intersection number; throws ZeroIntersection otherwise.
mpz_class multiplicityBound(const WeylGroup& W, SchubertCalc& calc, const std::vector<int>& ws,
                            int w, const std::vector<Weight>& mus, const Weight& mu);

// Stabilizer-root data at a torus point built from (mu_i, w_i) with
// sum w_i^{-1} mu_i = 0: roots pairing to zero with every w_i^{-1}mu_i.
// Returned as signed root-coordinate vectors (symmetric under negation).
std::vector<RootVec> stabilizerRoots(const WeylGroup& W, const std::vector<Weight>& mus,
                                     const std::vector<int>& ws);

// Roots strictly negative against at least two of the w_i^{-1}mu_i, with
// multiplicity (#negative pairings - 1).
std::map<RootVec, int> normalRoots(const WeylGroup& W, const std::vector<Weight>& mus,
                                   const std::vector<int>& ws);

// Marker classes used in the planar component tables.
enum class ComponentMarker {
  Plain,               // component, not generalized PRV
  Cohomological,       // witness with the inversion-set partition
  PrvMultiple,         // generalized PRV, multiplicity > 1
  PrvUnstable,         // generalized PRV, multiplicity one but probe leaves one
  PrvStableSuspect,    // generalized PRV, probe all ones, no partition witness
};

const char* markerName(ComponentMarker m);

struct ComponentReport {
  Weight mu;
  mpz_class multiplicity;
  bool genPRV = false;
  std::optional<WitnessTuple> prvWitness;
  bool cohomological = false;
  std::optional<WitnessTuple> cohWitness;
  std::map<long long, mpz_class> stableProbe;
  ComponentMarker marker = ComponentMarker::Plain;
};

ComponentReport classifyComponent(const WeylGroup& W, const std::vector<Weight>& mus,
                                  const Weight& mu, const mpz_class& multiplicity, int mMax = 4);

// Classify every component of V_mu1 (x) V_mu2 (rank-2 systems).
std::vector<ComponentReport> multiplicityTable(const WeylGroup& W, const Weight& mu1,
                                               const Weight& mu2, int mMax = 4);

}  // namespace weylcup
