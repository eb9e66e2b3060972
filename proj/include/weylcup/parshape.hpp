#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weylcup/errors.hpp"

namespace weylcup {

// Classical ambient algebras for the parabolic (P, sigma) combinatorics.
// gl_n is used in place of sl_n so the center participates.
enum class ClassicalType { GL, B, C, D };

ClassicalType parseClassicalType(const std::string& label);  // "gl", "B", "C", "D"
std::string classicalName(ClassicalType t);

// Ordered partition of {0..n-1} with signs; Type II keeps a distinguished
// largest part I0 which carries no signs.  The a-parts (those indexed by the
// delta basis) are parts[0..k-1]; in Type II, part I0 is stored separately.
struct ParabolicDatum {
  ClassicalType algebra = ClassicalType::GL;
  int n = 0;
  bool typeII = false;
  std::vector<std::vector<int>> parts;  // a-parts, in the linear order of P
  std::vector<int> i0;                  // Type II only; the largest part
  std::vector<int> sigma;               // size n, +-1; entries in I0 forced to +1

  int k() const { return static_cast<int>(parts.size()); }
  void validate() const;  // throws InvalidDatum
  std::string str() const;
};

// a-root as an integer vector in delta coordinates (length k, entries -2..2).
using DeltaVec = std::vector<int>;

enum class ModuleShape { VVdual, VV, V, VV0, Wedge2, Sym2 };
const char* shapeName(ModuleShape s);

struct ARootSet {
  int k = 0;
  std::vector<DeltaVec> roots;
  std::vector<ModuleShape> shapes;

  int indexOf(const DeltaVec& v) const;
  bool contains(const DeltaVec& v) const { return indexOf(v) >= 0; }
};

// Roots of the ambient algebra in epsilon coordinates (entries -2..2).
std::vector<std::vector<int>> ambientRoots(ClassicalType t, int n);

// Restriction of an epsilon-root to the center of the reductive part: the
// coefficient of delta_i is the sigma-twisted sum of the coefficients over
// part i.  Zero vector means the root lives in the reductive part.
DeltaVec deltaRestriction(const ParabolicDatum& d, const std::vector<int>& epsRoot);

// The a-roots of the datum, computed from the ambient roots and cross-checked
// against the closed-form tables per type.
ARootSet aRoots(const ParabolicDatum& d);

bool isSaturated(const ARootSet& R, const std::vector<DeltaVec>& S);
// Minimal saturated superset: close under positive rational multiples in R.
std::vector<DeltaVec> saturate(const ARootSet& R, std::vector<DeltaVec> S);

// Order constraints read off a saturated S.  Nodes: GL — delta_i as i-1;
// otherwise +-delta_i as 2(i-1) (plus) and 2(i-1)+1 (minus).  For non-GL
// types the edge set is closed under the mirror symmetry x -> -x.
struct OrderGraph {
  bool signedNodes = false;
  int k = 0;
  std::vector<std::vector<int>> adj;

  int nodeCount() const { return signedNodes ? 2 * k : k; }
  static int negate(int node) { return node ^ 1; }
  std::string nodeName(int node) const;
};

OrderGraph orderGraph(const ParabolicDatum& d, const ARootSet& R, const std::vector<DeltaVec>& S);

// Topological order (negation-compatible in the signed case); nullopt iff the
// graph has a directed cycle.
std::optional<std::vector<int>> extendToLinearOrder(const OrderGraph& g);

// Shortest directed cycle, deterministic tie-break; nullopt when acyclic.
std::optional<std::vector<int>> findCycle(const OrderGraph& g);

struct ParabolicDesc {
  std::vector<std::vector<int>> orderedParts;  // Q: a-parts ordered, I0 last in Type II
  std::vector<int> tau;                        // size n signs
  std::vector<std::vector<int>> rootList;      // epsilon-roots of the parabolic
};

// Parabolic attached to a negation-compatible linear order extending the
// order graph of S; throws OrderIncompatible when the order does not.
ParabolicDesc parabolicFromOrder(const ParabolicDatum& d, const std::vector<int>& order);

// Every root space restricting to an element of S lies inside the parabolic.
bool verifyContainment(const ParabolicDatum& d, const std::vector<DeltaVec>& S,
                       const ParabolicDesc& p);

// Multiset of a-roots read off a directed cycle, with the doubling used for
// the one-index steps; its delta-coordinate sum is the returned vector and
// must vanish.
struct CycleWitness {
  std::vector<std::pair<DeltaVec, int>> multiset;  // a-root, multiplicity
  DeltaVec deltaSum;
};

CycleWitness cycleInvariantWitness(const ParabolicDatum& d, const ARootSet& R,
                                   const std::vector<DeltaVec>& S, const std::vector<int>& cycle);

struct AppendixResult {
  std::vector<DeltaVec> saturatedS;
  bool extendable = false;
  std::optional<std::vector<int>> order;
  std::optional<ParabolicDesc> parabolic;
  bool containmentVerified = false;
  std::optional<std::vector<int>> cycle;
  std::optional<CycleWitness> witness;
};

// Full pipeline: saturate, build the order graph, either extend and verify
// the containment or produce a zero-sum cycle witness.
AppendixResult appendixCheck(const ParabolicDatum& d, const std::vector<DeltaVec>& S0);

// All (P, sigma) data of both types for the given ambient algebra.  The
// sign on a singleton largest part of a D Type I datum is canonicalized to +1
// (two such sign choices describe the same parabolic).
std::vector<ParabolicDatum> enumerateData(ClassicalType t, int n);

// All saturated subsets of R with at most maxSize elements (unions of
// proportionality classes).
void forEachSaturated(const ARootSet& R, int maxSize,
                      const std::function<void(const std::vector<DeltaVec>&)>& fn);

// Exhaustive equivalence sweep over all data and saturated sets: counts how
// often the order extends, and demands containment on the extendable side and
// a zero-sum cycle witness otherwise.  Any violation is collected.
struct SweepStats {
  long long data = 0;
  long long saturatedSets = 0;
  long long extendable = 0;
  long long cycles = 0;
  std::vector<std::string> violations;
};

SweepStats sweepTheorem(ClassicalType t, int n, int maxSatSize, int threads = 1);

// Parse "d1-d2" / "2d1" / "-d1+d2" into a delta vector of length k.
DeltaVec parseDeltaExpr(const std::string& text, int k);
std::string deltaString(const DeltaVec& v);

}  // namespace weylcup
