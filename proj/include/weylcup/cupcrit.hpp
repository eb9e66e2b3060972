#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "weylcup/bwb.hpp"
#include "weylcup/schubert.hpp"

namespace weylcup {

// True iff Phi_w is the disjoint union of the Phi_{w_i} (disjointness and
// coverage both checked).
bool isPartition(const std::vector<InvSet>& wList, const InvSet& w);
bool isPartition(const RootSystem& rs, const std::vector<WeylElement>& wList, const WeylElement& w);

enum class CupVerdict { Surjective, Zero, BothSidesNotNonzero };

const char* verdictName(CupVerdict v);

// Verdict for a cup-product problem, with the witness data used to decide it.
// The intersection number is advisory cross-reporting; in classical types it
// must agree with the verdict (0 forces Zero, 1 forces Surjective) and that
// agreement is exercised by the tests, not asserted here.
struct Verdict {
  CupVerdict kind = CupVerdict::Zero;
  std::vector<InvSet> factorInversions;
  InvSet targetInversions;
  bool partition = false;
  mpz_class intersection = 0;
};

Verdict surjectivityVerdict(const RootSystem& rs, const WeylGroup& W, SchubertCalc& calc,
                            const CupProblem& problem);

// All ordered k-tuples (w_1..w_k) whose inversion sets partition Phi_w
// (defaults to the full set of positive roots when w is the longest element).
std::vector<std::vector<int>> enumeratePartitionTuples(const WeylGroup& W, int k,
                                                       std::optional<int> w = std::nullopt);

// Given a tuple partitioning all positive roots, the unique element whose
// inversion set is the union over the index subset; throws NoWitness if the
// union is no inversion set (which would falsify the subset property).
int subsetWitness(const WeylGroup& W, const std::vector<int>& tuple, const std::vector<int>& subset);

// Minimal coset-representative lengths add for every standard parabolic.
bool factorizationLengthCheck(const WeylGroup& W, int w1, int w2, int w);

}  // namespace weylcup
