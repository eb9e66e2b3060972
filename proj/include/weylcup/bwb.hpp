#pragma once

#include <optional>
#include <vector>

#include "weylcup/weyl.hpp"

namespace weylcup {

// Answer of the line-bundle cohomology classifier: either every degree
// vanishes, or exactly one degree l(w) survives.  dualHighestWeight is w.lambda
// (the module in that degree is the dual of the irreducible with this highest
// weight; the duality is the caller's concern).
struct BwbAnswer {
  bool vanishing = true;
  WeylElement w;
  int degree = 0;
  Weight dualHighestWeight;
};

// Vanishing iff lambda + rho is singular; otherwise the unique w with
// w.lambda dominant and the degree l(w).
BwbAnswer bwbClassify(const RootSystem& rs, const Weight& lambda);

// S(lambda) = -lambda - 2 rho; an involution commuting with the dot action.
Weight serreDual(const RootSystem& rs, const Weight& lambda);

// A cup-product problem: regular twisting weights lambda_i, target their sum.
struct CupProblem {
  std::vector<Weight> lambdas;
  Weight lambda;  // sum of lambdas
  std::vector<BwbAnswer> factors;
  BwbAnswer target;
};

CupProblem makeCupProblem(const RootSystem& rs, const std::vector<Weight>& lambdas);

// Append lambda_{k+1} = S(lambda); the symmetric problem has weight sum -2rho
// and its target is the canonical degree-N line.
CupProblem symmetrize(const RootSystem& rs, const CupProblem& p);

// Inverse of symmetrize with respect to the factor at `index`.
CupProblem desymmetrize(const RootSystem& rs, const CupProblem& sym, size_t index);

}  // namespace weylcup
