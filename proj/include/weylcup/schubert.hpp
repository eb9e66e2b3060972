#pragma once

#include <gmpxx.h>

#include <map>
#include <unordered_map>
#include <vector>

#include "weylcup/weyl.hpp"

namespace weylcup {

// Homogeneous exact-rational polynomial in the simple roots, sparse in the
// monomial exponents.
struct RestrictionPoly {
  std::map<std::vector<int>, mpq_class> terms;

  bool isZero() const { return terms.empty(); }
  int degree() const;
  RestrictionPoly& addMonomialTimes(const std::vector<int>& expo, const mpq_class& coef);
  friend RestrictionPoly operator+(const RestrictionPoly& a, const RestrictionPoly& b);
  // Multiply by a linear form sum_j c_j alpha_j.
  RestrictionPoly timesLinear(const std::vector<long long>& c) const;
  mpq_class evalAt(const std::vector<mpq_class>& point) const;
  bool operator==(const RestrictionPoly& other) const { return terms == other.terms; }
  std::string str() const;
};

// Formal integer combination of dual Schubert classes, graded by length.
using CohClass = std::map<int, mpz_class>;  // element index -> coefficient

// Structure constants of the cohomology of the full flag variety in the basis
// of dual Schubert classes, computed from equivariant fixed-point restrictions
// (subword formula) by a Bruhat-triangular solve.  All evaluations happen at a
// fixed generic rational point, where the diagonal restrictions are nonzero
// products of positive roots; the solved top-degree coefficient is the exact
// integer constant.
class SchubertCalc {
 public:
  explicit SchubertCalc(const WeylGroup& W);

  const WeylGroup& group() const { return *W_; }

  // Restriction of the class of u at the fixed point v, as a polynomial:
  // sum over subwords of the fixed reduced word of v multiplying to u of the
  // products of prefix-rotated simple roots.
  RestrictionPoly billeyRestriction(int u, int v);

  // c^w_{u,v} with l(w) = l(u) + l(v); zero (with the flag set) on a length
  // mismatch.
  mpz_class structureConstant(int u, int v, int w, bool* lengthMismatch = nullptr);

  // Product of [Omega_u] and [Omega_v], expanded in dual Schubert classes.
  CohClass multiplyBasis(int u, int v);
  CohClass multiply(const CohClass& a, int v);

  // Intersection of the dual classes [Omega_{w_i}] against [X_w]: the
  // coefficient of [Omega_w] in the product, 0 unless lengths add up.
  mpz_class intersectionNumber(const std::vector<int>& ws, int w);

  // Symmetric form: coefficient of the top class in the product of all
  // [Omega_{w_i}]; equals intersectionNumber with the last factor flipped.
  mpz_class intersectionSymmetric(const std::vector<int>& ws);

 private:
  const WeylGroup* W_;
  std::vector<mpq_class> point_;                  // generic evaluation point
  std::vector<mpq_class> rootValue_;              // value of each positive root at point_
  std::vector<std::vector<int>> betaSeq_;         // per element: positive-root index per word position
  std::unordered_map<long long, mpq_class> xiCache_;
  std::map<std::pair<int, int>, RestrictionPoly> polyCache_;
  std::vector<std::vector<char>> bruhat_;         // bruhat_[u][w] = u <= w

  mpq_class xi(int u, int v);
  void ensureBruhat();
};

}  // namespace weylcup
