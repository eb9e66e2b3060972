#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylcup/weight.hpp"

namespace weylcup {

enum class SimpleType { A, B, C, D, G };

char typeChar(SimpleType t);

// A root in integer simple-root coordinates.
using RootVec = std::vector<long long>;

struct RootVecHash {
  size_t operator()(const RootVec& v) const {
    size_t h = 0x84222325cbf29ce4ull;
    for (long long x : v) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Exact root-system data for one simple type and rank (A, B, C, D, G2).
// Roots live in integer simple-root coordinates, weights in integer
// fundamental-weight coordinates; the two are connected by the Cartan matrix.
// Immutable after construction.
class RootSystem {
 public:
  static RootSystem build(SimpleType t, int rank);
  static RootSystem parse(const std::string& label);  // "A2", "B3", ...

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  // cartan()[i][j] = <alpha_j, alpha_i^vee>
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }

  int numPositiveRoots() const { return static_cast<int>(positive_.size()); }
  const std::vector<RootVec>& positiveRoots() const { return positive_; }
  const RootVec& positiveRoot(int idx) const { return positive_.at(static_cast<size_t>(idx)); }

  // Index of a positive root, -1 if not a positive root of the system.
  int rootIndex(const RootVec& r) const;
  bool isRoot(const RootVec& r) const;  // positive or negative

  long long heightOfRoot(int idx) const { return heights_[static_cast<size_t>(idx)]; }

  Weight rho() const { return Weight(std::vector<long long>(rank_, 1)); }

  // <lambda, beta^vee>, exact integer.  Throws RootNotInSystem if beta is not
  // a root (negative roots are accepted).
  long long pairCoroot(const Weight& lambda, const RootVec& beta) const;
  long long pairCorootIdx(const Weight& lambda, int posRootIdx) const;

  // W-invariant symmetric form kappa, normalized so long roots have squared
  // length 2.  kappaRootWeight is kappa(beta, lambda) for a root beta; only
  // its sign ever matters and that is scale-free.
  mpq_class kappaRootWeight(const RootVec& beta, const Weight& lambda) const;
  int kappaSign(const RootVec& beta, const Weight& lambda) const;
  mpq_class pairingForm(const Weight& a, const Weight& b) const;

  // A root, re-expressed in fundamental coordinates (C * c).
  Weight rootAsWeight(const RootVec& r) const;

  // Basis conversion, exact rational arithmetic.
  std::vector<mpq_class> toRootCoords(const Weight& w) const;
  std::vector<mpq_class> fromRootCoords(const std::vector<mpq_class>& rc) const;  // fundamental coords
  // Root coords of w when they are integral, otherwise nullopt.
  std::optional<std::vector<long long>> rootCoordsIfIntegral(const Weight& w) const;

  bool isRegular(const Weight& lambda) const;  // <lambda+rho, beta^vee> != 0 for all beta>0

  // Order of the Weyl group (exact).
  mpz_class weylOrder() const;

  // d_i = half squared length of alpha_i in the minimal integer scaling.
  const std::vector<long long>& symmetrizer() const { return dsym_; }

 private:
  SimpleType type_;
  int rank_;
  std::vector<std::vector<long long>> cartan_;
  std::vector<long long> dsym_;
  std::vector<RootVec> positive_;
  std::vector<std::vector<long long>> corootCoords_;  // per positive root
  std::vector<long long> heights_;
  std::unordered_map<RootVec, int, RootVecHash> index_;
  std::vector<std::vector<mpq_class>> cartanInv_;

  // (beta, beta)/2 in the integer d-scaling.
  long long halfNormInt(const RootVec& r) const;
  long long dmax_ = 1;
};

}  // namespace weylcup
