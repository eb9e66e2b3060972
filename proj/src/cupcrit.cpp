#include "weylcup/cupcrit.hpp"

#include <algorithm>
#include <functional>

namespace weylcup {

bool isPartition(const std::vector<InvSet>& wList, const InvSet& w) {
  InvSet seen;
  for (const InvSet& phi : wList) {
    if ((seen & phi).any()) return false;  // overlap
    seen |= phi;
  }
  return seen == w;
}

bool isPartition(const RootSystem& rs, const std::vector<WeylElement>& wList,
                 const WeylElement& w) {
  std::vector<InvSet> phis;
  for (const WeylElement& e : wList) phis.push_back(e.inversionSet(rs));
  return isPartition(phis, w.inversionSet(rs));
}

const char* verdictName(CupVerdict v) {
  switch (v) {
    case CupVerdict::Surjective: return "surjective";
    case CupVerdict::Zero: return "zero";
    case CupVerdict::BothSidesNotNonzero: return "both-sides-not-nonzero";
  }
  return "?";
}

Verdict surjectivityVerdict(const RootSystem& rs, const WeylGroup& W, SchubertCalc& calc,
                            const CupProblem& problem) {
  for (const BwbAnswer& f : problem.factors)
    if (f.vanishing) throw SingularWeight("ill-posed problem: a factor weight is singular");
  if (problem.target.vanishing)
    throw SingularWeight("ill-posed problem: the sum weight is singular");

  Verdict v;
  int degreeSum = 0;
  std::vector<int> ws;
  for (const BwbAnswer& f : problem.factors) {
    v.factorInversions.push_back(f.w.inversionSet(rs));
    degreeSum += f.degree;
    int idx = W.indexOf(f.w);
    if (idx < 0) throw Error("internal: factor element missing from enumerated group");
    ws.push_back(idx);
  }
  v.targetInversions = problem.target.w.inversionSet(rs);
  int widx = W.indexOf(problem.target.w);
  v.partition = isPartition(v.factorInversions, v.targetInversions);
  v.intersection = calc.intersectionNumber(ws, widx);

  if (degreeSum != problem.target.degree) {
    // The product lands in a degree where the target cohomology vanishes.
    v.kind = CupVerdict::BothSidesNotNonzero;
  } else {
    v.kind = v.partition ? CupVerdict::Surjective : CupVerdict::Zero;
  }
  return v;
}

std::vector<std::vector<int>> enumeratePartitionTuples(const WeylGroup& W, int k,
                                                       std::optional<int> w) {
  int target = w.value_or(W.longestIdx());
  InvSet goal = W.inversions(target);

  // Elements usable at all: inversion set inside the goal.
  std::vector<int> usable;
  for (size_t i = 0; i < W.size(); ++i)
    if ((W.inversions(static_cast<int>(i)) & ~goal).none()) usable.push_back(static_cast<int>(i));

  std::vector<std::vector<int>> out;
  std::vector<int> tuple(static_cast<size_t>(k));
  std::function<void(int, InvSet)> rec = [&](int pos, InvSet remaining) {
    if (pos == k) {
      if (remaining.none()) out.push_back(tuple);
      return;
    }
    // Cardinality prune: remaining inversions must be coverable by k-pos
    // elements of length <= |remaining|, and amount to at least 0 each.
    for (int cand : usable) {
      const InvSet& phi = W.inversions(cand);
      if ((phi & ~remaining).any()) continue;
      if (pos == k - 1 && phi != remaining) continue;
      tuple[static_cast<size_t>(pos)] = cand;
      rec(pos + 1, remaining & ~phi);
    }
  };
  rec(0, goal);
  return out;
}

int subsetWitness(const WeylGroup& W, const std::vector<int>& tuple,
                  const std::vector<int>& subset) {
  InvSet all;
  for (int t : tuple) {
    const InvSet& phi = W.inversions(t);
    if ((all & phi).any()) throw DomainError("tuple does not partition the positive roots");
    all |= phi;
  }
  if (all != W.inversions(W.longestIdx()))
    throw DomainError("tuple does not partition the positive roots");
  InvSet want;
  for (int i : subset) {
    if (i < 0 || i >= static_cast<int>(tuple.size())) throw BadIndex("subset index out of range");
    want |= W.inversions(tuple[static_cast<size_t>(i)]);
  }
  int idx = W.elementWithInversions(want);
  if (idx < 0)
    throw NoWitness("no element realizes the union of inversion sets (subset property fails)");
  return idx;
}

bool factorizationLengthCheck(const WeylGroup& W, int w1, int w2, int w) {
  const RootSystem& rs = W.rootSystem();
  int n = rs.rank();
  // Precompute which positive roots lie in the parabolic span of each subset I.
  for (int mask = 0; mask < (1 << n); ++mask) {
    InvSet parab;
    for (int k = 0; k < rs.numPositiveRoots(); ++k) {
      const RootVec& r = rs.positiveRoot(k);
      bool inside = true;
      for (int j = 0; j < n; ++j)
        if (r[static_cast<size_t>(j)] != 0 && !(mask & (1 << j))) inside = false;
      if (inside) parab.set(static_cast<size_t>(k));
    }
    // Minimal coset representative drops exactly the inversions inside the
    // parabolic: l(x^P) = |Phi_x \ Delta_P|.
    auto minLen = [&](int x) {
      return static_cast<int>((W.inversions(x) & ~parab).count());
    };
    if (minLen(w1) + minLen(w2) != minLen(w)) return false;
  }
  return true;
}

}  // namespace weylcup
