#include "weylcup/lrprv.hpp"

#include <algorithm>
#include <functional>

#include "weylcup/vecpart.hpp"

namespace weylcup {

namespace {

void requireDominantList(const std::vector<Weight>& mus, const Weight& mu) {
  for (const Weight& m : mus)
    if (!m.dominant()) throw NotDominant("factor " + m.str() + " must be dominant");
  if (!mu.dominant()) throw NotDominant("component " + mu.str() + " must be dominant");
}

// Iterate all tuples (w_1..w_k) of group indices in lexicographic order,
// reporting sum_i w_i^{-1} mu_i; aborts via return value.
template <typename F>
void forEachTuple(const WeylGroup& W, const std::vector<Weight>& mus, size_t cap, F&& visit) {
  size_t k = mus.size();
  double total = 1;
  for (size_t i = 0; i < k; ++i) total *= static_cast<double>(W.size());
  if (total > static_cast<double>(cap))
    throw SearchTooLarge("witness search over |W|^k = " + std::to_string(total) + " tuples");

  std::vector<int> tuple(k, 0);
  std::vector<Weight> partial(k + 1, Weight::zero(W.rootSystem().rank()));
  // Precompute w^{-1} mu_i for every w and i.
  std::vector<std::vector<Weight>> inv(k);
  for (size_t i = 0; i < k; ++i) {
    inv[i].reserve(W.size());
    for (size_t a = 0; a < W.size(); ++a)
      inv[i].push_back(W.element(W.inverseIdx(static_cast<int>(a))).actWeight(mus[i]));
  }
  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == k) return visit(tuple, partial[k]);
    for (size_t a = 0; a < W.size(); ++a) {
      tuple[pos] = static_cast<int>(a);
      partial[pos + 1] = partial[pos] + inv[pos][a];
      if (rec(pos + 1)) return true;
    }
    return false;
  };
  rec(0);
}

// Find w with w^{-1} mu == xi, i.e. mu == w(xi); nullopt if xi is not in the
// orbit of mu.
std::optional<int> elementSendingTo(const WeylGroup& W, const Weight& xi, const Weight& mu) {
  for (size_t a = 0; a < W.size(); ++a)
    if (W.element(static_cast<int>(a)).actWeight(xi) == mu) return static_cast<int>(a);
  return std::nullopt;
}

}  // namespace

std::optional<WitnessTuple> genPRVWitness(const WeylGroup& W, const std::vector<Weight>& mus,
                                          const Weight& mu, size_t searchCap) {
  requireDominantList(mus, mu);
  std::optional<WitnessTuple> found;
  forEachTuple(W, mus, searchCap, [&](const std::vector<int>& tuple, const Weight& xi) {
    if (!(dominantRep(W.rootSystem(), xi) == mu)) return false;
    auto w = elementSendingTo(W, xi, mu);
    if (!w) return false;
    found = WitnessTuple{tuple, *w};
    return true;
  });
  return found;
}

std::optional<WitnessTuple> cohomologicalWitness(const WeylGroup& W,
                                                 const std::vector<Weight>& mus, const Weight& mu,
                                                 size_t searchCap) {
  requireDominantList(mus, mu);
  const RootSystem& rs = W.rootSystem();
  std::optional<WitnessTuple> found;
  forEachTuple(W, mus, searchCap, [&](const std::vector<int>& tuple, const Weight& xi) {
    if (!(dominantRep(rs, xi) == mu)) return false;
    // Partition prune before scanning for w.
    InvSet unionSet;
    for (int t : tuple) {
      const InvSet& phi = W.inversions(t);
      if ((unionSet & phi).any()) return false;
      unionSet |= phi;
    }
    int w = W.elementWithInversions(unionSet);
    if (w < 0) return false;
    // The partition forces Phi_w = union; check the weight identity for this w.
    if (!(W.element(W.inverseIdx(w)).actWeight(mu) == xi)) return false;
    // With the partition in force the plain and dot-action identities must
    // coincide; verify that as an internal consistency check.
    Weight dotSum = Weight::zero(rs.rank());
    for (size_t i = 0; i < tuple.size(); ++i)
      dotSum = dotSum + W.element(W.inverseIdx(tuple[i])).dot(mus[i]);
    if (!(W.element(W.inverseIdx(w)).dot(mu) == dotSum))
      throw Error("internal: dot-action identity failed on a partition witness");
    found = WitnessTuple{tuple, w};
    return true;
  });
  return found;
}

std::map<long long, mpz_class> stableMultProbe(const RootSystem& rs,
                                               const std::vector<Weight>& mus, const Weight& mu,
                                               int mMax, const mpz_class& dimBudget) {
  requireDominantList(mus, mu);
  if (mMax < 1) throw DomainError("mMax must be >= 1");
  std::map<long long, mpz_class> out;
  for (long long m = 1; m <= mMax; ++m) {
    std::vector<Weight> scaled;
    mpz_class dims = 1;
    for (const Weight& f : mus) {
      scaled.push_back(m * f);
      dims *= weylDimension(rs, m * f);
      if (dims > dimBudget)
        throw DimensionOverBudget("probe at m=" + std::to_string(m) + " exceeds dimension budget");
    }
    out[m] = tensorMultiplicity(rs, scaled, m * mu);
  }
  return out;
}

ConeMembership bsMembership(const WeylGroup& W, SchubertCalc& calc,
                            const std::vector<Weight>& mus, const Weight& mu) {
  requireDominantList(mus, mu);
  const RootSystem& rs = W.rootSystem();
  size_t k = mus.size();
  double total = 1;
  for (size_t i = 0; i <= k; ++i) total *= static_cast<double>(W.size());
  if (total > 5e8) throw SearchTooLarge("inequality scan too large");

  ConeMembership res;
  std::vector<std::vector<Weight>> inv(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t a = 0; a < W.size(); ++a)
      inv[i].push_back(W.element(W.inverseIdx(static_cast<int>(a))).actWeight(mus[i]));

  std::vector<int> tuple(k, 0);
  std::function<void(size_t, int, const Weight&)> rec = [&](size_t pos, int lenSum,
                                                            const Weight& acc) {
    if (pos == k) {
      for (size_t w = 0; w < W.size(); ++w) {
        if (W.length(static_cast<int>(w)) != lenSum) continue;
        if (calc.intersectionNumber(tuple, static_cast<int>(w)) == 0) continue;
        Weight gamma = acc - W.element(W.inverseIdx(static_cast<int>(w))).actWeight(mu);
        std::vector<mpq_class> rc = rs.toRootCoords(gamma);
        bool ok = true;
        for (const mpq_class& q : rc)
          if (q < 0) ok = false;
        if (!ok) {
          res.member = false;
          res.failures.push_back({tuple, static_cast<int>(w), rc});
        }
      }
      return;
    }
    for (size_t a = 0; a < W.size(); ++a) {
      tuple[pos] = static_cast<int>(a);
      rec(pos + 1, lenSum + W.length(static_cast<int>(a)), acc + inv[pos][a]);
    }
  };
  rec(0, 0, Weight::zero(rs.rank()));
  return res;
}

FaceDatum ressayreFaceCheck(const WeylGroup& W, SchubertCalc& calc, const std::vector<int>& simpleI,
                            const std::vector<int>& ws, int w) {
  const RootSystem& rs = W.rootSystem();
  FaceDatum fd;
  fd.simpleI = simpleI;
  fd.ws = ws;
  fd.w = w;
  fd.codimension = rs.rank() - static_cast<int>(simpleI.size());

  int lenSum = 0;
  for (int u : ws) lenSum += W.length(u);
  fd.lengthAndIntersection =
      lenSum == W.length(w) && calc.intersectionNumber(ws, w) == 1;

  // Minimal coset representatives avoid the parabolic positive roots.
  InvSet parab;
  for (int k = 0; k < rs.numPositiveRoots(); ++k) {
    const RootVec& r = rs.positiveRoot(k);
    bool inside = true;
    for (int j = 0; j < rs.rank(); ++j) {
      if (r[static_cast<size_t>(j)] == 0) continue;
      bool inI = std::find(simpleI.begin(), simpleI.end(), j + 1) != simpleI.end();
      if (!inI) inside = false;
    }
    if (inside) parab.set(static_cast<size_t>(k));
  }
  fd.minimalInCosets = (W.inversions(w) & parab).none();
  for (int u : ws)
    if ((W.inversions(u) & parab).any()) fd.minimalInCosets = false;

  // sum w_i^{-1}.0 - w^{-1}.0 in the nonnegative integer span of I.
  Weight acc = Weight::zero(rs.rank());
  for (int u : ws) acc = acc + W.element(W.inverseIdx(u)).dot(Weight::zero(rs.rank()));
  acc = acc - W.element(W.inverseIdx(w)).dot(Weight::zero(rs.rank()));
  auto rc = rs.rootCoordsIfIntegral(acc);
  fd.rhoSpanCondition = rc.has_value();
  if (rc) {
    for (int j = 0; j < rs.rank(); ++j) {
      long long cj = (*rc)[static_cast<size_t>(j)];
      bool inI = std::find(simpleI.begin(), simpleI.end(), j + 1) != simpleI.end();
      if (cj < 0 || (cj > 0 && !inI)) fd.rhoSpanCondition = false;
    }
  }
  return fd;
}

mpz_class multiplicityBound(const WeylGroup& W, SchubertCalc& calc, const std::vector<int>& ws,
                            int w, const std::vector<Weight>& mus, const Weight& mu) {
  requireDominantList(mus, mu);
  if (ws.size() != mus.size()) throw DomainError("tuple and weight list sizes differ");
  const RootSystem& rs = W.rootSystem();
  if (calc.intersectionNumber(ws, w) == 0)
    throw ZeroIntersection("bound requires a nonzero intersection number");
  std::vector<InvSet> phis;
  for (int u : ws) phis.push_back(W.inversions(u));
  RootMultiset S = theoremMultiset(rs, phis, W.inversions(w));
  Weight gamma = Weight::zero(rs.rank());
  for (size_t i = 0; i < ws.size(); ++i)
    gamma = gamma + W.element(W.inverseIdx(ws[i])).actWeight(mus[i]);
  gamma = gamma - W.element(W.inverseIdx(w)).actWeight(mu);
  return partitionCount(rs, S, gamma);
}

std::vector<RootVec> stabilizerRoots(const WeylGroup& W, const std::vector<Weight>& mus,
                                     const std::vector<int>& ws) {
  const RootSystem& rs = W.rootSystem();
  if (mus.size() != ws.size()) throw DomainError("tuple and weight list sizes differ");
  Weight sum = Weight::zero(rs.rank());
  std::vector<Weight> twisted;
  for (size_t i = 0; i < ws.size(); ++i) {
    twisted.push_back(W.element(W.inverseIdx(ws[i])).actWeight(mus[i]));
    sum = sum + twisted.back();
  }
  if (!sum.isZero()) throw SumNotZero("stabilizer data requires sum w_i^{-1} mu_i = 0");

  std::vector<RootVec> out;
  for (int k = 0; k < rs.numPositiveRoots(); ++k) {
    const RootVec& r = rs.positiveRoot(k);
    bool allZero = true;
    for (const Weight& t : twisted)
      if (rs.kappaSign(r, t) != 0) allZero = false;
    if (allZero) {
      out.push_back(r);
      RootVec neg = r;
      for (auto& x : neg) x = -x;
      out.push_back(neg);
    }
  }
  return out;
}

std::map<RootVec, int> normalRoots(const WeylGroup& W, const std::vector<Weight>& mus,
                                   const std::vector<int>& ws) {
  const RootSystem& rs = W.rootSystem();
  if (mus.size() != ws.size()) throw DomainError("tuple and weight list sizes differ");
  Weight sum = Weight::zero(rs.rank());
  std::vector<Weight> twisted;
  for (size_t i = 0; i < ws.size(); ++i) {
    twisted.push_back(W.element(W.inverseIdx(ws[i])).actWeight(mus[i]));
    sum = sum + twisted.back();
  }
  if (!sum.isZero()) throw SumNotZero("normal-module data requires sum w_i^{-1} mu_i = 0");

  std::map<RootVec, int> out;
  for (int k = 0; k < rs.numPositiveRoots(); ++k) {
    for (int sign : {+1, -1}) {
      RootVec r = rs.positiveRoot(k);
      if (sign < 0)
        for (auto& x : r) x = -x;
      int neg = 0;
      for (const Weight& t : twisted)
        if (rs.kappaSign(r, t) < 0) ++neg;
      if (neg >= 2) out[r] = neg - 1;
    }
  }
  return out;
}

const char* markerName(ComponentMarker m) {
  switch (m) {
    case ComponentMarker::Plain: return "component";
    case ComponentMarker::Cohomological: return "cohomological";
    case ComponentMarker::PrvMultiple: return "prv-mult-gt-1";
    case ComponentMarker::PrvUnstable: return "prv-not-stable";
    case ComponentMarker::PrvStableSuspect: return "prv-stable-suspect";
  }
  return "?";
}

ComponentReport classifyComponent(const WeylGroup& W, const std::vector<Weight>& mus,
                                  const Weight& mu, const mpz_class& multiplicity, int mMax) {
  const RootSystem& rs = W.rootSystem();
  ComponentReport rep;
  rep.mu = mu;
  rep.multiplicity = multiplicity;
  rep.prvWitness = genPRVWitness(W, mus, mu);
  rep.genPRV = rep.prvWitness.has_value();
  rep.cohWitness = cohomologicalWitness(W, mus, mu);
  rep.cohomological = rep.cohWitness.has_value();
  rep.stableProbe = stableMultProbe(rs, mus, mu, mMax);

  bool allOnes = true;
  for (const auto& [m, v] : rep.stableProbe)
    if (v != 1) allOnes = false;
  if (rep.cohomological)
    rep.marker = ComponentMarker::Cohomological;
  else if (!rep.genPRV)
    rep.marker = ComponentMarker::Plain;
  else if (multiplicity > 1)
    rep.marker = ComponentMarker::PrvMultiple;
  else if (!allOnes)
    rep.marker = ComponentMarker::PrvUnstable;
  else
    rep.marker = ComponentMarker::PrvStableSuspect;
  return rep;
}

std::vector<ComponentReport> multiplicityTable(const WeylGroup& W, const Weight& mu1,
                                               const Weight& mu2, int mMax) {
  const RootSystem& rs = W.rootSystem();
  if (rs.rank() != 2) throw DomainError("component tables are planar: rank-2 systems only");
  Decomposition dec = tensorDecompose(rs, mu1, mu2);
  std::vector<ComponentReport> out;
  for (const auto& [mu, mult] : dec)
    out.push_back(classifyComponent(W, {mu1, mu2}, mu, mult, mMax));
  return out;
}

}  // namespace weylcup
