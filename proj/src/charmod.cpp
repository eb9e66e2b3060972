#include "weylcup/charmod.hpp"

#include <algorithm>
#include <set>

namespace weylcup {

namespace {

void requireDominant(const Weight& mu, const char* what) {
  if (!mu.dominant()) throw NotDominant(std::string(what) + " must be dominant, got " + mu.str());
}

// (a, beta) in the integer d-scaling, beta in root coordinates.
long long ipWeightRoot(const RootSystem& rs, const Weight& a, const std::vector<long long>& beta) {
  long long s = 0;
  const auto& d = rs.symmetrizer();
  for (int j = 0; j < rs.rank(); ++j)
    s += beta[static_cast<size_t>(j)] * d[static_cast<size_t>(j)] * a[j];
  return s;
}

}  // namespace

Weight dominantRep(const RootSystem& rs, const Weight& nu) {
  Weight x = nu;
  const auto& C = rs.cartan();
  int n = rs.rank();
  while (true) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (x[i] < 0) {
        pick = i;
        break;
      }
    if (pick < 0) return x;
    long long xi = x[pick];
    for (int j = 0; j < n; ++j)
      x[j] -= xi * C[static_cast<size_t>(j)][static_cast<size_t>(pick)];
  }
}

ChamberSort sortToChamber(const RootSystem& rs, const Weight& lambda) {
  ChamberSort out;
  out.sorted = lambda;
  const auto& C = rs.cartan();
  int n = rs.rank();
  while (true) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (out.sorted[i] < 0) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    long long xi = out.sorted[pick];
    for (int j = 0; j < n; ++j)
      out.sorted[j] -= xi * C[static_cast<size_t>(j)][static_cast<size_t>(pick)];
    out.sign = -out.sign;
  }
  for (int i = 0; i < n; ++i)
    if (out.sorted[i] == 0) out.singular = true;
  return out;
}

std::vector<Weight> weylOrbit(const RootSystem& rs, const Weight& nu) {
  std::set<Weight> seen;
  std::vector<Weight> queue{dominantRep(rs, nu)};
  seen.insert(queue[0]);
  const auto& C = rs.cartan();
  int n = rs.rank();
  for (size_t q = 0; q < queue.size(); ++q) {
    Weight cur = queue[q];
    for (int i = 0; i < n; ++i) {
      Weight next = cur;
      long long xi = cur[i];
      if (xi == 0) continue;
      for (int j = 0; j < n; ++j)
        next[j] -= xi * C[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return queue;
}

mpz_class weylDimension(const RootSystem& rs, const Weight& mu) {
  requireDominant(mu, "weight");
  Weight top = mu + rs.rho();
  mpz_class num = 1, den = 1;
  for (int k = 0; k < rs.numPositiveRoots(); ++k) {
    num *= static_cast<long>(rs.pairCorootIdx(top, k));
    den *= static_cast<long>(rs.pairCorootIdx(rs.rho(), k));
  }
  mpz_class dim;
  mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return dim;
}

CharacterTable character(const RootSystem& rs, const Weight& mu) {
  requireDominant(mu, "highest weight");
  int n = rs.rank();

  // Candidate dominant weights nu = mu - sum c_i alpha_i; the root
  // coordinates of mu bound each c_i since dominant weights have nonnegative
  // root coordinates.
  std::vector<mpq_class> muRoot = rs.toRootCoords(mu);
  std::vector<long long> box(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), muRoot[static_cast<size_t>(i)].get_num().get_mpz_t(),
               muRoot[static_cast<size_t>(i)].get_den().get_mpz_t());
    box[static_cast<size_t>(i)] = fl.get_si();
  }

  struct Entry {
    Weight nu;
    std::vector<long long> depth;  // root coords of mu - nu
    long long ht;
  };
  std::vector<Entry> entries;
  std::vector<long long> c(static_cast<size_t>(n), 0);
  while (true) {
    Weight nu = mu;
    for (int i = 0; i < n; ++i) {
      long long ci = c[static_cast<size_t>(i)];
      if (ci == 0) continue;
      Weight ai = rs.rootAsWeight([&] {
        RootVec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        return e;
      }());
      for (int j = 0; j < n; ++j) nu[j] -= ci * ai[j];
    }
    if (nu.dominant()) {
      long long ht = 0;
      for (long long x : c) ht += x;
      entries.push_back({nu, c, ht});
    }
    // advance odometer
    int pos = 0;
    while (pos < n) {
      if (++c[static_cast<size_t>(pos)] <= box[static_cast<size_t>(pos)]) break;
      c[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.ht != b.ht) return a.ht < b.ht;
    return a.nu < b.nu;
  });

  CharacterTable table;
  table.highestWeight = mu;
  Weight rho = rs.rho();
  for (const Entry& ent : entries) {
    if (ent.ht == 0) {
      table.dominantMult[ent.nu] = 1;
      continue;
    }
    // Freudenthal: ((mu+rho,mu+rho)-(nu+rho,nu+rho)) m(nu)
    //              = 2 sum_{alpha>0} sum_{t>=1} (nu+t*alpha, alpha) m(nu+t*alpha)
    mpz_class rhs = 0;
    for (int k = 0; k < rs.numPositiveRoots(); ++k) {
      const RootVec& alpha = rs.positiveRoot(k);
      Weight alphaW = rs.rootAsWeight(alpha);
      Weight cur = ent.nu;
      for (long long t = 1;; ++t) {
        cur = cur + alphaW;
        Weight rep = dominantRep(rs, cur);
        auto it = table.dominantMult.find(rep);
        if (it == table.dominantMult.end()) break;  // root strings are unbroken
        rhs += static_cast<long>(ipWeightRoot(rs, cur, alpha)) * it->second;
      }
    }
    rhs *= 2;
    long long den = ipWeightRoot(rs, mu + ent.nu + rho + rho, ent.depth);
    if (den <= 0 || mpz_divisible_ui_p(rhs.get_mpz_t(), static_cast<unsigned long>(den)) == 0)
      throw Error("internal: Freudenthal division failed");
    mpz_class m;
    mpz_divexact_ui(m.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(den));
    if (m > 0) table.dominantMult[ent.nu] = m;
  }

  table.dimension = 0;
  for (const auto& [nu, m] : table.dominantMult)
    table.dimension += m * static_cast<long>(weylOrbit(rs, nu).size());
  mpz_class expect = weylDimension(rs, mu);
  if (table.dimension != expect)
    throw Error("internal: character dimension mismatch for " + mu.str());
  return table;
}

mpz_class weightMultiplicity(const RootSystem& rs, const CharacterTable& table, const Weight& nu) {
  auto it = table.dominantMult.find(dominantRep(rs, nu));
  return it == table.dominantMult.end() ? mpz_class(0) : it->second;
}

std::map<Weight, mpz_class> fullWeightMultiset(const RootSystem& rs, const CharacterTable& table) {
  std::map<Weight, mpz_class> out;
  for (const auto& [nu, m] : table.dominantMult)
    for (const Weight& o : weylOrbit(rs, nu)) out[o] = m;
  return out;
}

Decomposition tensorDecompose(const RootSystem& rs, const Weight& mu1, const Weight& mu2) {
  requireDominant(mu1, "tensor factor");
  requireDominant(mu2, "tensor factor");
  // Sum over the weights of the smaller factor.
  const Weight* big = &mu1;
  const Weight* small = &mu2;
  if (weylDimension(rs, mu1) < weylDimension(rs, mu2)) std::swap(big, small);

  CharacterTable ct = character(rs, *small);
  Weight rho = rs.rho();
  Decomposition dec;
  for (const auto& [nuDom, m] : ct.dominantMult) {
    for (const Weight& nu : weylOrbit(rs, nuDom)) {
      ChamberSort s = sortToChamber(rs, *big + nu + rho);
      if (s.singular) continue;
      Weight comp = s.sorted - rho;
      auto it = dec.find(comp);
      if (it == dec.end())
        dec.emplace(comp, s.sign * m);
      else {
        it->second += s.sign * m;
        if (it->second == 0) dec.erase(it);
      }
    }
  }
  for (const auto& [comp, m] : dec)
    if (m < 0) throw Error("internal: negative multiplicity in tensor decomposition");
  return dec;
}

Decomposition tensorDecomposeList(const RootSystem& rs, const std::vector<Weight>& mus) {
  if (mus.empty()) {
    Decomposition d;
    d[Weight::zero(rs.rank())] = 1;
    return d;
  }
  Decomposition acc;
  acc[mus[0]] = 1;
  if (!mus[0].dominant()) throw NotDominant("tensor factor must be dominant");
  for (size_t i = 1; i < mus.size(); ++i) {
    Decomposition next;
    for (const auto& [comp, mult] : acc) {
      Decomposition part = tensorDecompose(rs, comp, mus[i]);
      for (const auto& [c2, m2] : part) next[c2] += mult * m2;
    }
    acc = std::move(next);
  }
  return acc;
}

mpz_class tensorMultiplicity(const RootSystem& rs, const std::vector<Weight>& mus, const Weight& mu) {
  requireDominant(mu, "component");
  Decomposition dec = tensorDecomposeList(rs, mus);
  auto it = dec.find(mu);
  return it == dec.end() ? mpz_class(0) : it->second;
}

Weight dualWeight(const RootSystem& rs, const Weight& mu) { return dominantRep(rs, -mu); }

mpz_class multiInvariantDim(const RootSystem& rs, const std::vector<Weight>& mus) {
  if (mus.empty()) throw DomainError("multiInvariantDim needs at least one factor");
  for (const Weight& mu : mus) requireDominant(mu, "factor");
  if (mus.size() == 1) return mus[0].isZero() ? 1 : 0;
  std::vector<Weight> head(mus.begin(), mus.end() - 1);
  Decomposition dec = tensorDecomposeList(rs, head);
  // Invariants pair the head against the dual of the last factor.
  Weight target = dualWeight(rs, mus.back());
  auto it = dec.find(target);
  return it == dec.end() ? mpz_class(0) : it->second;
}

mpz_class steinbergMultiplicity(const RootSystem& rs, const WeylGroup& W, const Weight& mu,
                                const Weight& mu1, const Weight& mu2) {
  requireDominant(mu, "component");
  requireDominant(mu1, "factor");
  requireDominant(mu2, "factor");
  Weight rho = rs.rho();
  Weight base = mu + rho + rho;
  mpz_class total = 0;
  for (size_t a = 0; a < W.size(); ++a) {
    Weight ua = W.element(static_cast<int>(a)).actWeight(mu1 + rho);
    int signA = (W.length(static_cast<int>(a)) % 2) ? -1 : 1;
    for (size_t b = 0; b < W.size(); ++b) {
      Weight vb = W.element(static_cast<int>(b)).actWeight(mu2 + rho);
      Weight gamma = ua + vb - base;
      int sign = signA * ((W.length(static_cast<int>(b)) % 2) ? -1 : 1);
      mpz_class p = kostantPartition(rs, gamma);
      if (p != 0) total += sign * p;
    }
  }
  return total;
}

mpz_class kostantWeightMultiplicity(const RootSystem& rs, const WeylGroup& W, const Weight& mu,
                                    const Weight& nu) {
  requireDominant(mu, "highest weight");
  Weight rho = rs.rho();
  mpz_class total = 0;
  for (size_t a = 0; a < W.size(); ++a) {
    Weight x = W.element(static_cast<int>(a)).actWeight(mu + rho) - (nu + rho);
    int sign = (W.length(static_cast<int>(a)) % 2) ? -1 : 1;
    mpz_class p = kostantPartition(rs, x);
    if (p != 0) total += sign * p;
  }
  return total;
}

}  // namespace weylcup
