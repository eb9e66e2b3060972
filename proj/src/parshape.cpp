#include "weylcup/parshape.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace weylcup {

ClassicalType parseClassicalType(const std::string& label) {
  std::string s;
  for (char ch : label) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "gl" || s == "a") return ClassicalType::GL;
  if (s == "b") return ClassicalType::B;
  if (s == "c") return ClassicalType::C;
  if (s == "d") return ClassicalType::D;
  throw ParseError("unknown classical type '" + label + "'");
}

std::string classicalName(ClassicalType t) {
  switch (t) {
    case ClassicalType::GL: return "gl";
    case ClassicalType::B: return "B";
    case ClassicalType::C: return "C";
    case ClassicalType::D: return "D";
  }
  return "?";
}

const char* shapeName(ModuleShape s) {
  switch (s) {
    case ModuleShape::VVdual: return "V(x)V*";
    case ModuleShape::VV: return "V(x)V";
    case ModuleShape::V: return "V";
    case ModuleShape::VV0: return "V(x)V0";
    case ModuleShape::Wedge2: return "Wedge2V";
    case ModuleShape::Sym2: return "Sym2V";
  }
  return "?";
}

void ParabolicDatum::validate() const {
  if (n < 1) throw InvalidDatum("rank must be positive");
  if (algebra == ClassicalType::GL && typeII) throw InvalidDatum("gl data have no Type II");
  if (algebra == ClassicalType::D && n < 2) throw InvalidDatum("type D needs n >= 2");
  if (typeII) {
    if (i0.empty()) throw InvalidDatum("Type II requires a nonempty largest part");
    if (algebra == ClassicalType::D && i0.size() < 2)
      throw InvalidDatum("Type II in type D requires |I0| >= 2");
  } else if (!i0.empty()) {
    throw InvalidDatum("Type I carries no distinguished part");
  }
  std::vector<int> seen(static_cast<size_t>(n), 0);
  auto mark = [&](const std::vector<int>& part) {
    if (part.empty()) throw InvalidDatum("empty part");
    for (int a : part) {
      if (a < 0 || a >= n) throw InvalidDatum("part index out of range");
      if (seen[static_cast<size_t>(a)]++) throw InvalidDatum("parts are not disjoint");
    }
  };
  for (const auto& part : parts) mark(part);
  if (typeII) mark(i0);
  for (int a = 0; a < n; ++a)
    if (!seen[static_cast<size_t>(a)]) throw InvalidDatum("parts do not cover {1..n}");
  if (sigma.size() != static_cast<size_t>(n)) throw InvalidDatum("sigma must assign every index");
  for (int a = 0; a < n; ++a)
    if (sigma[static_cast<size_t>(a)] != 1 && sigma[static_cast<size_t>(a)] != -1)
      throw InvalidDatum("sigma entries must be +-1");
  for (int a : i0)
    if (sigma[static_cast<size_t>(a)] != 1) throw InvalidDatum("sigma is +1 on the largest part");
}

std::string ParabolicDatum::str() const {
  std::ostringstream os;
  os << classicalName(algebra) << n << (typeII ? " II " : " I ");
  auto dump = [&](const std::vector<int>& part) {
    for (size_t i = 0; i < part.size(); ++i) {
      if (i) os << ',';
      os << part[i] + 1;
    }
  };
  if (typeII) {
    os << '(';
    dump(i0);
    os << ')';
  }
  for (const auto& part : parts) {
    os << '|';
    dump(part);
  }
  os << " s=";
  for (int a = 0; a < n; ++a) os << (sigma[static_cast<size_t>(a)] > 0 ? '+' : '-');
  return os.str();
}

std::vector<std::vector<int>> ambientRoots(ClassicalType t, int n) {
  std::vector<std::vector<int>> out;
  auto vec = [n](int a, int ca, int b = -1, int cb = 0) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(a)] = ca;
    if (b >= 0) v[static_cast<size_t>(b)] = cb;
    return v;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (t == ClassicalType::GL) {
        out.push_back(vec(a, 1, b, -1));
      } else if (a < b) {
        out.push_back(vec(a, 1, b, 1));
        out.push_back(vec(a, 1, b, -1));
        out.push_back(vec(a, -1, b, 1));
        out.push_back(vec(a, -1, b, -1));
      }
    }
  if (t == ClassicalType::B)
    for (int a = 0; a < n; ++a) {
      out.push_back(vec(a, 1));
      out.push_back(vec(a, -1));
    }
  if (t == ClassicalType::C)
    for (int a = 0; a < n; ++a) {
      out.push_back(vec(a, 2));
      out.push_back(vec(a, -2));
    }
  return out;
}

DeltaVec deltaRestriction(const ParabolicDatum& d, const std::vector<int>& epsRoot) {
  DeltaVec v(static_cast<size_t>(d.k()), 0);
  for (int i = 0; i < d.k(); ++i)
    for (int a : d.parts[static_cast<size_t>(i)])
      v[static_cast<size_t>(i)] += epsRoot[static_cast<size_t>(a)] * d.sigma[static_cast<size_t>(a)];
  return v;
}

int ARootSet::indexOf(const DeltaVec& v) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

namespace {

bool isZeroVec(const DeltaVec& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

// Pattern of a delta vector: indices and coefficients of its nonzero entries.
struct DeltaPattern {
  int count = 0;
  int i = -1, ci = 0;
  int j = -1, cj = 0;
};

DeltaPattern patternOf(const DeltaVec& v) {
  DeltaPattern p;
  for (size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    if (p.count == 0) {
      p.i = static_cast<int>(t);
      p.ci = v[t];
    } else if (p.count == 1) {
      p.j = static_cast<int>(t);
      p.cj = v[t];
    }
    ++p.count;
  }
  return p;
}

ModuleShape shapeFor(const ParabolicDatum& d, const DeltaPattern& p) {
  if (p.count == 2) return d.algebra == ClassicalType::GL ? ModuleShape::VVdual : ModuleShape::VV;
  if (std::abs(p.ci) == 1) return d.typeII ? ModuleShape::VV0 : ModuleShape::V;
  return d.algebra == ClassicalType::C ? ModuleShape::Sym2 : ModuleShape::Wedge2;
}

}  // namespace

ARootSet aRoots(const ParabolicDatum& d) {
  d.validate();
  ARootSet R;
  R.k = d.k();

  std::set<DeltaVec> found;
  for (const auto& root : ambientRoots(d.algebra, d.n)) {
    DeltaVec v = deltaRestriction(d, root);
    if (!isZeroVec(v)) found.insert(v);
  }

  // Closed-form tables per type, as an internal cross-check.
  std::set<DeltaVec> expected;
  auto unit = [&](int i, int c) {
    DeltaVec v(static_cast<size_t>(R.k), 0);
    v[static_cast<size_t>(i)] = c;
    return v;
  };
  auto pairVec = [&](int i, int ci, int j, int cj) {
    DeltaVec v(static_cast<size_t>(R.k), 0);
    v[static_cast<size_t>(i)] = ci;
    v[static_cast<size_t>(j)] = cj;
    return v;
  };
  for (int i = 0; i < R.k; ++i)
    for (int j = 0; j < R.k; ++j) {
      if (i == j) continue;
      if (d.algebra == ClassicalType::GL) {
        expected.insert(pairVec(i, 1, j, -1));
      } else if (i < j) {
        for (int si : {1, -1})
          for (int sj : {1, -1}) expected.insert(pairVec(i, si, j, sj));
      }
    }
  for (int i = 0; i < R.k && d.algebra != ClassicalType::GL; ++i) {
    size_t sz = d.parts[static_cast<size_t>(i)].size();
    bool shortRoot = d.algebra == ClassicalType::B || (d.typeII && !d.i0.empty());
    if (d.algebra == ClassicalType::D && !d.typeII) shortRoot = false;
    if (d.algebra == ClassicalType::C && !d.typeII) shortRoot = false;
    if (shortRoot) {
      expected.insert(unit(i, 1));
      expected.insert(unit(i, -1));
    }
    bool doubled = d.algebra == ClassicalType::C ? true : sz > 1;
    if (doubled) {
      expected.insert(unit(i, 2));
      expected.insert(unit(i, -2));
    }
  }
  if (found != expected) throw Error("internal: a-root table mismatch for " + d.str());

  for (const DeltaVec& v : found) {
    R.roots.push_back(v);
    R.shapes.push_back(shapeFor(d, patternOf(v)));
  }
  return R;
}

bool isSaturated(const ARootSet& R, const std::vector<DeltaVec>& S) {
  for (const DeltaVec& v : S) {
    if (R.indexOf(v) < 0) return false;
    // Positive rational multiples inside R are halves and doubles only.
    DeltaVec twice = v, half = v;
    bool halfOk = true;
    for (size_t t = 0; t < v.size(); ++t) {
      twice[t] = 2 * v[t];
      if (v[t] % 2 != 0) halfOk = false;
      else half[t] = v[t] / 2;
    }
    auto inS = [&S](const DeltaVec& x) {
      return std::find(S.begin(), S.end(), x) != S.end();
    };
    if (R.contains(twice) && !inS(twice)) return false;
    if (halfOk && R.contains(half) && !inS(half)) return false;
  }
  return true;
}

std::vector<DeltaVec> saturate(const ARootSet& R, std::vector<DeltaVec> S) {
  for (const DeltaVec& v : S)
    if (R.indexOf(v) < 0) throw DomainError("set element " + deltaString(v) + " is not an a-root");
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<DeltaVec> cur = S;
    for (const DeltaVec& v : cur) {
      DeltaVec twice = v, half = v;
      bool halfOk = true;
      for (size_t t = 0; t < v.size(); ++t) {
        twice[t] = 2 * v[t];
        if (v[t] % 2 != 0) halfOk = false;
        else half[t] = v[t] / 2;
      }
      auto inS = [&S](const DeltaVec& x) {
        return std::find(S.begin(), S.end(), x) != S.end();
      };
      if (R.contains(twice) && !inS(twice)) {
        S.push_back(twice);
        grew = true;
      }
      if (halfOk && R.contains(half) && !inS(half)) {
        S.push_back(half);
        grew = true;
      }
    }
  }
  std::sort(S.begin(), S.end());
  return S;
}

std::string OrderGraph::nodeName(int node) const {
  std::ostringstream os;
  if (!signedNodes) {
    os << 'd' << (node + 1);
  } else {
    os << ((node & 1) ? "-d" : "d") << (node / 2 + 1);
  }
  return os.str();
}

OrderGraph orderGraph(const ParabolicDatum& d, const ARootSet& R, const std::vector<DeltaVec>& S) {
  if (!isSaturated(R, S)) throw NotSaturated("order graph requires a saturated set");
  OrderGraph g;
  g.signedNodes = d.algebra != ClassicalType::GL;
  g.k = d.k();
  g.adj.assign(static_cast<size_t>(g.nodeCount()), {});
  auto addEdge = [&g](int u, int v) {
    auto& lst = g.adj[static_cast<size_t>(u)];
    if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
  };
  for (const DeltaVec& v : S) {
    DeltaPattern p = patternOf(v);
    if (!g.signedNodes) {
      // delta_i - delta_j orders i before j
      int from = p.ci > 0 ? p.i : p.j;
      int to = p.ci > 0 ? p.j : p.i;
      addEdge(from, to);
    } else if (p.count == 2) {
      int a = 2 * p.i + (p.ci > 0 ? 0 : 1);
      int b = 2 * p.j + (p.cj > 0 ? 0 : 1);
      addEdge(a, OrderGraph::negate(b));
      addEdge(b, OrderGraph::negate(a));
    } else {
      int a = 2 * p.i + (p.ci > 0 ? 0 : 1);
      addEdge(a, OrderGraph::negate(a));
    }
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

std::optional<std::vector<int>> extendToLinearOrder(const OrderGraph& g) {
  int m = g.nodeCount();
  std::vector<char> removed(static_cast<size_t>(m), 0);
  auto hasIncoming = [&](int x) {
    for (int u = 0; u < m; ++u) {
      if (removed[static_cast<size_t>(u)]) continue;
      const auto& lst = g.adj[static_cast<size_t>(u)];
      if (std::find(lst.begin(), lst.end(), x) != lst.end()) return true;
    }
    return false;
  };
  std::vector<int> order;
  if (!g.signedNodes) {
    for (int step = 0; step < m; ++step) {
      int pick = -1;
      for (int x = 0; x < m && pick < 0; ++x)
        if (!removed[static_cast<size_t>(x)] && !hasIncoming(x)) pick = x;
      if (pick < 0) return std::nullopt;
      order.push_back(pick);
      removed[static_cast<size_t>(pick)] = 1;
    }
    return order;
  }
  // Peel source/sink pairs: a source goes to the front, its negation mirrors
  // to the back; mirror symmetry of the edge set keeps this consistent.
  std::vector<int> front;
  for (int step = 0; step < g.k; ++step) {
    int pick = -1;
    for (int x = 0; x < m && pick < 0; ++x)
      if (!removed[static_cast<size_t>(x)] && !hasIncoming(x)) pick = x;
    if (pick < 0) return std::nullopt;
    front.push_back(pick);
    removed[static_cast<size_t>(pick)] = 1;
    removed[static_cast<size_t>(OrderGraph::negate(pick))] = 1;
  }
  order = front;
  for (int i = g.k - 1; i >= 0; --i) order.push_back(OrderGraph::negate(front[static_cast<size_t>(i)]));
  return order;
}

std::optional<std::vector<int>> findCycle(const OrderGraph& g) {
  int m = g.nodeCount();
  std::optional<std::vector<int>> best;
  for (int s = 0; s < m; ++s) {
    // BFS shortest path back to s.
    std::vector<int> dist(static_cast<size_t>(m), -1), par(static_cast<size_t>(m), -1);
    std::deque<int> q{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.adj[static_cast<size_t>(u)]) {
        if (dist[static_cast<size_t>(v)] >= 0) continue;
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        par[static_cast<size_t>(v)] = u;
        q.push_back(v);
      }
    }
    int bestU = -1;
    for (int u = 0; u < m; ++u) {
      if (dist[static_cast<size_t>(u)] < 0) continue;
      const auto& lst = g.adj[static_cast<size_t>(u)];
      if (std::find(lst.begin(), lst.end(), s) == lst.end()) continue;
      if (bestU < 0 || dist[static_cast<size_t>(u)] < dist[static_cast<size_t>(bestU)]) bestU = u;
    }
    if (bestU < 0) continue;
    std::vector<int> cycle;
    for (int x = bestU; x != -1; x = par[static_cast<size_t>(x)]) cycle.push_back(x);
    std::reverse(cycle.begin(), cycle.end());  // starts at s, ends at bestU
    if (!best || cycle.size() < best->size()) best = cycle;
  }
  return best;
}

namespace {

// Position of each epsilon index in the ordered partition Q (largest part of
// a Type II datum sits last), plus the twisted signs.
struct QContext {
  std::vector<int> pos;    // per index; k for members of I0
  std::vector<int> tau;    // per index
  std::vector<char> inI0;  // per index
  int k = 0;
};

QContext buildQContext(const ParabolicDatum& d, const std::vector<int>& order) {
  int k = d.k();
  int m = d.algebra == ClassicalType::GL ? k : 2 * k;
  if (static_cast<int>(order.size()) != m) throw OrderIncompatible("order has wrong size");
  std::vector<char> seen(static_cast<size_t>(m), 0);
  for (int x : order) {
    if (x < 0 || x >= m || seen[static_cast<size_t>(x)]) throw OrderIncompatible("not a permutation of the nodes");
    seen[static_cast<size_t>(x)] = 1;
  }
  if (d.algebra != ClassicalType::GL) {
    for (int i = 0; i < m; ++i)
      if (order[static_cast<size_t>(i)] != OrderGraph::negate(order[static_cast<size_t>(m - 1 - i)]))
        throw OrderIncompatible("order is not compatible with negation");
  }

  QContext ctx;
  ctx.k = k;
  ctx.pos.assign(static_cast<size_t>(d.n), k);
  ctx.tau.assign(static_cast<size_t>(d.n), 1);
  ctx.inI0.assign(static_cast<size_t>(d.n), 0);
  for (int a : d.i0) ctx.inI0[static_cast<size_t>(a)] = 1;
  int half = d.algebra == ClassicalType::GL ? k : k;
  for (int posIdx = 0; posIdx < half; ++posIdx) {
    int node = order[static_cast<size_t>(posIdx)];
    int part = d.algebra == ClassicalType::GL ? node : node / 2;
    int sign = d.algebra == ClassicalType::GL ? 1 : ((node & 1) ? -1 : 1);
    for (int a : d.parts[static_cast<size_t>(part)]) {
      ctx.pos[static_cast<size_t>(a)] = posIdx;
      ctx.tau[static_cast<size_t>(a)] = sign * d.sigma[static_cast<size_t>(a)];
    }
  }
  return ctx;
}

// Membership of an epsilon-root in the parabolic described by (Q, tau).
bool inParabolic(const QContext& ctx, const std::vector<int>& root) {
  int a = -1, ca = 0, b = -1, cb = 0;
  for (size_t t = 0; t < root.size(); ++t) {
    if (root[t] == 0) continue;
    if (a < 0) {
      a = static_cast<int>(t);
      ca = root[t];
    } else {
      b = static_cast<int>(t);
      cb = root[t];
    }
  }
  if (b < 0) {
    // single index: inside the largest part everything survives
    if (ctx.inI0[static_cast<size_t>(a)]) return true;
    return (ca > 0 ? 1 : -1) == ctx.tau[static_cast<size_t>(a)];
  }
  bool a0 = ctx.inI0[static_cast<size_t>(a)], b0 = ctx.inI0[static_cast<size_t>(b)];
  if (a0 && b0) return true;
  if (a0 != b0) {
    int outIdx = a0 ? b : a;
    int outC = a0 ? cb : ca;
    return outC == ctx.tau[static_cast<size_t>(outIdx)];
  }
  int u = ca * ctx.tau[static_cast<size_t>(a)];
  int v = cb * ctx.tau[static_cast<size_t>(b)];
  if (u > 0 && v > 0) return true;
  if (u < 0 && v < 0) return false;
  if (u > 0) return ctx.pos[static_cast<size_t>(a)] <= ctx.pos[static_cast<size_t>(b)];
  return ctx.pos[static_cast<size_t>(b)] <= ctx.pos[static_cast<size_t>(a)];
}

}  // namespace

ParabolicDesc parabolicFromOrder(const ParabolicDatum& d, const std::vector<int>& order) {
  d.validate();
  QContext ctx = buildQContext(d, order);

  ParabolicDesc desc;
  int half = d.k();
  for (int posIdx = 0; posIdx < half; ++posIdx) {
    int node = order[static_cast<size_t>(posIdx)];
    int part = d.algebra == ClassicalType::GL ? node : node / 2;
    desc.orderedParts.push_back(d.parts[static_cast<size_t>(part)]);
  }
  if (d.typeII) desc.orderedParts.push_back(d.i0);
  desc.tau.assign(ctx.tau.begin(), ctx.tau.end());
  for (const auto& root : ambientRoots(d.algebra, d.n))
    if (inParabolic(ctx, root)) desc.rootList.push_back(root);
  return desc;
}

bool verifyContainment(const ParabolicDatum& d, const std::vector<DeltaVec>& S,
                       const ParabolicDesc& p) {
  std::set<std::vector<int>> inP(p.rootList.begin(), p.rootList.end());
  for (const auto& root : ambientRoots(d.algebra, d.n)) {
    DeltaVec v = deltaRestriction(d, root);
    if (isZeroVec(v)) continue;
    if (std::find(S.begin(), S.end(), v) == S.end()) continue;
    if (inP.find(root) == inP.end()) return false;
  }
  return true;
}

CycleWitness cycleInvariantWitness(const ParabolicDatum& d, const ARootSet& R,
                                   const std::vector<DeltaVec>& S, const std::vector<int>& cycle) {
  OrderGraph g = orderGraph(d, R, S);
  if (cycle.size() < 2 && !(cycle.size() == 1))
    throw NotACycle("cycle must list at least one node");
  size_t l = cycle.size();
  auto edgeExists = [&g](int u, int v) {
    const auto& lst = g.adj[static_cast<size_t>(u)];
    return std::find(lst.begin(), lst.end(), v) != lst.end();
  };
  auto inS = [&S](const DeltaVec& x) { return std::find(S.begin(), S.end(), x) != S.end(); };

  CycleWitness w;
  w.deltaSum.assign(static_cast<size_t>(d.k()), 0);
  for (size_t j = 0; j < l; ++j) {
    int x = cycle[j];
    int y = cycle[(j + 1) % l];
    if (!edgeExists(x, y)) throw NotACycle("consecutive nodes are not an edge of the order graph");
    DeltaVec nu(static_cast<size_t>(d.k()), 0);
    int mult = 1;
    if (!g.signedNodes) {
      nu[static_cast<size_t>(x)] = 1;
      nu[static_cast<size_t>(y)] = -1;
      if (!inS(nu)) throw NotACycle("edge is not generated by the set");
    } else if (y == OrderGraph::negate(x)) {
      int i = x / 2, s = (x & 1) ? -1 : 1;
      DeltaVec twice(static_cast<size_t>(d.k()), 0), once(static_cast<size_t>(d.k()), 0);
      twice[static_cast<size_t>(i)] = 2 * s;
      once[static_cast<size_t>(i)] = s;
      if (inS(twice)) {
        nu = twice;
        mult = 1;  // Sym2/Wedge2 root space used once
      } else if (inS(once)) {
        nu = once;
        mult = 2;  // square of the one-index root space
      } else {
        throw NotACycle("one-index edge is not generated by the set");
      }
    } else {
      int i = x / 2, si = (x & 1) ? -1 : 1;
      int jj = y / 2, sj = (y & 1) ? -1 : 1;
      nu[static_cast<size_t>(i)] = si;
      nu[static_cast<size_t>(jj)] = -sj;
      if (!inS(nu)) throw NotACycle("edge is not generated by the set");
    }
    w.multiset.emplace_back(nu, mult);
    for (size_t t = 0; t < w.deltaSum.size(); ++t)
      w.deltaSum[t] += mult * nu[t];
  }
  return w;
}

AppendixResult appendixCheck(const ParabolicDatum& d, const std::vector<DeltaVec>& S0) {
  d.validate();
  ARootSet R = aRoots(d);
  AppendixResult res;
  res.saturatedS = saturate(R, S0);
  OrderGraph g = orderGraph(d, R, res.saturatedS);
  res.order = extendToLinearOrder(g);
  res.extendable = res.order.has_value();
  if (res.extendable) {
    res.parabolic = parabolicFromOrder(d, *res.order);
    res.containmentVerified = verifyContainment(d, res.saturatedS, *res.parabolic);
  } else {
    res.cycle = findCycle(g);
    if (!res.cycle) throw Error("internal: no order and no cycle");
    res.witness = cycleInvariantWitness(d, R, res.saturatedS, *res.cycle);
  }
  return res;
}

namespace {

// Unordered set partitions of {0..n-1}, as lists of blocks.
std::vector<std::vector<std::vector<int>>> setPartitions(const std::vector<int>& elems) {
  std::vector<std::vector<std::vector<int>>> out;
  if (elems.empty()) {
    out.push_back({});
    return out;
  }
  std::vector<std::vector<int>> current;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == elems.size()) {
      out.push_back(current);
      return;
    }
    size_t numBlocks = current.size();
    for (size_t b = 0; b < numBlocks; ++b) {
      current[b].push_back(elems[idx]);
      rec(idx + 1);
      current[b].pop_back();
    }
    current.push_back({elems[idx]});
    rec(idx + 1);
    current.pop_back();
  };
  rec(0);
  return out;
}

void permuteBlocks(const std::vector<std::vector<int>>& blocks,
                   std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<int> order(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end());
  do {
    std::vector<std::vector<int>> arranged;
    for (int i : order) arranged.push_back(blocks[static_cast<size_t>(i)]);
    out.push_back(arranged);
  } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

std::vector<ParabolicDatum> enumerateData(ClassicalType t, int n) {
  std::vector<ParabolicDatum> out;
  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;

  auto signsOver = [n](const std::vector<int>& idx) {
    std::vector<std::vector<int>> out2;
    size_t m = idx.size();
    for (size_t bits = 0; bits < (1u << m); ++bits) {
      std::vector<int> sigma(static_cast<size_t>(n), 1);
      for (size_t j = 0; j < m; ++j)
        if (bits & (1u << j)) sigma[static_cast<size_t>(idx[j])] = -1;
      out2.push_back(sigma);
    }
    return out2;
  };

  // Type I
  for (const auto& blocks : setPartitions(all)) {
    std::vector<std::vector<std::vector<int>>> arrangements;
    permuteBlocks(blocks, arrangements);
    for (const auto& ordered : arrangements) {
      std::vector<int> signIdx = t == ClassicalType::GL ? std::vector<int>{} : all;
      // D Type I: the sign on a singleton largest part is immaterial.
      for (const auto& sigma : signsOver(signIdx)) {
        if (t == ClassicalType::D && !ordered.empty() && ordered.back().size() == 1 &&
            sigma[static_cast<size_t>(ordered.back()[0])] < 0)
          continue;
        ParabolicDatum d;
        d.algebra = t;
        d.n = n;
        d.typeII = false;
        d.parts = ordered;
        d.sigma = sigma;
        d.validate();
        out.push_back(std::move(d));
      }
    }
  }
  if (t == ClassicalType::GL) return out;

  // Type II
  size_t minI0 = t == ClassicalType::D ? 2 : 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> i0, rest;
    for (int a = 0; a < n; ++a)
      ((mask >> a) & 1u ? i0 : rest).push_back(a);
    if (i0.size() < minI0) continue;
    for (const auto& blocks : setPartitions(rest)) {
      std::vector<std::vector<std::vector<int>>> arrangements;
      permuteBlocks(blocks, arrangements);
      for (const auto& ordered : arrangements) {
        for (const auto& sigma : signsOver(rest)) {
          ParabolicDatum d;
          d.algebra = t;
          d.n = n;
          d.typeII = true;
          d.parts = ordered;
          d.i0 = i0;
          d.sigma = sigma;
          d.validate();
          out.push_back(std::move(d));
        }
      }
    }
  }
  return out;
}

void forEachSaturated(const ARootSet& R, int maxSize,
                      const std::function<void(const std::vector<DeltaVec>&)>& fn) {
  // Proportionality classes under positive scaling: {v, 2v} when both occur.
  size_t m = R.roots.size();
  std::vector<int> rayOf(m, -1);
  std::vector<std::vector<int>> rays;
  for (size_t i = 0; i < m; ++i) {
    if (rayOf[i] >= 0) continue;
    int ray = static_cast<int>(rays.size());
    rays.push_back({static_cast<int>(i)});
    rayOf[i] = ray;
    DeltaVec twice = R.roots[i];
    for (auto& x : twice) x *= 2;
    int j = R.indexOf(twice);
    if (j >= 0) {
      rays.back().push_back(j);
      rayOf[static_cast<size_t>(j)] = ray;
    }
  }

  std::vector<DeltaVec> S;
  std::function<void(size_t, int)> rec = [&](size_t ray, int budget) {
    fn(S);
    for (size_t r = ray; r < rays.size(); ++r) {
      int sz = static_cast<int>(rays[r].size());
      if (sz > budget) continue;
      size_t before = S.size();
      for (int idx : rays[r]) S.push_back(R.roots[static_cast<size_t>(idx)]);
      rec(r + 1, budget - sz);
      S.resize(before);
    }
  };
  rec(0, maxSize);
}

// ---------------------------------------------------------------------------
// Exhaustive sweep.  A compact allocation-free re-implementation of the
// pipeline above for small k; the unit tests check it against the reference
// functions on complete small sweeps.

namespace {

struct FastSweep {
  const ParabolicDatum* d;
  int n = 0, k = 0, nodes = 0;
  bool gl = false;
  std::vector<std::vector<int>> roots;      // ambient roots
  std::vector<int> rootA, rootCa, rootB, rootCb;
  std::vector<uint64_t> maskOfARoot;        // g-root mask per a-root index
  ARootSet R;
  std::vector<std::vector<int>> rays;       // a-root indices per ray

  // scratch
  uint16_t adj[8];
  int patI[64], patCi[64], patJ[64], patCj[64], patCount[64];
  int pos[32], tau[32];
  char inI0c[32];

  void init(const ParabolicDatum& datum) {
    d = &datum;
    n = datum.n;
    k = datum.k();
    gl = datum.algebra == ClassicalType::GL;
    nodes = gl ? k : 2 * k;
    roots = ambientRoots(datum.algebra, n);
    R = aRoots(datum);
    for (size_t t = 0; t < roots.size(); ++t) {
      int a = -1, ca = 0, b = -1, cb = 0;
      for (size_t x = 0; x < roots[t].size(); ++x) {
        if (roots[t][x] == 0) continue;
        if (a < 0) {
          a = static_cast<int>(x);
          ca = roots[t][x];
        } else {
          b = static_cast<int>(x);
          cb = roots[t][x];
        }
      }
      rootA.push_back(a);
      rootCa.push_back(ca);
      rootB.push_back(b);
      rootCb.push_back(cb);
    }
    maskOfARoot.assign(R.roots.size(), 0);
    for (size_t t = 0; t < roots.size(); ++t) {
      DeltaVec v = deltaRestriction(datum, roots[t]);
      if (isZeroVec(v)) continue;
      int idx = R.indexOf(v);
      maskOfARoot[static_cast<size_t>(idx)] |= 1ull << t;
    }
    for (size_t i = 0; i < R.roots.size(); ++i) {
      DeltaPattern p = patternOf(R.roots[i]);
      patI[i] = p.i;
      patCi[i] = p.ci;
      patJ[i] = p.j;
      patCj[i] = p.cj;
      patCount[i] = p.count;
    }
    // rays
    std::vector<int> rayOf(R.roots.size(), -1);
    for (size_t i = 0; i < R.roots.size(); ++i) {
      if (rayOf[i] >= 0) continue;
      rays.push_back({static_cast<int>(i)});
      rayOf[i] = static_cast<int>(rays.size()) - 1;
      DeltaVec twice = R.roots[i];
      for (auto& x : twice) x *= 2;
      int j = R.indexOf(twice);
      if (j >= 0) {
        rays.back().push_back(j);
        rayOf[static_cast<size_t>(j)] = rayOf[i];
      }
    }
    for (int a : datum.i0) inI0c[a] = 1;
    for (int a = 0; a < n; ++a)
      if (std::find(datum.i0.begin(), datum.i0.end(), a) == datum.i0.end()) inI0c[a] = 0;
  }

  // One saturated set, given as a-root indices.  Returns an error string or
  // empty on success; tallies into the stats.
  std::string check(const std::vector<int>& sIdx, long long& extendable, long long& cycles) {
    // Build graph.
    for (int x = 0; x < nodes; ++x) adj[x] = 0;
    for (int s : sIdx) {
      if (patCount[s] == 2) {
        if (gl) {
          int from = patCi[s] > 0 ? patI[s] : patJ[s];
          int to = patCi[s] > 0 ? patJ[s] : patI[s];
          adj[from] |= static_cast<uint16_t>(1u << to);
        } else {
          int a = 2 * patI[s] + (patCi[s] > 0 ? 0 : 1);
          int b = 2 * patJ[s] + (patCj[s] > 0 ? 0 : 1);
          adj[a] |= static_cast<uint16_t>(1u << (b ^ 1));
          adj[b] |= static_cast<uint16_t>(1u << (a ^ 1));
        }
      } else {
        int a = 2 * patI[s] + (patCi[s] > 0 ? 0 : 1);
        adj[a] |= static_cast<uint16_t>(1u << (a ^ 1));
      }
    }

    // Kahn peeling; works for both plain and signed graphs.
    uint16_t removedMask = 0;
    int order[8];
    int steps = gl ? k : k;
    bool ok = true;
    for (int step = 0; step < steps && ok; ++step) {
      int pick = -1;
      for (int x = 0; x < nodes && pick < 0; ++x) {
        if (removedMask & (1u << x)) continue;
        bool incoming = false;
        for (int u = 0; u < nodes && !incoming; ++u)
          if (!(removedMask & (1u << u)) && (adj[u] & (1u << x))) incoming = true;
        if (!incoming) pick = x;
      }
      if (pick < 0) {
        ok = false;
        break;
      }
      order[step] = pick;
      removedMask |= static_cast<uint16_t>(1u << pick);
      if (!gl) removedMask |= static_cast<uint16_t>(1u << (pick ^ 1));
    }

    if (ok) {
      ++extendable;
      // Build tau/pos and the parabolic mask; check containment.
      for (int a = 0; a < n; ++a) {
        pos[a] = k;
        tau[a] = 1;
      }
      for (int p = 0; p < steps; ++p) {
        int node = order[p];
        int part = gl ? node : node / 2;
        int sign = gl ? 1 : ((node & 1) ? -1 : 1);
        for (int a : d->parts[static_cast<size_t>(part)]) {
          pos[a] = p;
          tau[a] = sign * d->sigma[static_cast<size_t>(a)];
        }
      }
      uint64_t pMask = 0;
      for (size_t t = 0; t < roots.size(); ++t) {
        int a = rootA[t], ca = rootCa[t], b = rootB[t], cb = rootCb[t];
        bool in;
        if (b < 0) {
          in = inI0c[a] ? true : ((ca > 0 ? 1 : -1) == tau[a]);
        } else if (inI0c[a] && inI0c[b]) {
          in = true;
        } else if (inI0c[a] != inI0c[b]) {
          int outIdx = inI0c[a] ? b : a;
          int outC = inI0c[a] ? cb : ca;
          in = outC == tau[outIdx];
        } else {
          int u = ca * tau[a], v = cb * tau[b];
          if (u > 0 && v > 0) in = true;
          else if (u < 0 && v < 0) in = false;
          else if (u > 0) in = pos[a] <= pos[b];
          else in = pos[b] <= pos[a];
        }
        if (in) pMask |= 1ull << t;
      }
      uint64_t need = 0;
      for (int s : sIdx) need |= maskOfARoot[static_cast<size_t>(s)];
      if ((need & ~pMask) != 0) return "containment failed";
      // Order must extend the graph edges within the first half; sanity check.
      return "";
    }

    ++cycles;
    // Shortest cycle over the graph; witness must sum to zero.
    int bestLen = 1 << 20;
    int bestCycle[9];
    int bestSize = 0;
    for (int s = 0; s < nodes; ++s) {
      int dist[8], par[8];
      for (int x = 0; x < nodes; ++x) dist[x] = -1;
      int queue[8], qh = 0, qt = 0;
      queue[qt++] = s;
      dist[s] = 0;
      while (qh < qt) {
        int u = queue[qh++];
        for (int v = 0; v < nodes; ++v) {
          if (!(adj[u] & (1u << v)) || dist[v] >= 0) continue;
          dist[v] = dist[u] + 1;
          par[v] = u;
          queue[qt++] = v;
        }
      }
      for (int u = 0; u < nodes; ++u) {
        if (dist[u] < 0 || !(adj[u] & (1u << s))) continue;
        if (dist[u] + 1 < bestLen) {
          bestLen = dist[u] + 1;
          bestSize = 0;
          int chain[8], c = 0;
          for (int x = u;; x = par[x]) {
            chain[c++] = x;
            if (x == s) break;
          }
          for (int i = c - 1; i >= 0; --i) bestCycle[bestSize++] = chain[i];
        }
      }
    }
    if (bestSize == 0) return "no cycle found for a non-extendable set";
    // Witness sum.
    int sum[4] = {0, 0, 0, 0};
    for (int j = 0; j < bestSize; ++j) {
      int x = bestCycle[j], y = bestCycle[(j + 1) % bestSize];
      if (gl) {
        sum[x] += 1;
        sum[y] -= 1;
        // membership of the generating root in S is implied by the adjacency
      } else if (y == (x ^ 1)) {
        int i = x / 2, sgn = (x & 1) ? -1 : 1;
        sum[i] += 2 * sgn;
      } else {
        int i = x / 2, si = (x & 1) ? -1 : 1;
        int jj = y / 2, sj = (y & 1) ? -1 : 1;
        sum[i] += si;
        sum[jj] -= sj;
      }
    }
    for (int i = 0; i < k; ++i)
      if (sum[i] != 0) return "cycle witness has nonzero weight sum";
    return "";
  }
};

}  // namespace

SweepStats sweepTheorem(ClassicalType t, int n, int maxSatSize, int threads) {
  std::vector<ParabolicDatum> data = enumerateData(t, n);
  SweepStats stats;
  stats.data = static_cast<long long>(data.size());

  std::mutex mu;
  std::atomic<size_t> nextIdx{0};
  auto worker = [&]() {
    long long localSets = 0, localExt = 0, localCyc = 0;
    std::vector<std::string> localViol;
    while (true) {
      size_t idx = nextIdx.fetch_add(1);
      if (idx >= data.size()) break;
      FastSweep fs;
      fs.init(data[idx]);
      std::vector<int> sIdx;
      std::function<void(size_t, int)> rec = [&](size_t ray, int budget) {
        ++localSets;
        std::string err = fs.check(sIdx, localExt, localCyc);
        if (!err.empty() && localViol.size() < 20) {
          std::ostringstream os;
          os << data[idx].str() << " S={";
          for (int s : sIdx) os << deltaString(fs.R.roots[static_cast<size_t>(s)]) << ' ';
          os << "}: " << err;
          localViol.push_back(os.str());
        }
        for (size_t r = ray; r < fs.rays.size(); ++r) {
          int sz = static_cast<int>(fs.rays[r].size());
          if (sz > budget) continue;
          size_t before = sIdx.size();
          for (int i : fs.rays[r]) sIdx.push_back(i);
          rec(r + 1, budget - sz);
          sIdx.resize(before);
        }
      };
      rec(0, maxSatSize);
    }
    std::lock_guard<std::mutex> lock(mu);
    stats.saturatedSets += localSets;
    stats.extendable += localExt;
    stats.cycles += localCyc;
    for (auto& v : localViol)
      if (stats.violations.size() < 50) stats.violations.push_back(std::move(v));
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return stats;
}

DeltaVec parseDeltaExpr(const std::string& text, int k) {
  DeltaVec v(static_cast<size_t>(k), 0);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    int coef = 1;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) coef = std::stoi(s.substr(start, i - start));
    if (i >= s.size() || s[i] != 'd') throw ParseError("bad delta expression '" + text + "'");
    ++i;
    start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("bad delta expression '" + text + "'");
    int idx = std::stoi(s.substr(start, i - start));
    if (idx < 1 || idx > k) throw BadIndex("delta index out of range in '" + text + "'");
    v[static_cast<size_t>(idx - 1)] += sign * coef;
  }
  return v;
}

std::string deltaString(const DeltaVec& v) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first && v[i] > 0) os << '+';
    if (v[i] == -1) os << '-';
    else if (v[i] != 1) os << v[i];
    os << 'd' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace weylcup
