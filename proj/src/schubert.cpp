#include "weylcup/schubert.hpp"

#include <algorithm>
#include <sstream>

namespace weylcup {

int RestrictionPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

RestrictionPoly& RestrictionPoly::addMonomialTimes(const std::vector<int>& expo,
                                                   const mpq_class& coef) {
  auto it = terms.find(expo);
  if (it == terms.end()) {
    if (coef != 0) terms.emplace(expo, coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

RestrictionPoly operator+(const RestrictionPoly& a, const RestrictionPoly& b) {
  RestrictionPoly out = a;
  for (const auto& [e, c] : b.terms) out.addMonomialTimes(e, c);
  return out;
}

RestrictionPoly RestrictionPoly::timesLinear(const std::vector<long long>& c) const {
  RestrictionPoly out;
  for (const auto& [e, coef] : terms) {
    for (size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      std::vector<int> e2 = e;
      e2[j] += 1;
      out.addMonomialTimes(e2, coef * static_cast<long>(c[j]));
    }
  }
  return out;
}

mpq_class RestrictionPoly::evalAt(const std::vector<mpq_class>& point) const {
  mpq_class total = 0;
  for (const auto& [e, coef] : terms) {
    mpq_class m = coef;
    for (size_t j = 0; j < e.size(); ++j)
      for (int t = 0; t < e[j]; ++t) m *= point[j];
    total += m;
  }
  return total;
}

std::string RestrictionPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coef] : terms) {
    if (!first) os << " + ";
    first = false;
    os << coef;
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      os << "*a" << (j + 1);
      if (e[j] > 1) os << '^' << e[j];
    }
  }
  return os.str();
}

SchubertCalc::SchubertCalc(const WeylGroup& W) : W_(&W) {
  const RootSystem& rs = W.rootSystem();
  int n = rs.rank();
  // Generic point: distinct primes keep every positive root strictly positive.
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  point_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) point_[static_cast<size_t>(i)] = primes[i % 15];
  for (int k = 0; k < rs.numPositiveRoots(); ++k) {
    const RootVec& r = rs.positiveRoot(k);
    mpq_class v = 0;
    for (int j = 0; j < n; ++j) v += point_[static_cast<size_t>(j)] * static_cast<long>(r[static_cast<size_t>(j)]);
    rootValue_.push_back(v);
  }
  // For the fixed reduced word i1..im of each element, position j carries the
  // positive root s_{i1}...s_{i_{j-1}}(alpha_{i_j}).
  betaSeq_.resize(W.size());
  for (size_t v = 0; v < W.size(); ++v) {
    const std::vector<int>& word = W.minWord(static_cast<int>(v));
    WeylElement prefix = WeylElement::identity(rs);
    for (int letter : word) {
      RootVec e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(letter - 1)] = 1;
      RootVec beta = prefix.actRoot(e);
      int idx = rs.rootIndex(beta);
      if (idx < 0) throw Error("internal: non-positive prefix root in reduced word");
      betaSeq_[v].push_back(idx);
      prefix = prefix * WeylElement::simpleReflection(rs, letter);
    }
  }
}

void SchubertCalc::ensureBruhat() {
  if (!bruhat_.empty()) return;
  size_t m = W_->size();
  bruhat_.assign(m, std::vector<char>(m, 0));
  for (size_t u = 0; u < m; ++u)
    for (size_t w = 0; w < m; ++w)
      bruhat_[u][w] = W_->bruhatLeqIdx(static_cast<int>(u), static_cast<int>(w)) ? 1 : 0;
}

mpq_class SchubertCalc::xi(int u, int v) {
  long long key = static_cast<long long>(u) * static_cast<long long>(W_->size()) + v;
  auto it = xiCache_.find(key);
  if (it != xiCache_.end()) return it->second;

  // DP over the word of v: state = partial subword product, each chosen letter
  // must lengthen it; accumulate the product of position roots.
  const std::vector<int>& word = W_->minWord(v);
  const std::vector<int>& betas = betaSeq_[static_cast<size_t>(v)];
  int targetLen = W_->length(u);
  std::unordered_map<int, mpq_class> state;
  state[W_->identityIdx()] = 1;
  for (size_t j = 0; j < word.size(); ++j) {
    std::unordered_map<int, mpq_class> next = state;
    const mpq_class& val = rootValue_[static_cast<size_t>(betas[j])];
    for (const auto& [x, acc] : state) {
      if (W_->length(x) >= targetLen) continue;
      int y = W_->rightMult(x, word[j]);
      if (W_->length(y) != W_->length(x) + 1) continue;
      next[y] += acc * val;
    }
    state = std::move(next);
  }
  auto found = state.find(u);
  mpq_class out = found == state.end() ? mpq_class(0) : found->second;
  xiCache_.emplace(key, out);
  return out;
}

RestrictionPoly SchubertCalc::billeyRestriction(int u, int v) {
  auto key = std::make_pair(u, v);
  auto it = polyCache_.find(key);
  if (it != polyCache_.end()) return it->second;

  const RootSystem& rs = W_->rootSystem();
  const std::vector<int>& word = W_->minWord(v);
  const std::vector<int>& betas = betaSeq_[static_cast<size_t>(v)];
  int targetLen = W_->length(u);
  std::unordered_map<int, RestrictionPoly> state;
  RestrictionPoly one;
  one.addMonomialTimes(std::vector<int>(static_cast<size_t>(rs.rank()), 0), 1);
  state[W_->identityIdx()] = one;
  for (size_t j = 0; j < word.size(); ++j) {
    std::unordered_map<int, RestrictionPoly> next = state;
    const RootVec& beta = rs.positiveRoot(betas[j]);
    for (const auto& [x, poly] : state) {
      if (W_->length(x) >= targetLen) continue;
      int y = W_->rightMult(x, word[j]);
      if (W_->length(y) != W_->length(x) + 1) continue;
      RestrictionPoly grown = poly.timesLinear(beta);
      auto slot = next.find(y);
      if (slot == next.end())
        next.emplace(y, std::move(grown));
      else
        slot->second = slot->second + grown;
    }
    state = std::move(next);
  }
  RestrictionPoly out;
  auto found = state.find(u);
  if (found != state.end()) out = found->second;
  polyCache_.emplace(key, out);
  return out;
}

mpz_class SchubertCalc::structureConstant(int u, int v, int w, bool* lengthMismatch) {
  if (lengthMismatch) *lengthMismatch = false;
  if (W_->length(u) + W_->length(v) != W_->length(w)) {
    if (lengthMismatch) *lengthMismatch = true;
    return 0;
  }
  ensureBruhat();
  // Solve xi_u(x) xi_v(x) = sum_{y <= x} c_y xi_y(x) for x ascending below w.
  std::vector<int> below;
  for (size_t x = 0; x < W_->size(); ++x)
    if (bruhat_[x][static_cast<size_t>(w)]) below.push_back(static_cast<int>(x));
  std::sort(below.begin(), below.end(),
            [this](int a, int b) { return W_->length(a) < W_->length(b); });
  std::unordered_map<int, mpq_class> c;
  for (int x : below) {
    mpq_class rhs = xi(u, x) * xi(v, x);
    for (int y : below) {
      if (y == x) continue;
      if (!bruhat_[static_cast<size_t>(y)][static_cast<size_t>(x)]) continue;
      auto it = c.find(y);
      if (it == c.end() || it->second == 0) continue;
      rhs -= it->second * xi(y, x);
    }
    c[x] = rhs / xi(x, x);
  }
  mpq_class top = c[w];
  if (top.get_den() != 1) throw Error("internal: non-integral structure constant");
  return mpz_class(top.get_num());
}

CohClass SchubertCalc::multiplyBasis(int u, int v) {
  ensureBruhat();
  int target = W_->length(u) + W_->length(v);
  CohClass out;
  for (size_t w = 0; w < W_->size(); ++w) {
    if (W_->length(static_cast<int>(w)) != target) continue;
    if (!bruhat_[static_cast<size_t>(u)][w] || !bruhat_[static_cast<size_t>(v)][w]) continue;
    mpz_class coef = structureConstant(u, v, static_cast<int>(w));
    if (coef != 0) out[static_cast<int>(w)] = coef;
  }
  return out;
}

CohClass SchubertCalc::multiply(const CohClass& a, int v) {
  CohClass out;
  for (const auto& [u, coef] : a) {
    CohClass part = multiplyBasis(u, v);
    for (const auto& [w, c2] : part) {
      out[w] += coef * c2;
      if (out[w] == 0) out.erase(w);
    }
  }
  return out;
}

mpz_class SchubertCalc::intersectionNumber(const std::vector<int>& ws, int w) {
  int total = 0;
  for (int u : ws) total += W_->length(u);
  if (total != W_->length(w)) return 0;
  if (ws.empty()) return w == W_->identityIdx() ? 1 : 0;
  if (ws.size() == 1) return ws[0] == w ? 1 : 0;
  CohClass cls;
  cls[ws[0]] = 1;
  for (size_t i = 1; i < ws.size(); ++i) cls = multiply(cls, ws[i]);
  auto it = cls.find(w);
  return it == cls.end() ? mpz_class(0) : it->second;
}

mpz_class SchubertCalc::intersectionSymmetric(const std::vector<int>& ws) {
  if (ws.empty()) return 0;
  std::vector<int> head(ws.begin(), ws.end() - 1);
  int w = W_->compose(W_->longestIdx(), ws.back());
  return intersectionNumber(head, w);
}

}  // namespace weylcup
