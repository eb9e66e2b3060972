#include "weylcup/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace weylcup {

namespace {

std::vector<std::vector<long long>> identityMat(int n) {
  std::vector<std::vector<long long>> m(static_cast<size_t>(n),
                                        std::vector<long long>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

// c = a * b for small integer matrices.
std::vector<std::vector<long long>> matMul(const std::vector<std::vector<long long>>& a,
                                           const std::vector<std::vector<long long>>& b) {
  size_t n = a.size();
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      long long aik = a[i][k];
      if (aik == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

bool isNegativeRoot(const RootVec& r) {
  for (long long x : r)
    if (x > 0) return false;
  return true;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  w.rootMat_ = identityMat(rs.rank());
  w.weightMat_ = identityMat(rs.rank());
  return w;
}

WeylElement WeylElement::simpleReflection(const RootSystem& rs, int i) {
  int n = rs.rank();
  if (i < 1 || i > n) throw BadIndex("simple reflection index out of range");
  const auto& C = rs.cartan();
  WeylElement w;
  // s_i(alpha_j) = alpha_j - C[i][j] alpha_i
  w.rootMat_ = identityMat(n);
  for (int j = 0; j < n; ++j)
    w.rootMat_[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] -=
        C[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  // (s_i lambda)_j = lambda_j - lambda_i C[j][i]
  w.weightMat_ = identityMat(n);
  for (int j = 0; j < n; ++j)
    w.weightMat_[static_cast<size_t>(j)][static_cast<size_t>(i - 1)] -=
        C[static_cast<size_t>(j)][static_cast<size_t>(i - 1)];
  return w;
}

WeylElement WeylElement::fromWord(const RootSystem& rs, const std::vector<int>& letters) {
  WeylElement w = identity(rs);
  for (int i : letters) w = w * simpleReflection(rs, i);
  return w;
}

RootVec WeylElement::actRoot(const RootVec& r) const {
  size_t n = rootMat_.size();
  RootVec out(n, 0);
  for (size_t j = 0; j < n; ++j) {
    long long rj = r[j];
    if (rj == 0) continue;
    for (size_t i = 0; i < n; ++i) out[i] += rootMat_[i][j] * rj;
  }
  return out;
}

Weight WeylElement::actWeight(const Weight& w) const {
  size_t n = weightMat_.size();
  std::vector<long long> out(n, 0);
  for (size_t j = 0; j < n; ++j) {
    long long wj = w.c[j];
    if (wj == 0) continue;
    for (size_t i = 0; i < n; ++i) out[i] += weightMat_[i][j] * wj;
  }
  return Weight(std::move(out));
}

Weight WeylElement::dot(const Weight& w) const {
  Weight shifted = w;
  for (auto& x : shifted.c) x += 1;
  Weight img = actWeight(shifted);
  for (auto& x : img.c) x -= 1;
  return img;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  WeylElement out;
  out.rootMat_ = matMul(rootMat_, other.rootMat_);
  out.weightMat_ = matMul(weightMat_, other.weightMat_);
  return out;
}

WeylElement WeylElement::inverse() const {
  // Integer matrix with determinant +-1; invert by exact Gauss-Jordan.
  auto invert = [](const std::vector<std::vector<long long>>& src) {
    size_t n = src.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(src[i][j]);
      m[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && m[piv][col] == 0) ++piv;
      std::swap(m[piv], m[col]);
      mpq_class inv = 1 / m[col][col];
      for (auto& x : m[col]) x *= inv;
      for (size_t row = 0; row < n; ++row) {
        if (row == col || m[row][col] == 0) continue;
        mpq_class f = m[row][col];
        for (size_t j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
      }
    }
    std::vector<std::vector<long long>> out(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) out[i][j] = mpz_class(m[i][n + j].get_num()).get_si();
    return out;
  };
  WeylElement w;
  w.rootMat_ = invert(rootMat_);
  w.weightMat_ = invert(weightMat_);
  return w;
}

bool WeylElement::isIdentity() const {
  size_t n = rootMat_.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (rootMat_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

InvSet WeylElement::inversionSet(const RootSystem& rs) const {
  InvSet s;
  for (int k = 0; k < rs.numPositiveRoots(); ++k)
    if (isNegativeRoot(actRoot(rs.positiveRoot(k)))) s.set(static_cast<size_t>(k));
  return s;
}

int WeylElement::length(const RootSystem& rs) const {
  return static_cast<int>(inversionSet(rs).count());
}

std::vector<int> WeylElement::minWord(const RootSystem& rs) const {
  // Greedy on left descents: the least i with w^{-1}(alpha_i) < 0 is the first
  // letter; recurse on s_i w.
  std::vector<int> word;
  WeylElement u = *this;
  WeylElement v = inverse();
  int n = rs.rank();
  while (!u.isIdentity()) {
    int pick = -1;
    for (int i = 1; i <= n; ++i) {
      RootVec e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i - 1)] = 1;
      if (isNegativeRoot(v.actRoot(e))) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw Error("internal: no left descent for a non-identity element");
    WeylElement s = simpleReflection(rs, pick);
    u = s * u;
    v = v * s;
    word.push_back(pick);
  }
  return word;
}

std::string WeylElement::wordString(const RootSystem& rs) const {
  std::vector<int> w = minWord(rs);
  if (w.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << '*';
    os << 's' << w[i];
  }
  return os.str();
}

size_t WeylElement::hashValue() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& row : rootMat_)
    for (long long x : row) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::vector<int> inversionList(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  InvSet s = w.inversionSet(rs);
  for (int k = 0; k < rs.numPositiveRoots(); ++k)
    if (s.test(static_cast<size_t>(k))) out.push_back(k);
  return out;
}

WeylElement minimalCosetRep(const RootSystem& rs, const WeylElement& w,
                            const std::vector<int>& simpleIdx) {
  WeylElement v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : simpleIdx) {
      if (i < 1 || i > rs.rank()) throw BadIndex("simple root index out of range");
      RootVec e(static_cast<size_t>(rs.rank()), 0);
      e[static_cast<size_t>(i - 1)] = 1;
      if (isNegativeRoot(v.actRoot(e))) {
        v = v * WeylElement::simpleReflection(rs, i);
        moved = true;
        break;
      }
    }
  }
  return v;
}

bool bruhatLeq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
  WeylElement a = u, b = w;
  int la = a.length(rs), lb = b.length(rs);
  while (true) {
    if (la == 0) return true;
    if (la > lb) return false;
    // least left descent of b
    int pick = -1;
    WeylElement binv = b.inverse();
    for (int i = 1; i <= rs.rank(); ++i) {
      RootVec e(static_cast<size_t>(rs.rank()), 0);
      e[static_cast<size_t>(i - 1)] = 1;
      if (isNegativeRoot(binv.actRoot(e))) {
        pick = i;
        break;
      }
    }
    WeylElement s = WeylElement::simpleReflection(rs, pick);
    WeylElement sa = s * a;
    int lsa = sa.length(rs);
    b = s * b;
    lb -= 1;
    if (lsa < la) {
      a = sa;
      la = lsa;
    }
  }
}

WeylElement longestElement(const RootSystem& rs) {
  WeylElement w = WeylElement::identity(rs);
  int n = rs.rank();
  while (true) {
    int pick = -1;
    for (int i = 1; i <= n; ++i) {
      RootVec e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i - 1)] = 1;
      if (!isNegativeRoot(w.actRoot(e))) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return w;
    w = w * WeylElement::simpleReflection(rs, pick);
  }
}

std::vector<int> parseWord(const std::string& text, int rank) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  std::vector<int> letters;
  if (s == "e" || s.empty()) return letters;
  if (s.find('s') != std::string::npos || s.find('*') != std::string::npos) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '*')) {
      if (tok.empty() || tok[0] != 's') throw ParseError("bad word token '" + tok + "'");
      try {
        letters.push_back(std::stoi(tok.substr(1)));
      } catch (const std::exception&) {
        throw ParseError("bad word token '" + tok + "'");
      }
    }
  } else {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("bad word string '" + text + "'");
      letters.push_back(ch - '0');
    }
  }
  for (int i : letters)
    if (i < 1 || i > rank) throw BadIndex("word letter out of range 1.." + std::to_string(rank));
  return letters;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, size_t cap) {
  if (rs.weylOrder() > static_cast<long>(cap))
    throw GroupTooLarge("Weyl group of " + rs.label() + " has order " +
                        rs.weylOrder().get_str() + " > cap " + std::to_string(cap));
  WeylGroup g;
  g.rs_ = &rs;
  int n = rs.rank();
  std::vector<WeylElement> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(WeylElement::simpleReflection(rs, i));

  auto lookup = [&g](const WeylElement& w) -> int {
    auto it = g.hashToIdx_.find(w.hashValue());
    if (it == g.hashToIdx_.end()) return -1;
    for (int idx : it->second)
      if (g.elems_[static_cast<size_t>(idx)] == w) return idx;
    return -1;
  };

  auto add = [&](const WeylElement& w, const std::vector<int>& word) -> int {
    int idx = static_cast<int>(g.elems_.size());
    g.elems_.push_back(w);
    g.words_.push_back(word);
    InvSet s = w.inversionSet(rs);
    g.invs_.push_back(s);
    g.lengths_.push_back(static_cast<int>(s.count()));
    g.invToIdx_.emplace(s, idx);
    g.hashToIdx_[w.hashValue()].push_back(idx);
    return idx;
  };

  add(WeylElement::identity(rs), {});
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      WeylElement next = g.elems_[static_cast<size_t>(cur)] * gens[static_cast<size_t>(i - 1)];
      if (lookup(next) < 0) {
        std::vector<int> word = g.words_[static_cast<size_t>(cur)];
        word.push_back(i);
        int idx = add(next, word);
        queue.push_back(idx);
      }
    }
  }

  // BFS by right multiplication yields words that are reduced but not always
  // lexicographically least; recompute canonical words once.
  for (size_t k = 0; k < g.elems_.size(); ++k) g.words_[k] = g.elems_[k].minWord(rs);

  g.right_.assign(g.elems_.size(), std::vector<int>(static_cast<size_t>(n), -1));
  for (size_t k = 0; k < g.elems_.size(); ++k)
    for (int i = 1; i <= n; ++i)
      g.right_[k][static_cast<size_t>(i - 1)] = lookup(g.elems_[k] * gens[static_cast<size_t>(i - 1)]);

  g.inverse_.assign(g.elems_.size(), -1);
  for (size_t k = 0; k < g.elems_.size(); ++k) {
    int idx = lookup(g.elems_[k].inverse());
    if (idx < 0) throw Error("internal: inverse not found during enumeration");
    g.inverse_[k] = idx;
  }

  int N = rs.numPositiveRoots();
  for (size_t k = 0; k < g.elems_.size(); ++k)
    if (g.lengths_[k] == N) g.w0_ = static_cast<int>(k);

  return g;
}

int WeylGroup::indexOf(const WeylElement& w) const {
  auto it = hashToIdx_.find(w.hashValue());
  if (it == hashToIdx_.end()) return -1;
  for (int idx : it->second)
    if (elems_[static_cast<size_t>(idx)] == w) return idx;
  return -1;
}

int WeylGroup::compose(int a, int b) const {
  int cur = a;
  for (int letter : words_[static_cast<size_t>(b)]) cur = rightMult(cur, letter);
  return cur;
}

int WeylGroup::elementWithInversions(const InvSet& s) const {
  auto it = invToIdx_.find(s);
  return it == invToIdx_.end() ? -1 : it->second;
}

bool WeylGroup::bruhatLeqIdx(int u, int w) const {
  if (u == 0) return true;
  if (length(u) > length(w)) return false;
  if (u == w) return true;
  // least left descent of w: i with w^{-1}(alpha_i) < 0, i.e. alpha_i in
  // inversions of w^{-1}
  const InvSet& winv = invs_[static_cast<size_t>(inverse_[static_cast<size_t>(w)])];
  int pick = -1;
  for (int i = 1; i <= rs_->rank(); ++i) {
    RootVec e(static_cast<size_t>(rs_->rank()), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    int idx = rs_->rootIndex(e);
    if (winv.test(static_cast<size_t>(idx))) {
      pick = i;
      break;
    }
  }
  // s_i * x = (x^{-1} s_i)^{-1}; use right tables on inverses.
  int sw = inverse_[static_cast<size_t>(rightMult(inverse_[static_cast<size_t>(w)], pick))];
  int su = inverse_[static_cast<size_t>(rightMult(inverse_[static_cast<size_t>(u)], pick))];
  if (length(su) < length(u)) return bruhatLeqIdx(su, sw);
  return bruhatLeqIdx(u, sw);
}

std::vector<int> WeylGroup::elementsOfLength(int l) const {
  std::vector<int> out;
  for (size_t k = 0; k < elems_.size(); ++k)
    if (lengths_[k] == l) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace weylcup
