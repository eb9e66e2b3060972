#include "weylcup/vecpart.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace weylcup {

namespace {

struct VecHash {
  size_t operator()(const std::vector<long long>& v) const {
    size_t h = 0x2545f4914f6cdd1dull;
    for (long long x : v) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Binomial C(a+m-1, m-1): multiset choices of a copies over m slots.
mpz_class starsAndBars(long long a, long long m) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a + m - 1),
               static_cast<unsigned long>(m - 1));
  return r;
}

}  // namespace

mpz_class partitionCount(const RootSystem& rs, const RootMultiset& S,
                         const std::vector<long long>& gammaRootCoords) {
  for (long long x : gammaRootCoords)
    if (x < 0) return 0;

  // Support roots, highest first so remainders shrink fast.
  std::vector<int> roots;
  for (int k = 0; k < rs.numPositiveRoots(); ++k)
    if (S.mult[static_cast<size_t>(k)] > 0) roots.push_back(k);
  std::sort(roots.begin(), roots.end(),
            [&rs](int a, int b) { return rs.heightOfRoot(a) > rs.heightOfRoot(b); });

  // Memo keyed by remainder with the suffix index appended.
  std::unordered_map<std::vector<long long>, mpz_class, VecHash> cache;

  std::function<mpz_class(size_t, const std::vector<long long>&)> go =
      [&](size_t idx, const std::vector<long long>& rem) -> mpz_class {
    bool zero = true;
    for (long long x : rem)
      if (x != 0) zero = false;
    if (zero) return 1;
    if (idx == roots.size()) return 0;
    std::vector<long long> key = rem;
    key.push_back(static_cast<long long>(idx));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const RootVec& beta = rs.positiveRoot(roots[idx]);
    long long m = S.mult[static_cast<size_t>(roots[idx])];
    mpz_class total = 0;
    std::vector<long long> next = rem;
    long long c = 0;
    while (true) {
      bool feasible = true;
      for (size_t j = 0; j < next.size(); ++j)
        if (next[j] < 0) feasible = false;
      if (!feasible) break;
      total += starsAndBars(c, m) * go(idx + 1, next);
      for (size_t j = 0; j < next.size(); ++j) next[j] -= beta[j];
      ++c;
    }
    cache.emplace(std::move(key), total);
    return total;
  };

  return go(0, gammaRootCoords);
}

mpz_class partitionCount(const RootSystem& rs, const RootMultiset& S, const Weight& gamma) {
  auto rc = rs.rootCoordsIfIntegral(gamma);
  if (!rc) return 0;
  return partitionCount(rs, S, *rc);
}

mpz_class kostantPartition(const RootSystem& rs, const Weight& gamma) {
  return partitionCount(rs, RootMultiset::allPositive(rs), gamma);
}

mpz_class kostantPartition(const RootSystem& rs, const std::vector<long long>& gammaRootCoords) {
  return partitionCount(rs, RootMultiset::allPositive(rs), gammaRootCoords);
}

RootMultiset theoremMultiset(const RootSystem& rs, const std::vector<InvSet>& wList,
                             const InvSet& w) {
  RootMultiset S = RootMultiset::empty(rs);
  int N = rs.numPositiveRoots();
  for (const InvSet& phi : wList)
    for (int k = 0; k < N; ++k)
      if (!phi.test(static_cast<size_t>(k))) S.mult[static_cast<size_t>(k)] += 1;
  for (int k = 0; k < N; ++k)
    if (w.test(static_cast<size_t>(k))) S.mult[static_cast<size_t>(k)] += 1;
  S.minusDeltaPlus();
  return S;
}

std::string rootString(const RootSystem& rs, int posRootIdx) {
  const RootVec& r = rs.positiveRoot(posRootIdx);
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < rs.rank(); ++j) {
    long long c = r[static_cast<size_t>(j)];
    if (c == 0) continue;
    if (!first) os << '+';
    if (c != 1) os << c;
    os << 'a' << (j + 1);
    first = false;
  }
  return os.str();
}

std::string multisetString(const RootSystem& rs, const RootMultiset& S) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int k = 0; k < rs.numPositiveRoots(); ++k) {
    long long m = S.mult[static_cast<size_t>(k)];
    if (m == 0) continue;
    if (!first) os << ", ";
    os << rootString(rs, k) << ':' << m;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

RootVec parseRootExpr(const RootSystem& rs, const std::string& expr) {
  // Sums of terms like "a1", "2a1", "-a2".
  RootVec r(static_cast<size_t>(rs.rank()), 0);
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  size_t i = 0;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    long long coef = 1;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) coef = std::stoll(s.substr(start, i - start));
    if (i >= s.size() || s[i] != 'a') throw ParseError("bad root expression '" + expr + "'");
    ++i;
    start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("bad root expression '" + expr + "'");
    int idx = std::stoi(s.substr(start, i - start));
    if (idx < 1 || idx > rs.rank()) throw BadIndex("simple root index out of range in '" + expr + "'");
    r[static_cast<size_t>(idx - 1)] += sign * coef;
  }
  return r;
}

}  // namespace

RootMultiset parseRootMultiset(const RootSystem& rs, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("multiset must look like {a1:2, a1+a2:1}");
  RootMultiset S = RootMultiset::empty(rs);
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return S;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    long long m = 1;
    std::string rootPart = tok;
    auto colon = tok.find(':');
    if (colon != std::string::npos) {
      rootPart = tok.substr(0, colon);
      m = std::stoll(tok.substr(colon + 1));
    }
    RootVec r = parseRootExpr(rs, rootPart);
    int idx = rs.rootIndex(r);
    if (idx < 0) throw RootNotInSystem("'" + rootPart + "' is not a positive root of " + rs.label());
    if (m < 0) throw ParseError("negative multiplicity in multiset");
    S.mult[static_cast<size_t>(idx)] += m;
  }
  return S;
}

}  // namespace weylcup
