#include "weylcup/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace weylcup {

char typeChar(SimpleType t) {
  switch (t) {
    case SimpleType::A: return 'A';
    case SimpleType::B: return 'B';
    case SimpleType::C: return 'C';
    case SimpleType::D: return 'D';
    case SimpleType::G: return 'G';
  }
  return '?';
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

Weight parseWeight(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("weight must look like [a,b,...]: " + text);
  std::vector<long long> coords;
  std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        coords.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad weight entry '" + tok + "' in " + text);
      }
    }
  }
  return Weight(std::move(coords));
}

namespace {

void buildCartan(SimpleType t, int n, std::vector<std::vector<long long>>& C,
                 std::vector<long long>& d) {
  C.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) C[i][i] = 2;
  auto chain = [&](int upTo) {
    for (int i = 0; i + 1 < upTo; ++i) {
      C[i][i + 1] = -1;
      C[i + 1][i] = -1;
    }
  };
  d.assign(static_cast<size_t>(n), 1);
  switch (t) {
    case SimpleType::A:
      chain(n);
      break;
    case SimpleType::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      chain(n);
      C[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      d[n - 1] = 1;
      break;
    case SimpleType::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      chain(n);
      C[n - 2][n - 1] = -2;
      d[n - 1] = 2;
      break;
    case SimpleType::D:
      chain(n - 1);
      C[n - 3][n - 1] = -1;
      C[n - 1][n - 3] = -1;
      break;
    case SimpleType::G:
      // alpha_1 short, alpha_2 long
      C[0][1] = -3;
      C[1][0] = -1;
      d[1] = 3;
      break;
  }
}

}  // namespace

RootSystem RootSystem::build(SimpleType t, int rank) {
  switch (t) {
    case SimpleType::A:
      if (rank < 1) throw InvalidRank("type A requires rank >= 1");
      break;
    case SimpleType::B:
    case SimpleType::C:
      if (rank < 2) throw InvalidRank("types B and C require rank >= 2");
      break;
    case SimpleType::D:
      if (rank < 3) throw InvalidRank("type D requires rank >= 3 (D2 = A1+A1, D3 = A3)");
      break;
    case SimpleType::G:
      if (rank != 2) throw InvalidRank("type G requires rank 2");
      break;
  }

  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = rank;
  buildCartan(t, rank, rs.cartan_, rs.dsym_);
  rs.dmax_ = *std::max_element(rs.dsym_.begin(), rs.dsym_.end());

  // Positive roots: reflection closure of the simple roots inside the
  // positive cone.
  std::set<RootVec> pos;
  for (int i = 0; i < rank; ++i) {
    RootVec e(static_cast<size_t>(rank), 0);
    e[static_cast<size_t>(i)] = 1;
    pos.insert(e);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RootVec> cur(pos.begin(), pos.end());
    for (const RootVec& r : cur) {
      for (int i = 0; i < rank; ++i) {
        long long p = 0;
        for (int j = 0; j < rank; ++j) p += rs.cartan_[i][j] * r[static_cast<size_t>(j)];
        RootVec s = r;
        s[static_cast<size_t>(i)] -= p;
        bool nonneg = true, nonzero = false;
        for (long long x : s) {
          if (x < 0) nonneg = false;
          if (x != 0) nonzero = true;
        }
        if (nonneg && nonzero && pos.insert(s).second) grew = true;
      }
    }
  }

  rs.positive_.assign(pos.begin(), pos.end());
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const RootVec& a, const RootVec& b) {
    long long ha = 0, hb = 0;
    for (long long x : a) ha += x;
    for (long long x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  if (rs.positive_.size() > 128)
    throw InvalidRank("rank too large: more than 128 positive roots");
  for (size_t i = 0; i < rs.positive_.size(); ++i) {
    rs.index_[rs.positive_[i]] = static_cast<int>(i);
    long long h = 0;
    for (long long x : rs.positive_[i]) h += x;
    rs.heights_.push_back(h);
  }

  // Classical count check.
  size_t n = static_cast<size_t>(rank);
  size_t expected = 0;
  switch (t) {
    case SimpleType::A: expected = n * (n + 1) / 2; break;
    case SimpleType::B:
    case SimpleType::C: expected = n * n; break;
    case SimpleType::D: expected = n * (n - 1); break;
    case SimpleType::G: expected = 6; break;
  }
  if (rs.positive_.size() != expected)
    throw Error("internal: positive-root count mismatch for " + rs.label());

  // Coroot coordinates: beta^vee = sum_j c_j d_j / (beta,beta)_half * alpha_j^vee.
  for (const RootVec& r : rs.positive_) {
    long long nb = rs.halfNormInt(r);
    std::vector<long long> cv(n);
    for (size_t j = 0; j < n; ++j) {
      long long num = r[j] * rs.dsym_[j];
      if (num % nb != 0) throw Error("internal: non-integral coroot coordinate");
      cv[j] = num / nb;
    }
    rs.corootCoords_.push_back(std::move(cv));
  }

  // Exact inverse of the Cartan matrix (Gauss-Jordan over Q).
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(rs.cartan_[i][j]);
    m[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error("internal: singular Cartan matrix");
    std::swap(m[piv], m[col]);
    mpq_class inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      mpq_class f = m[row][col];
      for (size_t j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  rs.cartanInv_.assign(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rs.cartanInv_[i][j] = m[i][n + j];

  return rs;
}

RootSystem RootSystem::parse(const std::string& label) {
  if (label.size() < 2) throw ParseError("bad system label: " + label);
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(label.substr(1), &pos);
    if (pos + 1 != label.size()) throw std::invalid_argument(label);
  } catch (const std::exception&) {
    throw ParseError("bad system label: " + label);
  }
  switch (t) {
    case 'A': return build(SimpleType::A, rank);
    case 'B': return build(SimpleType::B, rank);
    case 'C': return build(SimpleType::C, rank);
    case 'D': return build(SimpleType::D, rank);
    case 'G': return build(SimpleType::G, rank);
    case 'E':
    case 'F':
      throw UnsupportedType("exceptional types E and F are not supported");
    default:
      throw UnsupportedType(std::string("unknown type '") + t + "'");
  }
}

std::string RootSystem::label() const {
  return std::string(1, typeChar(type_)) + std::to_string(rank_);
}

int RootSystem::rootIndex(const RootVec& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::isRoot(const RootVec& r) const {
  if (rootIndex(r) >= 0) return true;
  RootVec neg = r;
  for (auto& x : neg) x = -x;
  return rootIndex(neg) >= 0;
}

long long RootSystem::halfNormInt(const RootVec& r) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += r[static_cast<size_t>(i)] * r[static_cast<size_t>(j)] * dsym_[static_cast<size_t>(i)] *
           cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return s / 2;
}

long long RootSystem::pairCorootIdx(const Weight& lambda, int posRootIdx) const {
  const auto& cv = corootCoords_.at(static_cast<size_t>(posRootIdx));
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += cv[static_cast<size_t>(j)] * lambda[j];
  return s;
}

long long RootSystem::pairCoroot(const Weight& lambda, const RootVec& beta) const {
  int idx = rootIndex(beta);
  if (idx >= 0) return pairCorootIdx(lambda, idx);
  RootVec neg = beta;
  for (auto& x : neg) x = -x;
  idx = rootIndex(neg);
  if (idx < 0) throw RootNotInSystem("not a root of " + label());
  return -pairCorootIdx(lambda, idx);
}

mpq_class RootSystem::kappaRootWeight(const RootVec& beta, const Weight& lambda) const {
  // (beta, lambda) = sum_j c_j d_j lambda_j, rescaled so long roots have norm 2.
  long long s = 0;
  for (int j = 0; j < rank_; ++j)
    s += beta[static_cast<size_t>(j)] * dsym_[static_cast<size_t>(j)] * lambda[j];
  mpq_class q(static_cast<long>(s), static_cast<long>(dmax_));
  q.canonicalize();
  return q;
}

int RootSystem::kappaSign(const RootVec& beta, const Weight& lambda) const {
  long long s = 0;
  for (int j = 0; j < rank_; ++j)
    s += beta[static_cast<size_t>(j)] * dsym_[static_cast<size_t>(j)] * lambda[j];
  return (s > 0) - (s < 0);
}

mpq_class RootSystem::pairingForm(const Weight& a, const Weight& b) const {
  // (a, b) = a^T (C^{-1})^T D b where D_jj = d_j, rescaled by 1/dmax.
  std::vector<mpq_class> ra = toRootCoords(a);
  mpq_class s = 0;
  for (int j = 0; j < rank_; ++j)
    s += ra[static_cast<size_t>(j)] * static_cast<long>(dsym_[static_cast<size_t>(j)] * b[j]);
  return s / static_cast<long>(dmax_);
}

Weight RootSystem::rootAsWeight(const RootVec& r) const {
  std::vector<long long> fc(static_cast<size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      fc[static_cast<size_t>(i)] += cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                    r[static_cast<size_t>(j)];
  return Weight(std::move(fc));
}

std::vector<mpq_class> RootSystem::toRootCoords(const Weight& w) const {
  std::vector<mpq_class> rc(static_cast<size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      rc[static_cast<size_t>(i)] += cartanInv_[static_cast<size_t>(i)][static_cast<size_t>(j)] * static_cast<long>(w[j]);
  for (auto& q : rc) q.canonicalize();
  return rc;
}

std::vector<mpq_class> RootSystem::fromRootCoords(const std::vector<mpq_class>& rc) const {
  std::vector<mpq_class> fc(static_cast<size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      fc[static_cast<size_t>(i)] += static_cast<long>(cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
                                    rc[static_cast<size_t>(j)];
  for (auto& q : fc) q.canonicalize();
  return fc;
}

std::optional<std::vector<long long>> RootSystem::rootCoordsIfIntegral(const Weight& w) const {
  std::vector<mpq_class> rc = toRootCoords(w);
  std::vector<long long> out(rc.size());
  for (size_t i = 0; i < rc.size(); ++i) {
    if (rc[i].get_den() != 1) return std::nullopt;
    if (!rc[i].get_num().fits_slong_p()) return std::nullopt;
    out[i] = rc[i].get_num().get_si();
  }
  return out;
}

bool RootSystem::isRegular(const Weight& lambda) const {
  Weight lr = lambda + rho();
  for (int i = 0; i < numPositiveRoots(); ++i)
    if (pairCorootIdx(lr, i) == 0) return false;
  return true;
}

mpz_class RootSystem::weylOrder() const {
  auto fact = [](int m) {
    mpz_class f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  mpz_class two = 2;
  mpz_class p;
  switch (type_) {
    case SimpleType::A: return fact(rank_ + 1);
    case SimpleType::B:
    case SimpleType::C:
      mpz_pow_ui(p.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(rank_));
      return p * fact(rank_);
    case SimpleType::D:
      mpz_pow_ui(p.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(rank_ - 1));
      return p * fact(rank_);
    case SimpleType::G: return 12;
  }
  return 0;
}

}  // namespace weylcup
