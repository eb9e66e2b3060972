#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylcup/root_system.hpp"

namespace weylcup {

// Inversion sets as bitmasks over the positive-root indices of a RootSystem.
using InvSet = std::bitset<128>;

// A Weyl group element, canonically represented by its action on the simple
// roots (word-independent).  Composition convention: (u*v)(x) = u(v(x)), so in
// a word s_{i1}...s_{im} the rightmost letter acts first.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simpleReflection(const RootSystem& rs, int i);  // i in 1..n
  static WeylElement fromWord(const RootSystem& rs, const std::vector<int>& letters);

  int rank() const { return static_cast<int>(rootMat_.size()); }

  // Column j (0-based) is the image of alpha_{j+1} in simple-root coordinates.
  const std::vector<std::vector<long long>>& rootMatrix() const { return rootMat_; }

  RootVec actRoot(const RootVec& r) const;
  Weight actWeight(const Weight& w) const;
  Weight dot(const Weight& w) const;  // w(lambda + rho) - rho

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  bool operator==(const WeylElement& other) const { return rootMat_ == other.rootMat_; }
  bool isIdentity() const;

  InvSet inversionSet(const RootSystem& rs) const;
  int length(const RootSystem& rs) const;

  // Lexicographically least reduced word (letters in 1..n).
  std::vector<int> minWord(const RootSystem& rs) const;
  std::string wordString(const RootSystem& rs) const;  // e.g. "s1*s2*s1", "e"

  size_t hashValue() const;

 private:
  std::vector<std::vector<long long>> rootMat_;    // root coords action
  std::vector<std::vector<long long>> weightMat_;  // fundamental coords action
  friend class WeylGroup;
};

struct WeylElementHash {
  size_t operator()(const WeylElement& w) const { return w.hashValue(); }
};

// Positive roots in the inversion set of w: {alpha > 0 : w(alpha) < 0}.
std::vector<int> inversionList(const RootSystem& rs, const WeylElement& w);

// The unique shortest element of w W_I, I a set of simple-root indices (1..n);
// its inversion set avoids all positive roots of the standard parabolic on I.
WeylElement minimalCosetRep(const RootSystem& rs, const WeylElement& w,
                            const std::vector<int>& simpleIdx);

// Bruhat order via the recursive descent rule (no enumeration needed).
bool bruhatLeq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);

WeylElement longestElement(const RootSystem& rs);

// Parse "s1*s2*s1", "121" or "e" into letters.
std::vector<int> parseWord(const std::string& text, int rank);

// Fully enumerated Weyl group with index-based tables; built breadth-first
// from the identity, so indices are stable for a given system.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootSystem& rs, size_t cap = 50000);

  const RootSystem& rootSystem() const { return *rs_; }
  size_t size() const { return elems_.size(); }
  const WeylElement& element(int idx) const { return elems_[static_cast<size_t>(idx)]; }
  int indexOf(const WeylElement& w) const;

  int identityIdx() const { return 0; }
  int longestIdx() const { return w0_; }
  int length(int idx) const { return lengths_[static_cast<size_t>(idx)]; }
  const InvSet& inversions(int idx) const { return invs_[static_cast<size_t>(idx)]; }
  int inverseIdx(int idx) const { return inverse_[static_cast<size_t>(idx)]; }
  int rightMult(int idx, int letter) const {  // letter in 1..n
    return right_[static_cast<size_t>(idx)][static_cast<size_t>(letter - 1)];
  }
  int compose(int a, int b) const;  // index of element(a)*element(b)
  const std::vector<int>& minWord(int idx) const { return words_[static_cast<size_t>(idx)]; }

  // Element with the given inversion set, -1 if none.
  int elementWithInversions(const InvSet& s) const;

  bool bruhatLeqIdx(int u, int w) const;

  std::vector<int> elementsOfLength(int l) const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<WeylElement> elems_;
  std::vector<int> lengths_;
  std::vector<InvSet> invs_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<size_t, std::vector<int>> hashToIdx_;
  std::unordered_map<InvSet, int> invToIdx_;
  int w0_ = 0;
};

}  // namespace weylcup
