#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weylcup/errors.hpp"

namespace weylcup {

// Integral weight in fundamental-weight coordinates.
struct Weight {
  std::vector<long long> c;

  Weight() = default;
  explicit Weight(std::vector<long long> coords) : c(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<long long>(rank, 0)); }

  int rank() const { return static_cast<int>(c.size()); }
  long long operator[](int i) const { return c[static_cast<size_t>(i)]; }
  long long& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool dominant() const {
    for (long long x : c)
      if (x < 0) return false;
    return true;
  }
  bool strictlyDominant() const {
    for (long long x : c)
      if (x <= 0) return false;
    return true;
  }
  bool isZero() const {
    for (long long x : c)
      if (x != 0) return false;
    return true;
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend Weight operator-(const Weight& a) {
    Weight r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Weight operator*(long long m, const Weight& a) {
    Weight r = a;
    for (auto& x : r.c) x *= m;
    return r;
  }

  auto operator<=>(const Weight&) const = default;

  std::string str() const;
};

// "[a,b,...]" with integer entries.
Weight parseWeight(const std::string& text);

struct WeightHash {
  size_t operator()(const Weight& w) const {
    size_t h = 0xcbf29ce484222325ull;
    for (long long x : w.c) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace weylcup
