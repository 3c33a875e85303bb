#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "opcat/error.hpp"

namespace opcat {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
inline int randInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Checks that v is a permutation of {0,...,n-1}.
inline bool isPermutation0(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int x : v) {
    if (x < 0 || x >= static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Checks that v (1-based values) is a permutation of {1,...,n}.
inline bool isPermutation1(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x - 1]) return false;
    seen[x - 1] = 1;
  }
  return true;
}

// inverse[p[i]] = i for a permutation of {0,...,n-1}.
inline std::vector<int> inversePermutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

// Enumerates all permutations of {0,...,n-1} through a callback.
template <typename F>
void forEachPermutation(int n, F&& fn) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

// Enumerates all functions {0..n-1} -> {0..m-1}.
template <typename F>
void forEachFunction(int n, int m, F&& fn) {
  if (m <= 0) {
    if (n == 0) {
      std::vector<int> empty;
      fn(empty);
    }
    return;
  }
  std::vector<int> f(n, 0);
  while (true) {
    fn(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
}

// Compact integer-list encoder used to build canonical keys.
class Encoder {
 public:
  Encoder& tag(char c) {
    out_.push_back(c);
    return *this;
  }
  Encoder& num(long long v) {
    out_ += std::to_string(v);
    out_.push_back(',');
    return *this;
  }
  Encoder& str(const std::string& s) {
    out_ += s;
    out_.push_back(';');
    return *this;
  }
  const std::string& key() const { return out_; }

 private:
  std::string out_;
};

// Joins items with a separator; for report text.
template <typename T>
std::string joinNums(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

// Number of weakly monotone maps from a chain of size s to a chain of size t.
// Independent counting oracle: dynamic programming over the last value.
inline long long countMonotoneMaps(int s, int t) {
  if (s == 0) return 1;
  if (t == 0) return 0;
  // dp[v] = number of monotone maps of the prefix ending at value v (1-based).
  std::vector<long long> dp(t, 1);
  for (int i = 1; i < s; ++i) {
    std::vector<long long> next(t, 0);
    long long acc = 0;
    for (int v = 0; v < t; ++v) {
      acc += dp[v];
      next[v] = acc;
    }
    dp = next;
  }
  long long total = 0;
  for (long long x : dp) total += x;
  return total;
}

// Thread budget for parallelizable checkers; reads OPCAT_THREADS, default 1.
int threadBudget();

}  // namespace opcat
