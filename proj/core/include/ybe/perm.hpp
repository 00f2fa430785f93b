#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace ybe {

/// A permutation of {0..n-1}, stored as its image table.
using perm = std::vector<int>;

inline perm identity_perm(int n) {
  perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_permutation(const perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline bool is_identity(const perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

inline perm inverse(const perm& p) {
  perm q(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
  return q;
}

/// (f*g)(x) = f(g(x)), g applied first.
inline perm compose(const perm& f, const perm& g) {
  perm h(f.size());
  for (int i = 0; i < static_cast<int>(f.size()); ++i) h[i] = f[g[i]];
  return h;
}

/// Cycle lengths sorted descending; invariant under conjugation.
inline std::vector<int> cycle_type(const perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lens;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return lens;
}

}  // namespace ybe
