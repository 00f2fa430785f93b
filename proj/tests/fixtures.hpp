#pragma once

#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"
#include "ybe/truncated_ring.hpp"

namespace fixtures {

inline ybe::solution trivial_solution(int n) {
  std::vector<std::vector<int>> id(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) id[x][y] = y;
  return ybe::solution::validate(id, id, true);
}

/// sigma_x = +1 mod n, tau_x = -1 mod n.
inline ybe::solution cyclic_solution(int n) {
  std::vector<std::vector<int>> sig(n, std::vector<int>(n)), tau(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      sig[x][y] = (y + 1) % n;
      tau[x][y] = (y + n - 1) % n;
    }
  return ybe::solution::validate(sig, tau, true);
}

/// The four-point example with sigma = (2 3), (0 2 1 3), (0 3 1 2), (0 1):
/// indecomposable but not multipermutation.
inline ybe::solution example5_solution() {
  std::vector<std::vector<int>> sig = {
      {0, 1, 3, 2},
      {2, 3, 1, 0},
      {3, 2, 0, 1},
      {1, 0, 2, 3},
  };
  return ybe::solution::validate(sig, std::nullopt, true);
}

inline ybe::brace trivial_brace_cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return ybe::brace::validate(t, t);
}

inline ybe::brace trivial_brace_klein() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return ybe::brace::validate(t, t);
}

/// Trivial skew brace on S3; elements 0..5 = id, (01), (02), (12), (012), (021)
/// as permutations of {0,1,2}, composed left-to-right on the right action.
inline ybe::brace trivial_skew_brace_s3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                         {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto mul = [&](int a, int b) {
    std::vector<int> c(3);
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    for (int k = 0; k < 6; ++k)
      if (perms[k] == c) return k;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = mul(a, b);
  return ybe::brace::validate(t, t);
}

/// F_n/I_M quotient for the given signature, by index into the sorted
/// matrix family.
inline ybe::matrix_brace quotient_brace_fixture(long long p, std::vector<int> d, int index) {
  auto t = ybe::type_signature::make(p, std::move(d));
  auto ms = ybe::matrices_for_type(t);
  return ybe::brace_of_matrix(ms.at(index), t);
}

}  // namespace fixtures
