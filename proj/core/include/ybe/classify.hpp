#pragma once

#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"
#include "ybe/truncated_ring.hpp"

namespace ybe {

struct solution_class {
  class_matrix matrix;   // lexicographically least matrix of the orbit
  long long orbit_size;
  brace permutation_brace;
  int generator;         // index of x + I_M in the brace
  solution representative;
};

/// One representative per orbit of the normal-form matrices under the ring
/// automorphisms, each materialized as a quotient brace and its solution.
std::vector<solution_class> enumerate_classes(const type_signature& t,
                                              long long space_cap = 1000000);

/// Closed-form class count: 1 for n=1, p^{d_2} for n=2, the two-branch
/// formula for n=3. Unsupported beyond (enumeration still works there).
long long count_formula(const type_signature& t);

/// Sum of count_formula over all signatures of the given total with `bound`
/// exponents (trailing zeros fold lower levels in).
long long count_size_mpl_le(long long p, int total_d, int bound);

/// Independent oracle: every involutive non-degenerate solution of size n up
/// to isomorphism, filtered to the indecomposable ones with abelian
/// permutation group. Row-by-row backtracking over sigma tables with partial
/// braid/involutivity pruning; no part of the matrix machinery is used.
std::vector<solution> oracle_bruteforce_classes(int n, int carrier_cap = 6);

}  // namespace ybe
