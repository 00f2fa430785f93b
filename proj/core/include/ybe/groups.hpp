#pragma once

#include <optional>
#include <vector>

#include "ybe/errors.hpp"

namespace ybe {

/// Multiplication table of a finite group on {0..n-1} with identity 0.
struct cayley_table {
  int n = 0;
  std::vector<std::vector<int>> t;

  int op(int a, int b) const { return t[a][b]; }
};

long long element_order(const cayley_table& g, int a);
bool is_abelian(const cayley_table& g);

/// Invariant factors d_1 | d_2 | ... | d_k of a finite abelian group,
/// ascending divisibility, empty for the trivial group. The number of
/// factors is the minimal size of a generating set.
std::vector<long long> abelian_invariant_factors(const cayley_table& g);

/// Isomorphism of algebras given by one or more Cayley tables on the same
/// carrier (a map respecting every listed operation, fixing nothing but
/// what the tables force). ops1 and ops2 must have equal length.
std::optional<std::vector<int>> table_iso(const std::vector<cayley_table>& ops1,
                                          const std::vector<cayley_table>& ops2);

/// All self-isomorphisms respecting every listed operation.
std::vector<std::vector<int>> all_table_automorphisms(const std::vector<cayley_table>& ops);

std::optional<std::vector<int>> group_iso(const cayley_table& g, const cayley_table& h);

}  // namespace ybe
