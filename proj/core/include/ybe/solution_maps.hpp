#pragma once

#include <optional>
#include <vector>

#include "ybe/perm.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// A bijection f with (f x f) r = r' (f x f), or nullopt. Backtracking with
/// forced propagation: once f is known on x and y, the images of sigma_x(y)
/// and tau_y(x) are forced, so one seed point decides everything on the
/// subsolution it generates (all of X in the indecomposable multipermutation
/// case).
std::optional<perm> isomorphic_solutions(const solution& s, const solution& t);

std::vector<perm> all_isomorphisms(const solution& s, const solution& t);

struct automorphism_info {
  std::vector<perm> elements;  // sorted, identity first
  bool abelian = false;
  std::optional<std::vector<long long>> invariant_factors;  // when abelian
};

automorphism_info automorphism_group(const solution& s);

/// All proper nonempty subsets Y with r(Y x Y) contained in Y x Y, as sorted
/// element lists in deterministic order. Enumerates subsets, so the carrier
/// is capped.
std::vector<std::vector<int>> proper_subsolutions(const solution& s, int carrier_cap = 20);

}  // namespace ybe
