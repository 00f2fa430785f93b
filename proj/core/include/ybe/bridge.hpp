#pragma once

#include <vector>

#include "ybe/brace.hpp"
#include "ybe/perm.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// The solution (A, r_A) with r_A(a,b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}
/// (-(a o b) + a + (a o b))); involutive exactly when (A,+) is abelian.
solution solution_of_brace(const brace& b);

/// The indecomposable involutive solution (A, r_x) with sigma_a(b) =
/// lambda_a(x) o b, for x an element of a transitive cycle base of a brace
/// with abelian additive group.
solution bachiller_solution(const brace& b, int x);

/// The isomorphism a -> psi(a) o z from (A,r_x) to (A,r_y), given a brace
/// automorphism psi with psi(x) = lambda_z(y); both conditions are verified.
perm bachiller_isomorphism(const brace& b, int x, int y, int z, const perm& psi);

/// All isomorphisms (A,r_x) -> (A,r_y), enumerated over pairs (z, psi).
std::vector<perm> bachiller_isomorphisms(const brace& b, int x, int y);

/// Restriction of (A, r_A) to a cycle base X (a union of theta-orbits
/// generating (A,+)), re-indexed along sorted X.
solution restrict_to_cycle_base(const brace& b, const std::vector<int>& base);

}  // namespace ybe
