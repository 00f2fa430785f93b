#pragma once

#include <optional>
#include <vector>

#include "ybe/errors.hpp"
#include "ybe/groups.hpp"

namespace ybe {

/// A finite skew (left) brace on {0..n-1}: two group tables sharing the
/// identity 0 and satisfying a o (b + c) = a o b - a + a o c. "Brace" means
/// the additive group is abelian; both cases are carried by this type.
class brace {
public:
  static brace validate(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul);

  int size() const { return n_; }
  int add(int a, int b) const { return add_[a][b]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int neg(int a) const { return neg_[a]; }      // additive inverse
  int inv(int a) const { return inv_[a]; }      // multiplicative inverse
  int lambda(int a, int b) const { return lam_[a][b]; }
  int lambda_inv(int a, int b) const { return lam_inv_[a][b]; }
  int star(int a, int b) const { return add_[lam_[a][b]][neg_[b]]; }  // -a + a o b - b
  int theta(int a, int b, int x) const { return add_[add_[a][lam_[b][x]]][neg_[a]]; }

  bool additive_abelian() const;
  bool multiplicative_abelian() const;

  const std::vector<std::vector<int>>& add_table() const { return add_; }
  const std::vector<std::vector<int>>& mul_table() const { return mul_; }
  cayley_table additive_group() const { return {n_, add_}; }
  cayley_table multiplicative_group() const { return {n_, mul_}; }

private:
  brace() = default;
  int n_ = 0;
  std::vector<std::vector<int>> add_, mul_, lam_, lam_inv_;
  std::vector<int> neg_, inv_;
};

/// A subset with its verified closure properties.
struct subset_handle {
  std::vector<int> elems;  // sorted
  bool add_subgroup = false;
  bool left_ideal = false;         // add-subgroup closed under all lambda_a
  bool strong_left_ideal = false;  // left ideal normal in (A,+)
  bool ideal = false;              // strong left ideal normal in (A,o)

  std::size_t size() const { return elems.size(); }
  bool contains(int x) const;
};

subset_handle make_subset(const brace& b, std::vector<int> elems);

/// Additive subgroup generated by {x*y : x in X, y in Y}.
subset_handle star_sets(const brace& b, const std::vector<int>& x, const std::vector<int>& y);

/// A^1 = A, A^{k+1} = A * A^k, until stable. Left nilpotent iff the last
/// term is {0}; likewise for the right series A^{(k+1)} = A^{(k)} * A.
std::vector<subset_handle> left_series(const brace& b);
std::vector<subset_handle> right_series(const brace& b);

subset_handle socle(const brace& b);  // {x : x o a = x + a = a + x for all a}

/// Soc_0 = 0, Soc_{k+1}/Soc_k = Soc(A/Soc_k); ascending until stable.
std::vector<subset_handle> socle_series(const brace& b);
std::optional<int> mpl_brace(const brace& b);

struct brace_quotient {
  brace q;
  std::vector<int> projection;  // carrier -> quotient carrier, class of 0 first
};
brace_quotient quotient_brace(const brace& b, const subset_handle& ideal);

/// Orbits of x -> a + lambda_b(x) - a over all a, b; blocks sorted by
/// smallest member.
std::vector<std::vector<int>> theta_orbits(const brace& b);

/// Unions of theta-orbits that generate (A,+); transitive ones are single
/// orbits. The orbit count is capped since unions are enumerated.
std::vector<std::vector<int>> cycle_bases(const brace& b, int orbit_cap = 20);
std::vector<std::vector<int>> transitive_cycle_bases(const brace& b);

subset_handle strong_left_ideal_generated(const brace& b, const std::vector<int>& x);
subset_handle subbrace_generated(const brace& b, const std::vector<int>& x);
subset_handle ideal_generated(const brace& b, const std::vector<int>& x);

/// Minimal cardinality of an ideal-generating subset, by increasing-size
/// exhaustive search.
int omega(const brace& b);

bool is_bi_skew(const brace& b);            // (A,o,+) is again a skew brace
bool is_lambda_homomorphic(const brace& b); // lambda is a +-homomorphism too

/// The commutator A' : ideal generated by A^2 and the commutator subgroup
/// of (A,+).
subset_handle brace_commutator(const brace& b);

std::optional<std::vector<int>> brace_iso(const brace& a, const brace& b);
std::vector<std::vector<int>> all_brace_automorphisms(const brace& b);
brace direct_product(const brace& a, const brace& b);

/// The brace on (Z/p)^n with lambda_{(a_1..a_n)} = phi^{a_n} for phi the
/// unipotent Jordan block, a o b = a + lambda_a(b). Requires 2 <= n < p.
brace jordan_block_fixture(long long p, int n);

}  // namespace ybe
