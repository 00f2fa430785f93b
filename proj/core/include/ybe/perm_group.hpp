#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ybe/groups.hpp"
#include "ybe/perm.hpp"
#include "ybe/solution.hpp"

namespace ybe {

using perm_pair = std::pair<perm, perm>;

/// The permutation group G(X,r) = <(sigma_x, tau_x^{-1}) | x in X>, stored as
/// the full element set (pairs composed componentwise). The group acts on X
/// through first components.
class perm_group {
public:
  static constexpr std::size_t default_cap = 1000000;

  static perm_group of_solution(const solution& s, std::size_t cap = default_cap);
  static perm_group closure(std::vector<perm_pair> generators, int degree,
                            std::size_t cap = default_cap);

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<perm_pair>& elements() const { return elements_; }  // sorted, identity first
  const std::vector<perm_pair>& generators() const { return generators_; }

  bool abelian() const;
  bool transitive() const;
  bool regular() const;  // transitive with order == degree

  /// Cayley table on the sorted element list; identity lands at index 0.
  cayley_table to_cayley(std::size_t table_cap = 4096) const;

private:
  int degree_ = 0;
  std::vector<perm_pair> generators_;
  std::vector<perm_pair> elements_;
};

/// Number of invariant factors of an abelian permutation group; throws
/// NotAbelian otherwise.
int min_generators_abelian(const perm_group& g);

}  // namespace ybe
