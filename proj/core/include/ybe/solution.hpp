#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ybe/errors.hpp"
#include "ybe/perm.hpp"

namespace ybe {

/// A finite non-degenerate set-theoretic solution on the carrier {0..n-1}.
/// r(x,y) = (sigma[x][y], tau[y][x]); every row of sigma and tau is a
/// bijection and the braid identity r1 r2 r1 = r2 r1 r2 holds on all triples.
class solution {
public:
  /// Checks non-degeneracy, the braid identity and (when requested or when
  /// tau is omitted) involutivity. With tau omitted the table is rebuilt
  /// from sigma via tau[y][x] = sigma^{-1}_{sigma[x][y]}(x).
  static solution validate(std::vector<std::vector<int>> sigma,
                           std::optional<std::vector<std::vector<int>>> tau,
                           bool involutive_expected);

  int size() const { return n_; }
  bool involutive() const { return involutive_; }

  int sigma(int x, int y) const { return sigma_[x][y]; }
  int tau(int x, int y) const { return tau_[x][y]; }
  int sigma_inv(int x, int y) const { return sigma_inv_[x][y]; }
  int tau_inv(int x, int y) const { return tau_inv_[x][y]; }
  const perm& sigma_row(int x) const { return sigma_[x]; }
  const perm& tau_row(int x) const { return tau_[x]; }
  const std::vector<std::vector<int>>& sigma_table() const { return sigma_; }
  const std::vector<std::vector<int>>& tau_table() const { return tau_; }

  std::pair<int, int> apply_r(int x, int y) const { return {sigma_[x][y], tau_[y][x]}; }

private:
  solution() = default;
  int n_ = 0;
  bool involutive_ = false;
  std::vector<std::vector<int>> sigma_, tau_, sigma_inv_, tau_inv_;
};

struct orbit_partition {
  std::vector<std::vector<int>> blocks;  // sorted by smallest member
  std::vector<int> block_of;
};

/// Finest partition of the carrier preserved by all sigma_x, tau_x and their
/// inverses (closure is symmetric, so inverses come for free).
orbit_partition orbits(const solution& s);
bool is_indecomposable(const solution& s);

struct retraction {
  solution quotient;
  std::vector<int> class_of;  // carrier -> quotient carrier
};

/// Quotient by x ~ y iff sigma_x = sigma_y and tau_x = tau_y.
retraction retract(const solution& s);

bool is_trivial_solution(const solution& s);  // r(x,y) = (y,x)
bool is_square_free(const solution& s);       // r(x,x) = (x,x)
bool satisfies_condition_star(const solution& s);

/// Number of retractions to a singleton; nullopt when the chain stabilizes
/// on a larger carrier (a size-preserving retraction is a relabelled
/// identity, so the fixed point is exact).
std::optional<int> mpl(const solution& s);

/// Number of retractions to a trivial solution of any size.
std::optional<int> mpl_prime(const solution& s);

/// Carrier sizes along the retraction chain, ending at 1 or at the first
/// size-preserving step.
std::vector<int> retraction_sizes(const solution& s);

/// Successive quotients |Ret^{i-1}|/|Ret^i|. Defined only for
/// multipermutation solutions whose chain divides evenly at every step
/// (always the case for indecomposable ones).
std::optional<std::vector<long long>> solution_type(const solution& s);

/// Conjugate both tables by f: sigma'_{f(x)}(f(y)) = f(sigma_x(y)).
solution relabel(const solution& s, const perm& f);

}  // namespace ybe
