#include "ybe/solution.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ybe {

namespace {

void check_table(const std::vector<std::vector<int>>& t, int n, const char* name) {
  if (static_cast<int>(t.size()) != n)
    fail(errc::bad_parameters, std::string(name) + " must have n rows");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(t[x].size()) != n)
      fail(errc::bad_parameters, std::string(name) + " row has wrong length", {x});
    for (int y = 0; y < n; ++y)
      if (t[x][y] < 0 || t[x][y] >= n)
        fail(errc::out_of_range_entry,
             std::string(name) + " entry out of range at (" + std::to_string(x) + "," +
                 std::to_string(y) + ")",
             {x, y, t[x][y]});
  }
  for (int x = 0; x < n; ++x)
    if (!is_permutation(t[x]))
      fail(errc::non_bijective_row, std::string(name) + " row " + std::to_string(x) +
                                        " is not a bijection",
           {x});
}

struct triple {
  int a, b, c;
};

}  // namespace

solution solution::validate(std::vector<std::vector<int>> sigma,
                            std::optional<std::vector<std::vector<int>>> tau,
                            bool involutive_expected) {
  const int n = static_cast<int>(sigma.size());
  if (n == 0) fail(errc::bad_parameters, "carrier must be nonempty");
  check_table(sigma, n, "sigma");

  std::vector<std::vector<int>> sigma_inv(n);
  for (int x = 0; x < n; ++x) sigma_inv[x] = inverse(sigma[x]);

  if (!tau) {
    if (!involutive_expected)
      fail(errc::bad_parameters, "tau may be omitted only for involutive input");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t[y][x] = sigma_inv[sigma[x][y]][x];
    tau = std::move(t);
  }
  check_table(*tau, n, "tau");

  solution s;
  s.n_ = n;
  s.sigma_ = std::move(sigma);
  s.tau_ = std::move(*tau);
  s.sigma_inv_ = std::move(sigma_inv);
  s.tau_inv_.resize(n);
  for (int x = 0; x < n; ++x) s.tau_inv_[x] = inverse(s.tau_[x]);

  auto r = [&s](triple t, bool low) -> triple {
    // low: r x id, else id x r
    if (low) {
      auto [a, b] = s.apply_r(t.a, t.b);
      return {a, b, t.c};
    }
    auto [b, c] = s.apply_r(t.b, t.c);
    return {t.a, b, c};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        triple t{x, y, z};
        triple lhs = r(r(r(t, true), false), true);
        triple rhs = r(r(r(t, false), true), false);
        if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.c != rhs.c)
          fail(errc::braid_failure,
               "braid identity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                   std::to_string(z) + ")",
               {x, y, z});
      }

  bool invol = true;
  for (int x = 0; x < n && invol; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.apply_r(x, y);
      auto [a, b] = s.apply_r(u, v);
      if (a != x || b != y) {
        if (involutive_expected)
          fail(errc::not_involutive, "r*r is not the identity at (" + std::to_string(x) + "," +
                                         std::to_string(y) + ")",
               {x, y});
        invol = false;
        break;
      }
    }
  s.involutive_ = invol;
  return s;
}

namespace {

struct dsu {
  std::vector<int> parent;
  explicit dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

orbit_partition blocks_from_dsu(dsu& d, int n) {
  orbit_partition p;
  p.block_of.assign(n, -1);
  std::map<int, int> root_to_block;
  for (int x = 0; x < n; ++x) {
    int r = d.find(x);
    auto it = root_to_block.find(r);
    if (it == root_to_block.end()) {
      it = root_to_block.emplace(r, static_cast<int>(p.blocks.size())).first;
      p.blocks.emplace_back();
    }
    p.block_of[x] = it->second;
    p.blocks[it->second].push_back(x);
  }
  return p;
}

}  // namespace

orbit_partition orbits(const solution& s) {
  const int n = s.size();
  dsu d(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      d.unite(y, s.sigma(x, y));
      d.unite(y, s.tau(x, y));
    }
  return blocks_from_dsu(d, n);
}

bool is_indecomposable(const solution& s) { return orbits(s).blocks.size() == 1; }

retraction retract(const solution& s) {
  const int n = s.size();
  std::vector<int> class_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    for (int c = 0; c < static_cast<int>(reps.size()); ++c) {
      if (s.sigma_row(x) == s.sigma_row(reps[c]) && s.tau_row(x) == s.tau_row(reps[c])) {
        class_of[x] = c;
        break;
      }
    }
    if (class_of[x] == -1) {
      class_of[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> qs(m, std::vector<int>(m)), qt(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      qs[a][b] = class_of[s.sigma(reps[a], reps[b])];
      qt[a][b] = class_of[s.tau(reps[a], reps[b])];
    }
  retraction res{solution::validate(std::move(qs), std::move(qt), s.involutive()),
                 std::move(class_of)};
  return res;
}

bool is_trivial_solution(const solution& s) {
  for (int x = 0; x < s.size(); ++x)
    if (!is_identity(s.sigma_row(x)) || !is_identity(s.tau_row(x))) return false;
  return true;
}

bool is_square_free(const solution& s) {
  for (int x = 0; x < s.size(); ++x)
    if (s.sigma(x, x) != x || s.tau(x, x) != x) return false;
  return true;
}

bool satisfies_condition_star(const solution& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x) {
    bool sig = false, tav = false;
    for (int y = 0; y < n; ++y) {
      sig = sig || s.sigma(y, x) == x;
      tav = tav || s.tau(y, x) == x;
    }
    if (!sig || !tav) return false;
  }
  return true;
}

std::optional<int> mpl(const solution& s) {
  solution cur = s;
  int steps = 0;
  while (cur.size() > 1) {
    retraction r = retract(cur);
    if (r.quotient.size() == cur.size()) return std::nullopt;
    cur = std::move(r.quotient);
    ++steps;
  }
  return steps;
}

std::optional<int> mpl_prime(const solution& s) {
  solution cur = s;
  int steps = 0;
  while (!is_trivial_solution(cur)) {
    retraction r = retract(cur);
    if (r.quotient.size() == cur.size()) return std::nullopt;
    cur = std::move(r.quotient);
    ++steps;
  }
  return steps;
}

std::vector<int> retraction_sizes(const solution& s) {
  std::vector<int> sizes{s.size()};
  solution cur = s;
  while (cur.size() > 1) {
    retraction r = retract(cur);
    if (r.quotient.size() == cur.size()) break;
    cur = std::move(r.quotient);
    sizes.push_back(cur.size());
  }
  return sizes;
}

std::optional<std::vector<long long>> solution_type(const solution& s) {
  std::vector<int> sizes = retraction_sizes(s);
  if (sizes.back() != 1) return std::nullopt;
  std::vector<long long> type;
  for (size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i - 1] % sizes[i] != 0) return std::nullopt;
    type.push_back(sizes[i - 1] / sizes[i]);
  }
  return type;
}

solution relabel(const solution& s, const perm& f) {
  const int n = s.size();
  if (static_cast<int>(f.size()) != n || !is_permutation(f))
    fail(errc::bad_parameters, "relabel needs a permutation of the carrier");
  std::vector<std::vector<int>> sig(n, std::vector<int>(n)), tau(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      sig[f[x]][f[y]] = f[s.sigma(x, y)];
      tau[f[x]][f[y]] = f[s.tau(x, y)];
    }
  return solution::validate(std::move(sig), std::move(tau), s.involutive());
}

}  // namespace ybe
