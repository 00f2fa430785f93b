#include "ybe/classify.hpp"

#include <algorithm>

#include "ybe/bridge.hpp"
#include "ybe/solution_maps.hpp"

namespace ybe {

std::vector<solution_class> enumerate_classes(const type_signature& t, long long space_cap) {
  std::vector<class_matrix> ms = matrices_for_type(t);
  std::vector<std::vector<int>> orbits = matrix_orbits(t, space_cap);
  std::vector<solution_class> out;
  out.reserve(orbits.size());
  for (const auto& orbit : orbits) {
    const class_matrix& m = ms[orbit.front()];
    matrix_brace mb = brace_of_matrix(m, t);
    solution s = bachiller_solution(mb.b, mb.x_index);
    out.push_back({m, static_cast<long long>(orbit.size()), std::move(mb.b), mb.x_index,
                   std::move(s)});
  }
  return out;
}

namespace {

long long ipow(long long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace

long long count_formula(const type_signature& t) {
  const long long p = t.p;
  switch (t.n()) {
    case 1:
      return 1;
    case 2:
      return ipow(p, t.d[1]);
    case 3: {
      int d1 = t.d[0], d2 = t.d[1], d3 = t.d[2];
      if (d1 >= d2 + d3) return ipow(p, d2 + d3);
      // p^{d1} (1 + (-d1+d2+d3)(1 - 1/p)), exact in integers
      long long k = -d1 + d2 + d3;
      return ipow(p, d1) + k * (ipow(p, d1) - ipow(p, d1 - 1));
    }
    default:
      fail(errc::unsupported, "closed class-count formulas exist only for n <= 3");
  }
}

long long count_size_mpl_le(long long p, int total_d, int bound) {
  if (bound != 2 && bound != 3) fail(errc::bad_parameters, "bound must be 2 or 3");
  long long sum = 0;
  std::vector<int> d(bound, 0);
  auto rec = [&](auto&& self, int pos, int remaining, int prev) -> void {
    if (pos == bound) {
      if (remaining == 0) sum += count_formula(type_signature::make(p, d));
      return;
    }
    for (int v = std::min(prev, remaining); v >= 0; --v) {
      d[pos] = v;
      self(self, pos + 1, remaining - v, v);
    }
  };
  rec(rec, 0, total_d, total_d);
  return sum;
}

namespace {

// Backtracking enumeration of involutive sigma tables. tau is determined by
// tau_y(x) = sigma^{-1}_{sigma_x(y)}(x); any evaluation touching a row not
// yet chosen is skipped until it becomes checkable.
struct oracle_search {
  int n;
  std::vector<perm> perms;      // all of S_n, lexicographic
  std::vector<perm> perms_inv;
  std::vector<int> row;         // chosen perm index per carrier point, -1 unset
  std::vector<solution> classes;

  explicit oracle_search(int n) : n(n), row(n, -1) {
    perm p = identity_perm(n);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto& q : perms) perms_inv.push_back(inverse(q));
  }

  int sigma(int x, int y) const { return row[x] < 0 ? -1 : perms[row[x]][y]; }

  // tau_y(x); -2 when not yet checkable
  int tau(int y, int x) const {
    int u = sigma(x, y);
    if (u < 0) return -2;
    if (row[u] < 0) return -2;
    return perms_inv[row[u]][x];
  }

  bool tau_rows_consistent() const {
    for (int y = 0; y < n; ++y) {
      unsigned seen = 0;
      for (int x = 0; x < n; ++x) {
        int v = tau(y, x);
        if (v < 0) continue;
        if (seen >> v & 1) return false;
        seen |= 1u << v;
      }
    }
    return true;
  }

  bool r_squared_consistent() const {
    for (int x = 0; x < n; ++x) {
      if (row[x] < 0) continue;
      for (int y = 0; y < n; ++y) {
        int u = sigma(x, y);
        int v = tau(y, x);
        if (v < 0) continue;
        if (sigma(u, v) >= 0 && sigma(u, v) != x) return false;
        int w = tau(v, u);
        if (w >= 0 && w != y) return false;
      }
    }
    return true;
  }

  // r applied to one strand pair; nullopt when some row is missing
  bool r_pair(int x, int y, int& a, int& b) const {
    a = sigma(x, y);
    if (a < 0) return false;
    b = tau(y, x);
    if (b < 0) return false;
    return true;
  }

  bool braid_consistent() const {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int a, bq, c, d, e, f;
          // lhs = r1 r2 r1
          if (!r_pair(x, y, a, bq)) continue;
          if (!r_pair(bq, z, c, d)) continue;
          if (!r_pair(a, c, e, f)) continue;
          int g, h, i, j, k, l;
          if (!r_pair(y, z, g, h)) continue;
          if (!r_pair(x, g, i, j)) continue;
          if (!r_pair(j, h, k, l)) continue;
          if (e != i || f != k || d != l) return false;
        }
    return true;
  }

  void emit() {
    std::vector<std::vector<int>> sig(n);
    for (int x = 0; x < n; ++x) sig[x] = perms[row[x]];
    solution s = solution::validate(std::move(sig), std::nullopt, true);
    if (!is_indecomposable(s)) return;
    // abelian permutation group iff the generator pairs commute
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (compose(s.sigma_row(x), s.sigma_row(y)) != compose(s.sigma_row(y), s.sigma_row(x)))
          return;
        if (compose(s.tau_row(x), s.tau_row(y)) != compose(s.tau_row(y), s.tau_row(x))) return;
      }
    for (const auto& rep : classes)
      if (isomorphic_solutions(rep, s)) return;
    classes.push_back(std::move(s));
  }

  void search(int x) {
    if (x == n) {
      emit();
      return;
    }
    for (size_t c = 0; c < perms.size(); ++c) {
      row[x] = static_cast<int>(c);
      if (tau_rows_consistent() && r_squared_consistent() && braid_consistent()) search(x + 1);
    }
    row[x] = -1;
  }
};

}  // namespace

std::vector<solution> oracle_bruteforce_classes(int n, int carrier_cap) {
  if (n < 1) fail(errc::bad_parameters, "carrier must be nonempty");
  if (n > carrier_cap)
    fail(errc::carrier_too_large,
         "oracle enumerates sigma tables; carrier exceeds cap " + std::to_string(carrier_cap));
  oracle_search search(n);
  search.search(0);
  return search.classes;
}

}  // namespace ybe
