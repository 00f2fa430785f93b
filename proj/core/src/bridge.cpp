#include "ybe/bridge.hpp"

#include <algorithm>

namespace ybe {

solution solution_of_brace(const brace& b) {
  const int n = b.size();
  std::vector<std::vector<int>> sigma(n, std::vector<int>(n)), tau(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      int u = b.lambda(a, c);
      sigma[a][c] = u;
      int ab = b.mul(a, c);
      int conj = b.add(b.add(b.neg(ab), a), ab);  // -(a o c) + a + (a o c)
      tau[c][a] = b.lambda_inv(u, conj);
    }
  return solution::validate(std::move(sigma), std::move(tau), b.additive_abelian());
}

namespace {

bool in_transitive_cycle_base(const brace& b, int x) {
  for (const auto& base : transitive_cycle_bases(b))
    if (std::binary_search(base.begin(), base.end(), x)) return true;
  return false;
}

}  // namespace

solution bachiller_solution(const brace& b, int x) {
  if (!b.additive_abelian())
    fail(errc::bad_parameters, "construction requires an abelian additive group");
  if (x < 0 || x >= b.size()) fail(errc::bad_parameters, "element out of range", {x});
  if (!in_transitive_cycle_base(b, x))
    fail(errc::not_in_transitive_cycle_base,
         "element does not lie in a transitive cycle base", {x});
  const int n = b.size();
  std::vector<std::vector<int>> sigma(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    int lax = b.lambda(a, x);
    for (int c = 0; c < n; ++c) sigma[a][c] = b.mul(lax, c);
  }
  return solution::validate(std::move(sigma), std::nullopt, true);
}

namespace {

bool is_brace_automorphism(const brace& b, const perm& psi) {
  if (static_cast<int>(psi.size()) != b.size() || !is_permutation(psi)) return false;
  for (int u = 0; u < b.size(); ++u)
    for (int v = 0; v < b.size(); ++v) {
      if (psi[b.add(u, v)] != b.add(psi[u], psi[v])) return false;
      if (psi[b.mul(u, v)] != b.mul(psi[u], psi[v])) return false;
    }
  return true;
}

bool is_solution_homomorphism(const solution& s, const solution& t, const perm& f) {
  for (int u = 0; u < s.size(); ++u)
    for (int v = 0; v < s.size(); ++v) {
      if (f[s.sigma(u, v)] != t.sigma(f[u], f[v])) return false;
      if (f[s.tau(u, v)] != t.tau(f[u], f[v])) return false;
    }
  return true;
}

}  // namespace

perm bachiller_isomorphism(const brace& b, int x, int y, int z, const perm& psi) {
  if (!is_brace_automorphism(b, psi))
    fail(errc::condition_violated, "psi is not a brace automorphism");
  if (psi[x] != b.lambda(z, y))
    fail(errc::condition_violated, "psi(x) != lambda_z(y)", {x, y, z});
  perm f(b.size());
  for (int a = 0; a < b.size(); ++a) f[a] = b.mul(psi[a], z);
  solution sx = bachiller_solution(b, x);
  solution sy = bachiller_solution(b, y);
  if (!is_solution_homomorphism(sx, sy, f))
    fail(errc::condition_violated, "constructed map is not a solution isomorphism");
  return f;
}

std::vector<perm> bachiller_isomorphisms(const brace& b, int x, int y) {
  std::vector<perm> out;
  for (const auto& psi : all_brace_automorphisms(b))
    for (int z = 0; z < b.size(); ++z) {
      if (psi[x] != b.lambda(z, y)) continue;
      perm f(b.size());
      for (int a = 0; a < b.size(); ++a) f[a] = b.mul(psi[a], z);
      out.push_back(std::move(f));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

solution restrict_to_cycle_base(const brace& b, const std::vector<int>& base) {
  std::vector<int> sorted = base;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<char> in(b.size(), 0);
  for (int x : sorted) in[x] = 1;
  for (const auto& blk : theta_orbits(b)) {
    bool any = false, all = true;
    for (int x : blk) {
      if (in[x]) any = true;
      else all = false;
    }
    if (any && !all)
      fail(errc::not_a_cycle_base, "set is not a union of theta-orbits");
  }
  {
    std::vector<char> seen(b.size(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (int x : sorted)
      if (!seen[x]) {
        seen[x] = 1;
        queue.push_back(x);
      }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (!seen[b.neg(u)]) {
        seen[b.neg(u)] = 1;
        queue.push_back(b.neg(u));
      }
      for (size_t vj = 0; vj <= qi; ++vj)
        for (int w : {b.add(u, queue[vj]), b.add(queue[vj], u)})
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
    }
    if (queue.size() != static_cast<size_t>(b.size()))
      fail(errc::not_a_cycle_base, "set does not generate the additive group");
  }

  solution full = solution_of_brace(b);
  const int m = static_cast<int>(sorted.size());
  std::vector<int> pos(b.size(), -1);
  for (int i = 0; i < m; ++i) pos[sorted[i]] = i;
  std::vector<std::vector<int>> sigma(m, std::vector<int>(m)), tau(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int si = full.sigma(sorted[i], sorted[j]);
      int ti = full.tau(sorted[i], sorted[j]);
      if (pos[si] == -1 || pos[ti] == -1)
        fail(errc::not_a_cycle_base, "restriction is not closed under r");
      sigma[i][j] = pos[si];
      tau[i][j] = pos[ti];
    }
  return solution::validate(std::move(sigma), std::move(tau), full.involutive());
}

}  // namespace ybe
