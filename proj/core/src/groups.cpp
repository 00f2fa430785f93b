#include "ybe/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ybe/errors.hpp"

namespace ybe {

const char* errc_name(errc c) {
  switch (c) {
    case errc::out_of_range_entry: return "OutOfRangeEntry";
    case errc::non_bijective_row: return "NonBijectiveRow";
    case errc::braid_failure: return "BraidFailure";
    case errc::not_involutive: return "NotInvolutive";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::not_abelian: return "NotAbelian";
    case errc::carrier_too_large: return "CarrierTooLarge";
    case errc::not_a_group: return "NotAGroup";
    case errc::brace_axiom_failure: return "BraceAxiomFailure";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::bad_parameters: return "BadParameters";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::modulus_mismatch: return "ModulusMismatch";
    case errc::matrix_not_in_normal_form: return "MatrixNotInNormalForm";
    case errc::wrong_type: return "WrongType";
    case errc::bad_automorphism_seed: return "BadAutomorphismSeed";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::not_in_transitive_cycle_base: return "NotInTransitiveCycleBase";
    case errc::condition_violated: return "ConditionViolated";
    case errc::not_a_cycle_base: return "NotACycleBase";
    case errc::unsupported: return "Unsupported";
  }
  return "UnknownError";
}

long long element_order(const cayley_table& g, int a) {
  long long k = 1;
  int x = a;
  while (x != 0) {
    x = g.t[x][a];
    ++k;
  }
  return k;
}

bool is_abelian(const cayley_table& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.t[a][b] != g.t[b][a]) return false;
  return true;
}

namespace {

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

std::vector<long long> abelian_invariant_factors(const cayley_table& g) {
  if (!is_abelian(g)) fail(errc::not_abelian, "group is not abelian");
  if (g.n <= 1) return {};

  std::vector<long long> ord(g.n);
  for (int a = 0; a < g.n; ++a) ord[a] = element_order(g, a);

  // Per prime p: s_k = log_p #{a : ord(a) | p^k} equals sum_j min(k, e_j)
  // over the cyclic factors p^{e_j}; the conjugate partition recovers the e_j.
  std::vector<std::vector<int>> exps_per_prime;
  for (long long p : prime_factors(g.n)) {
    std::vector<int> s{0};
    for (int k = 1;; ++k) {
      long long pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      long long count = 0;
      for (int a = 0; a < g.n; ++a)
        if (pk % ord[a] == 0) ++count;
      int sk = 0;
      long long c = count;
      while (c % p == 0) {
        c /= p;
        ++sk;
      }
      if (c != 1) fail(errc::not_abelian, "inconsistent p-subgroup count");
      s.push_back(sk);
      if (k > 1 && s[k] == s[k - 1]) break;
    }
    std::vector<int> t;  // t[k] = #factors with exponent >= k+1
    for (size_t k = 1; k < s.size(); ++k) t.push_back(s[k] - s[k - 1]);
    std::vector<int> exps;
    for (size_t k = 0; k < t.size(); ++k) {
      int next = (k + 1 < t.size()) ? t[k + 1] : 0;
      for (int i = 0; i < t[k] - next; ++i) exps.push_back(static_cast<int>(k) + 1);
    }
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    exps_per_prime.push_back(exps);
  }

  size_t rank = 0;
  for (const auto& e : exps_per_prime) rank = std::max(rank, e.size());
  std::vector<long long> factors(rank, 1);
  auto primes = prime_factors(g.n);
  for (size_t pi = 0; pi < primes.size(); ++pi) {
    for (size_t m = 0; m < exps_per_prime[pi].size(); ++m) {
      long long q = 1;
      for (int i = 0; i < exps_per_prime[pi][m]; ++i) q *= primes[pi];
      factors[m] *= q;
    }
  }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility
  return factors;
}

namespace {

// Backtracking isomorphism search over one or more shared-carrier operation
// tables. The partial map is grown by congruence propagation: whenever f is
// known on u and v, f(u op v) is forced.
struct table_iso_search {
  const std::vector<cayley_table>& ops1;
  const std::vector<cayley_table>& ops2;
  int n;
  bool all_mode = false;
  std::vector<std::vector<int>> found;
  std::vector<int> f, finv;
  std::vector<int> trail;
  std::vector<std::vector<long long>> sig1, sig2;  // per-element order tuples
  std::vector<int> gens;
  bool done = false;

  table_iso_search(const std::vector<cayley_table>& a, const std::vector<cayley_table>& b)
      : ops1(a), ops2(b), n(a.empty() ? 0 : a[0].n) {
    f.assign(n, -1);
    finv.assign(n, -1);
    sig1 = signatures(ops1);
    sig2 = signatures(ops2);
    gens = generating_set();
  }

  static std::vector<std::vector<long long>> signatures(const std::vector<cayley_table>& ops) {
    int n = ops[0].n;
    std::vector<std::vector<long long>> sig(n);
    for (int a = 0; a < n; ++a)
      for (const auto& g : ops) sig[a].push_back(element_order(g, a));
    return sig;
  }

  std::vector<int> generating_set() const {
    std::vector<char> closed(n, 0);
    closed[0] = 1;
    int count = 1;
    std::vector<int> gs;
    while (count < n) {
      int g = 0;
      while (closed[g]) ++g;
      gs.push_back(g);
      // close under every operation
      closed[g] = 1;
      ++count;
      bool grew = true;
      while (grew) {
        grew = false;
        for (int u = 0; u < n; ++u) {
          if (!closed[u]) continue;
          for (int v = 0; v < n; ++v) {
            if (!closed[v]) continue;
            for (const auto& op : ops1) {
              int w = op.t[u][v];
              if (!closed[w]) {
                closed[w] = 1;
                ++count;
                grew = true;
              }
            }
          }
        }
      }
    }
    return gs;
  }

  bool assign(int x, int y) {
    if (f[x] != -1) return f[x] == y;
    if (finv[y] != -1) return false;
    if (sig1[x] != sig2[y]) return false;
    f[x] = y;
    finv[y] = x;
    trail.push_back(x);
    return true;
  }

  bool propagate(size_t from) {
    for (size_t qi = from; qi < trail.size(); ++qi) {
      int u = trail[qi];
      for (size_t vj = 0; vj < trail.size(); ++vj) {
        int v = trail[vj];
        for (size_t k = 0; k < ops1.size(); ++k) {
          if (!assign(ops1[k].t[u][v], ops2[k].t[f[u]][f[v]])) return false;
          if (!assign(ops1[k].t[v][u], ops2[k].t[f[v]][f[u]])) return false;
        }
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      finv[f[x]] = -1;
      f[x] = -1;
    }
  }

  bool full_check() const {
    for (int u = 0; u < n; ++u)
      if (f[u] == -1) return false;
    for (size_t k = 0; k < ops1.size(); ++k)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (f[ops1[k].t[u][v]] != ops2[k].t[f[u]][f[v]]) return false;
    return true;
  }

  void search(size_t gi) {
    if (done) return;
    if (gi == gens.size()) {
      if (full_check()) {
        found.push_back(f);
        if (!all_mode) done = true;
      }
      return;
    }
    int g = gens[gi];
    if (f[g] != -1) {
      search(gi + 1);
      return;
    }
    for (int y = 0; y < n && !done; ++y) {
      if (finv[y] != -1 || sig1[g] != sig2[y]) continue;
      size_t mark = trail.size();
      if (assign(g, y) && propagate(mark)) search(gi + 1);
      undo(mark);
    }
  }

  void run() {
    if (n == 0) return;
    size_t mark = trail.size();
    if (assign(0, 0) && propagate(mark)) search(0);
  }
};

}  // namespace

std::optional<std::vector<int>> table_iso(const std::vector<cayley_table>& ops1,
                                          const std::vector<cayley_table>& ops2) {
  if (ops1.size() != ops2.size() || ops1.empty())
    fail(errc::bad_parameters, "table_iso needs matching nonempty op lists");
  if (ops1[0].n != ops2[0].n) return std::nullopt;
  if (ops1[0].n == 0) return std::vector<int>{};
  table_iso_search s(ops1, ops2);
  s.run();
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

std::vector<std::vector<int>> all_table_automorphisms(const std::vector<cayley_table>& ops) {
  if (ops.empty() || ops[0].n == 0) fail(errc::bad_parameters, "empty op list");
  table_iso_search s(ops, ops);
  s.all_mode = true;
  s.run();
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

std::optional<std::vector<int>> group_iso(const cayley_table& g, const cayley_table& h) {
  return table_iso({g}, {h});
}

}  // namespace ybe
