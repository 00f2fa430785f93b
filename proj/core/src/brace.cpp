#include "ybe/brace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ybe/perm.hpp"

namespace ybe {

namespace {

void check_group_table(const std::vector<std::vector<int>>& t, int n, const char* name) {
  if (static_cast<int>(t.size()) != n)
    fail(errc::bad_parameters, std::string(name) + " table must have n rows");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(t[a].size()) != n)
      fail(errc::bad_parameters, std::string(name) + " row has wrong length", {a});
    for (int b = 0; b < n; ++b)
      if (t[a][b] < 0 || t[a][b] >= n)
        fail(errc::out_of_range_entry, std::string(name) + " entry out of range", {a, b, t[a][b]});
  }
  for (int a = 0; a < n; ++a) {
    if (t[0][a] != a || t[a][0] != a)
      fail(errc::not_a_group, std::string(name) + ": 0 is not the identity", {a});
    if (!is_permutation(t[a]))
      fail(errc::not_a_group, std::string(name) + ": row " + std::to_string(a) +
                                  " is not a bijection",
           {a});
  }
  // columns bijective
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      if (seen[t[a][b]])
        fail(errc::not_a_group, std::string(name) + ": column " + std::to_string(b) +
                                    " is not a bijection",
             {b});
      seen[t[a][b]] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          fail(errc::not_a_group, std::string(name) + " is not associative", {a, b, c});
}

std::vector<int> inverses_of(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a][b] == 0) inv[a] = b;
  return inv;
}

}  // namespace

brace brace::validate(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul) {
  const int n = static_cast<int>(add.size());
  if (n == 0) fail(errc::bad_parameters, "carrier must be nonempty");
  check_group_table(add, n, "add");
  check_group_table(mul, n, "mul");

  brace b;
  b.n_ = n;
  b.add_ = std::move(add);
  b.mul_ = std::move(mul);
  b.neg_ = inverses_of(b.add_);
  b.inv_ = inverses_of(b.mul_);

  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int lhs = b.mul_[a][b.add_[x][y]];
        int rhs = b.add_[b.add_[b.mul_[a][x]][b.neg_[a]]][b.mul_[a][y]];
        if (lhs != rhs)
          fail(errc::brace_axiom_failure,
               "a o (b + c) = a o b - a + a o c fails at (" + std::to_string(a) + "," +
                   std::to_string(x) + "," + std::to_string(y) + ")",
               {a, x, y});
      }

  b.lam_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) b.lam_[a][x] = b.add_[b.neg_[a]][b.mul_[a][x]];
  for (int a = 0; a < n; ++a)
    if (!is_permutation(b.lam_[a]))
      fail(errc::brace_axiom_failure, "lambda_a is not a bijection", {a});
  b.lam_inv_.resize(n);
  for (int a = 0; a < n; ++a) b.lam_inv_[a] = inverse(b.lam_[a]);

  // lambda : (A,o) -> Aut(A,+); both parts follow from the axiom but are
  // part of the type's stated invariants.
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int x = 0; x < n; ++x) {
        if (b.lam_[b.mul_[a][c]][x] != b.lam_[a][b.lam_[c][x]])
          fail(errc::brace_axiom_failure, "lambda is not a o-homomorphism", {a, c, x});
        if (b.lam_[a][b.add_[c][x]] != b.add_[b.lam_[a][c]][b.lam_[a][x]])
          fail(errc::brace_axiom_failure, "lambda_a is not additive", {a, c, x});
      }
  return b;
}

bool brace::additive_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (add_[a][b] != add_[b][a]) return false;
  return true;
}

bool brace::multiplicative_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

bool subset_handle::contains(int x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

namespace {

std::vector<int> additive_closure(const brace& b, std::vector<int> seed) {
  std::vector<char> in(b.size(), 0);
  in[0] = 1;
  std::vector<int> members{0};
  std::vector<int> queue{0};
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  for (int x : seed) push(x);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    push(b.neg(u));
    for (size_t vj = 0; vj < queue.size() && vj <= qi; ++vj) {
      int v = queue[vj];
      push(b.add(u, v));
      push(b.add(v, u));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool closed_under_lambda(const brace& b, const std::vector<char>& in) {
  for (int a = 0; a < b.size(); ++a)
    for (int x = 0; x < b.size(); ++x)
      if (in[x] && !in[b.lambda(a, x)]) return false;
  return true;
}

bool normal_in(const std::vector<std::vector<int>>& table, const std::vector<int>& invs,
               const std::vector<char>& in) {
  const int n = static_cast<int>(table.size());
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      if (in[x] && !in[table[table[g][x]][invs[g]]]) return false;
  return true;
}

std::vector<char> membership(const brace& b, const std::vector<int>& elems) {
  std::vector<char> in(b.size(), 0);
  for (int x : elems) in[x] = 1;
  return in;
}

}  // namespace

subset_handle make_subset(const brace& b, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  subset_handle h;
  h.elems = std::move(elems);
  auto in = membership(b, h.elems);
  if (!in[0]) {
    h.add_subgroup = false;
    return h;
  }
  h.add_subgroup = true;
  for (int x : h.elems) {
    if (!in[b.neg(x)]) h.add_subgroup = false;
    for (int y : h.elems)
      if (!in[b.add(x, y)]) h.add_subgroup = false;
  }
  if (!h.add_subgroup) return h;
  h.left_ideal = closed_under_lambda(b, in);
  h.strong_left_ideal = h.left_ideal && normal_in(b.add_table(), [&] {
                          std::vector<int> negs(b.size());
                          for (int g = 0; g < b.size(); ++g) negs[g] = b.neg(g);
                          return negs;
                        }(), in);
  h.ideal = h.strong_left_ideal && normal_in(b.mul_table(), [&] {
              std::vector<int> invs(b.size());
              for (int g = 0; g < b.size(); ++g) invs[g] = b.inv(g);
              return invs;
            }(), in);
  return h;
}

subset_handle star_sets(const brace& b, const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> gens;
  for (int u : x)
    for (int v : y) gens.push_back(b.star(u, v));
  return make_subset(b, additive_closure(b, gens));
}

namespace {

std::vector<subset_handle> star_series(const brace& b, bool left) {
  std::vector<int> whole(b.size());
  std::iota(whole.begin(), whole.end(), 0);
  std::vector<subset_handle> chain{make_subset(b, whole)};
  for (;;) {
    const auto& prev = chain.back().elems;
    subset_handle next = left ? star_sets(b, whole, prev) : star_sets(b, prev, whole);
    if (next.elems == prev) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace

std::vector<subset_handle> left_series(const brace& b) { return star_series(b, true); }
std::vector<subset_handle> right_series(const brace& b) { return star_series(b, false); }

subset_handle socle(const brace& b) {
  std::vector<int> elems;
  for (int x = 0; x < b.size(); ++x) {
    bool in = true;
    for (int a = 0; a < b.size() && in; ++a)
      in = b.mul(x, a) == b.add(x, a) && b.add(x, a) == b.add(a, x);
    if (in) elems.push_back(x);
  }
  return make_subset(b, elems);
}

std::vector<subset_handle> socle_series(const brace& b) {
  std::vector<subset_handle> series{make_subset(b, {0})};
  for (;;) {
    const subset_handle& cur = series.back();
    if (cur.size() == static_cast<std::size_t>(b.size())) break;
    brace_quotient q = quotient_brace(b, cur);
    subset_handle soc_q = socle(q.q);
    std::vector<int> next;
    for (int x = 0; x < b.size(); ++x)
      if (soc_q.contains(q.projection[x])) next.push_back(x);
    if (next.size() == cur.size()) break;  // stabilized below A
    series.push_back(make_subset(b, next));
  }
  return series;
}

std::optional<int> mpl_brace(const brace& b) {
  auto series = socle_series(b);
  if (series.back().size() != static_cast<std::size_t>(b.size())) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

brace_quotient quotient_brace(const brace& b, const subset_handle& ideal) {
  if (!ideal.ideal) fail(errc::not_an_ideal, "quotient requires a verified ideal");
  const int n = b.size();
  std::vector<int> class_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] != -1) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int i : ideal.elems) class_of[b.add(x, i)] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> qadd(m, std::vector<int>(m)), qmul(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      qadd[a][c] = class_of[b.add(reps[a], reps[c])];
      qmul[a][c] = class_of[b.mul(reps[a], reps[c])];
    }
  return {brace::validate(std::move(qadd), std::move(qmul)), std::move(class_of)};
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

}  // namespace

std::vector<std::vector<int>> theta_orbits(const brace& b) {
  const int n = b.size();
  dsu d(n);
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < n; ++g)
      for (int x = 0; x < n; ++x) d.unite(x, b.theta(a, g, x));
  std::map<int, std::vector<int>> by_root;
  for (int x = 0; x < n; ++x) by_root[d.find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, members] : by_root) blocks.push_back(std::move(members));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

namespace {

bool generates_additively(const brace& b, const std::vector<int>& elems) {
  return additive_closure(b, elems).size() == static_cast<std::size_t>(b.size());
}

}  // namespace

std::vector<std::vector<int>> cycle_bases(const brace& b, int orbit_cap) {
  auto orb = theta_orbits(b);
  if (static_cast<int>(orb.size()) > orbit_cap)
    fail(errc::search_space_too_large,
         "too many theta-orbits to enumerate unions (" + std::to_string(orb.size()) + ")");
  std::vector<std::vector<int>> bases;
  const unsigned m = static_cast<unsigned>(orb.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> members;
    for (unsigned i = 0; i < m; ++i)
      if (mask >> i & 1) members.insert(members.end(), orb[i].begin(), orb[i].end());
    if (generates_additively(b, members)) {
      std::sort(members.begin(), members.end());
      bases.push_back(std::move(members));
    }
  }
  std::sort(bases.begin(), bases.end());
  return bases;
}

std::vector<std::vector<int>> transitive_cycle_bases(const brace& b) {
  std::vector<std::vector<int>> bases;
  for (auto& orbit : theta_orbits(b))
    if (generates_additively(b, orbit)) bases.push_back(orbit);
  return bases;
}

subset_handle strong_left_ideal_generated(const brace& b, const std::vector<int>& xs) {
  std::vector<int> gens;
  for (int x : xs)
    for (int a = 0; a < b.size(); ++a)
      for (int g = 0; g < b.size(); ++g) gens.push_back(b.theta(a, g, x));
  return make_subset(b, additive_closure(b, gens));
}

subset_handle subbrace_generated(const brace& b, const std::vector<int>& xs) {
  std::vector<char> in(b.size(), 0);
  in[0] = 1;
  std::vector<int> queue{0};
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  for (int x : xs) push(x);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    push(b.neg(u));
    push(b.inv(u));
    for (size_t vj = 0; vj <= qi; ++vj) {
      int v = queue[vj];
      push(b.add(u, v));
      push(b.add(v, u));
      push(b.mul(u, v));
      push(b.mul(v, u));
    }
  }
  std::vector<int> members;
  for (int x = 0; x < b.size(); ++x)
    if (in[x]) members.push_back(x);
  return make_subset(b, members);
}

subset_handle ideal_generated(const brace& b, const std::vector<int>& xs) {
  std::vector<int> cur = additive_closure(b, xs);
  for (;;) {
    // theta closure handles left-ideal and +-normal closure in one step
    std::vector<int> gens;
    for (int x : cur)
      for (int a = 0; a < b.size(); ++a)
        for (int g = 0; g < b.size(); ++g) gens.push_back(b.theta(a, g, x));
    std::vector<int> next = additive_closure(b, gens);
    // o-normal closure
    std::vector<int> conj;
    for (int x : next)
      for (int g = 0; g < b.size(); ++g) conj.push_back(b.mul(b.mul(g, x), b.inv(g)));
    std::vector<int> closed = additive_closure(b, conj);
    if (closed == cur) break;
    cur = std::move(closed);
  }
  return make_subset(b, cur);
}

int omega(const brace& b) {
  const int n = b.size();
  if (n == 1) return 0;
  std::vector<int> candidates;
  for (int x = 1; x < n; ++x) candidates.push_back(x);
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<int> pick(k);
    // k-combinations in lexicographic order
    std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
      if (depth == k) {
        return ideal_generated(b, pick).size() == static_cast<std::size_t>(n);
      }
      for (int i = start; i < static_cast<int>(candidates.size()); ++i) {
        pick[depth] = candidates[i];
        if (rec(i + 1, depth + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return k;
  }
  return n;  // unreachable: the whole carrier always generates
}

bool is_bi_skew(const brace& b) {
  // (A,o,+) axiom: a + (b o c) = (a + b) o a^- o (a + c)
  for (int a = 0; a < b.size(); ++a)
    for (int x = 0; x < b.size(); ++x)
      for (int y = 0; y < b.size(); ++y) {
        int lhs = b.add(a, b.mul(x, y));
        int rhs = b.mul(b.mul(b.add(a, x), b.inv(a)), b.add(a, y));
        if (lhs != rhs) return false;
      }
  return true;
}

bool is_lambda_homomorphic(const brace& b) {
  for (int a = 0; a < b.size(); ++a)
    for (int c = 0; c < b.size(); ++c)
      for (int x = 0; x < b.size(); ++x)
        if (b.lambda(b.add(a, c), x) != b.lambda(a, b.lambda(c, x))) return false;
  return true;
}

subset_handle brace_commutator(const brace& b) {
  std::vector<int> gens;
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      gens.push_back(b.star(x, y));
      gens.push_back(b.add(b.add(x, y), b.add(b.neg(x), b.neg(y))));  // x+y-x-y
    }
  return ideal_generated(b, additive_closure(b, gens));
}

std::optional<std::vector<int>> brace_iso(const brace& a, const brace& b) {
  if (a.size() != b.size())
    return std::nullopt;  // SizeMismatch fast-path
  return table_iso({a.additive_group(), a.multiplicative_group()},
                   {b.additive_group(), b.multiplicative_group()});
}

std::vector<std::vector<int>> all_brace_automorphisms(const brace& b) {
  return all_table_automorphisms({b.additive_group(), b.multiplicative_group()});
}

brace direct_product(const brace& a, const brace& b) {
  const int n = a.size() * b.size();
  auto idx = [&](int x, int y) { return x * b.size() + y; };
  std::vector<std::vector<int>> add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (int x1 = 0; x1 < a.size(); ++x1)
    for (int y1 = 0; y1 < b.size(); ++y1)
      for (int x2 = 0; x2 < a.size(); ++x2)
        for (int y2 = 0; y2 < b.size(); ++y2) {
          add[idx(x1, y1)][idx(x2, y2)] = idx(a.add(x1, x2), b.add(y1, y2));
          mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
  return brace::validate(std::move(add), std::move(mul));
}

brace jordan_block_fixture(long long p, int n) {
  if (n < 2 || n >= p) fail(errc::bad_parameters, "jordan fixture needs 2 <= n < p");
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) fail(errc::bad_parameters, "p must be prime");
  long long size = 1;
  for (int i = 0; i < n; ++i) size *= p;
  if (size > 4096) fail(errc::bad_parameters, "fixture too large");
  const int N = static_cast<int>(size);

  auto to_vec = [&](int idx) {
    std::vector<int> v(n);
    for (int i = n - 1; i >= 0; --i) {
      v[i] = idx % static_cast<int>(p);
      idx /= static_cast<int>(p);
    }
    return v;
  };
  auto to_idx = [&](const std::vector<int>& v) {
    int idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * static_cast<int>(p) + v[i];
    return idx;
  };
  // phi(v)_i = v_i + v_{i+1} (unipotent Jordan block on column vectors)
  auto phi = [&](std::vector<int> v) {
    for (int i = 0; i + 1 < n; ++i) v[i] = (v[i] + v[i + 1]) % static_cast<int>(p);
    return v;
  };

  std::vector<std::vector<int>> add(N, std::vector<int>(N)), mul(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a) {
    auto va = to_vec(a);
    for (int c = 0; c < N; ++c) {
      auto vc = to_vec(c);
      std::vector<int> sum(n);
      for (int i = 0; i < n; ++i) sum[i] = (va[i] + vc[i]) % static_cast<int>(p);
      add[a][c] = to_idx(sum);
      auto lam = vc;
      for (int k = 0; k < va[n - 1]; ++k) lam = phi(lam);
      std::vector<int> prod(n);
      for (int i = 0; i < n; ++i) prod[i] = (va[i] + lam[i]) % static_cast<int>(p);
      mul[a][c] = to_idx(prod);
    }
  }
  return brace::validate(std::move(add), std::move(mul));
}

}  // namespace ybe
