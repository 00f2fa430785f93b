#include "ybe/solution_maps.hpp"

#include <algorithm>
#include <map>

#include "ybe/groups.hpp"

namespace ybe {

namespace {

struct point_signature {
  std::vector<int> sigma_type, tau_type;
  bool sigma_fix, tau_fix;
  auto operator<=>(const point_signature&) const = default;
};

std::vector<point_signature> signatures(const solution& s) {
  std::vector<point_signature> sig(s.size());
  for (int x = 0; x < s.size(); ++x) {
    sig[x] = {cycle_type(s.sigma_row(x)), cycle_type(s.tau_row(x)), s.sigma(x, x) == x,
              s.tau(x, x) == x};
  }
  return sig;
}

struct iso_search {
  const solution& s;
  const solution& t;
  bool all_mode = false;
  bool done = false;
  std::vector<perm> found;
  std::vector<int> f, finv, trail;
  std::vector<point_signature> sig_s, sig_t;

  iso_search(const solution& s, const solution& t) : s(s), t(t) {
    f.assign(s.size(), -1);
    finv.assign(s.size(), -1);
    sig_s = signatures(s);
    sig_t = signatures(t);
  }

  bool assign(int x, int y) {
    if (f[x] != -1) return f[x] == y;
    if (finv[y] != -1) return false;
    if (sig_s[x] != sig_t[y]) return false;
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
        if (!assign(s.sigma(u, v), t.sigma(f[u], f[v]))) return false;
        if (!assign(s.tau(u, v), t.tau(f[u], f[v]))) return false;
        if (!assign(s.sigma(v, u), t.sigma(f[v], f[u]))) return false;
        if (!assign(s.tau(v, u), t.tau(f[v], f[u]))) return false;
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
    for (int x = 0; x < s.size(); ++x)
      for (int y = 0; y < s.size(); ++y) {
        if (f[s.sigma(x, y)] != t.sigma(f[x], f[y])) return false;
        if (f[s.tau(x, y)] != t.tau(f[x], f[y])) return false;
      }
    return true;
  }

  void search() {
    if (done) return;
    int x = -1;
    for (int i = 0; i < s.size(); ++i)
      if (f[i] == -1) {
        x = i;
        break;
      }
    if (x == -1) {
      if (full_check()) {
        found.push_back(f);
        if (!all_mode) done = true;
      }
      return;
    }
    for (int y = 0; y < t.size() && !done; ++y) {
      if (finv[y] != -1) continue;
      size_t mark = trail.size();
      if (assign(x, y) && propagate(mark)) search();
      undo(mark);
    }
  }
};

}  // namespace

std::optional<perm> isomorphic_solutions(const solution& s, const solution& t) {
  if (s.size() != t.size()) return std::nullopt;
  iso_search search(s, t);
  search.search();
  if (search.found.empty()) return std::nullopt;
  return search.found.front();
}

std::vector<perm> all_isomorphisms(const solution& s, const solution& t) {
  if (s.size() != t.size()) return {};
  iso_search search(s, t);
  search.all_mode = true;
  search.search();
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

automorphism_info automorphism_group(const solution& s) {
  automorphism_info info;
  info.elements = all_isomorphisms(s, s);
  const auto& el = info.elements;
  info.abelian = true;
  for (size_t i = 0; i < el.size() && info.abelian; ++i)
    for (size_t j = i + 1; j < el.size(); ++j)
      if (compose(el[i], el[j]) != compose(el[j], el[i])) {
        info.abelian = false;
        break;
      }
  if (info.abelian) {
    std::map<perm, int> index;
    for (size_t i = 0; i < el.size(); ++i) index[el[i]] = static_cast<int>(i);
    cayley_table t;
    t.n = static_cast<int>(el.size());
    t.t.assign(t.n, std::vector<int>(t.n));
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j) t.t[i][j] = index.at(compose(el[i], el[j]));
    info.invariant_factors = abelian_invariant_factors(t);
  }
  return info;
}

std::vector<std::vector<int>> proper_subsolutions(const solution& s, int carrier_cap) {
  const int n = s.size();
  if (n > carrier_cap)
    fail(errc::carrier_too_large,
         "subsolution search enumerates subsets; carrier exceeds cap " +
             std::to_string(carrier_cap));
  std::vector<std::vector<int>> result;
  const unsigned full = (n >= 32) ? ~0u : ((1u << n) - 1);
  for (unsigned mask = 1; mask < full; ++mask) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < n; ++b) {
        if (!(mask >> b & 1)) continue;
        if (!(mask >> s.sigma(a, b) & 1) || !(mask >> s.tau(a, b) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<int> elems;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) elems.push_back(a);
    result.push_back(std::move(elems));
  }
  return result;
}

}  // namespace ybe
