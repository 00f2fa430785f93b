#include "ybe/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ybe {

perm_group perm_group::of_solution(const solution& s, std::size_t cap) {
  std::vector<perm_pair> gens;
  gens.reserve(s.size());
  for (int x = 0; x < s.size(); ++x)
    gens.emplace_back(s.sigma_row(x), inverse(s.tau_row(x)));
  return closure(std::move(gens), s.size(), cap);
}

perm_group perm_group::closure(std::vector<perm_pair> generators, int degree, std::size_t cap) {
  perm_group g;
  g.degree_ = degree;
  std::set<perm_pair> elems;
  std::vector<perm_pair> queue;
  perm_pair id{identity_perm(degree), identity_perm(degree)};
  elems.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    perm_pair e = std::move(queue.back());
    queue.pop_back();
    for (const auto& gen : generators) {
      perm_pair prod{compose(e.first, gen.first), compose(e.second, gen.second)};
      if (elems.insert(prod).second) {
        if (elems.size() > cap)
          fail(errc::group_too_large,
               "permutation group closure exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(prod));
      }
    }
  }
  g.generators_ = std::move(generators);
  g.elements_.assign(elems.begin(), elems.end());
  return g;
}

bool perm_group::abelian() const {
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j) {
      if (compose(generators_[i].first, generators_[j].first) !=
          compose(generators_[j].first, generators_[i].first))
        return false;
      if (compose(generators_[i].second, generators_[j].second) !=
          compose(generators_[j].second, generators_[i].second))
        return false;
    }
  return true;
}

bool perm_group::transitive() const {
  std::vector<char> seen(degree_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& gen : generators_) {
      for (int y : {gen.first[x], inverse(gen.first)[x]}) {
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
  }
  return count == degree_;
}

bool perm_group::regular() const { return transitive() && order() == degree_; }

cayley_table perm_group::to_cayley(std::size_t table_cap) const {
  if (elements_.size() > table_cap)
    fail(errc::group_too_large, "group too large for a Cayley table");
  std::map<perm_pair, int> index;
  for (size_t i = 0; i < elements_.size(); ++i) index[elements_[i]] = static_cast<int>(i);
  cayley_table t;
  t.n = static_cast<int>(elements_.size());
  t.t.assign(t.n, std::vector<int>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      perm_pair prod{compose(elements_[i].first, elements_[j].first),
                     compose(elements_[i].second, elements_[j].second)};
      t.t[i][j] = index.at(prod);
    }
  return t;
}

int min_generators_abelian(const perm_group& g) {
  if (!g.abelian()) fail(errc::not_abelian, "permutation group is not abelian");
  return static_cast<int>(abelian_invariant_factors(g.to_cayley()).size());
}

}  // namespace ybe
