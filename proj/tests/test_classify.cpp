#include "doctest.h"
#include "fixtures.hpp"
#include "ybe/classify.hpp"
#include "ybe/perm_group.hpp"
#include "ybe/solution_maps.hpp"

using namespace ybe;

TEST_CASE("class enumeration counts") {
  CHECK(enumerate_classes(type_signature::parse("2:1,1")).size() == 2);
  CHECK(enumerate_classes(type_signature::parse("2:1,1,1")).size() == 3);
  CHECK(enumerate_classes(type_signature::parse("3:1")).size() == 1);
}

TEST_CASE("representatives are pairwise non-isomorphic") {
  for (const char* ty : {"2:1,1", "2:1,1,1", "3:1,1"}) {
    auto classes = enumerate_classes(type_signature::parse(ty));
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = i + 1; j < classes.size(); ++j)
        CHECK_FALSE(isomorphic_solutions(classes[i].representative, classes[j].representative)
                        .has_value());
  }
}

TEST_CASE("the size-3 class is the cyclic permutation solution") {
  auto classes = enumerate_classes(type_signature::parse("3:1"));
  REQUIRE(classes.size() == 1);
  CHECK(isomorphic_solutions(classes[0].representative, fixtures::cyclic_solution(3)).has_value());
  CHECK(mpl(classes[0].representative) == 1);
}

TEST_CASE("closed formula") {
  CHECK(count_formula(type_signature::parse("2:1,1")) == 2);
  CHECK(count_formula(type_signature::parse("2:2,1,1")) == 4);   // d1 >= d2+d3 branch
  CHECK(count_formula(type_signature::parse("2:1,1,1")) == 3);   // d1 < d2+d3 branch
  CHECK(count_formula(type_signature::parse("3:1")) == 1);
  try {
    count_formula(type_signature::parse("2:1,1,1,1"));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::unsupported);
  }
}

TEST_CASE("formula agrees with enumeration") {
  for (const char* ty :
       {"2:1,1", "2:2,1", "2:2,2", "2:1,1,1", "2:2,1,1", "3:1,1", "3:1,1,1"}) {
    auto t = type_signature::parse(ty);
    CHECK(count_formula(t) == static_cast<long long>(enumerate_classes(t).size()));
  }
}

TEST_CASE("counts by size") {
  CHECK(count_size_mpl_le(2, 2, 2) == 3);
  CHECK(count_size_mpl_le(2, 0, 3) == 1);
  CHECK(count_size_mpl_le(2, 3, 3) == 6);  // (3)+(2,1)+(1,1,1) = 1+2+3
  // mpl <= 2 series: (p^{floor(d/2)+1} - 1)/(p - 1)
  for (long long p : {2LL, 3LL})
    for (int d = 0; d <= 4; ++d) {
      long long expect = 0, q = 1;
      for (int k = 0; k <= d / 2; ++k) {
        expect += q;
        q *= p;
      }
      CHECK(count_size_mpl_le(p, d, 2) == expect);
    }
}

TEST_CASE("oracle finds the classified solutions and nothing else") {
  CHECK(oracle_bruteforce_classes(2).size() == 1);
  CHECK(oracle_bruteforce_classes(3).size() == 1);
  auto found = oracle_bruteforce_classes(4);
  CHECK(found.size() == 3);

  // every oracle class matches exactly one matrix-enumeration representative
  std::vector<solution> reps;
  for (const char* ty : {"2:2", "2:1,1"})
    for (auto& c : enumerate_classes(type_signature::parse(ty)))
      reps.push_back(c.representative);
  REQUIRE(reps.size() == 3);
  for (const auto& s : found) {
    int hits = 0;
    for (const auto& r : reps)
      if (isomorphic_solutions(s, r)) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("oracle at size 5 finds only the cyclic solution") {
  auto found = oracle_bruteforce_classes(5);
  REQUIRE(found.size() == 1);
  CHECK(isomorphic_solutions(found[0], fixtures::cyclic_solution(5)).has_value());
  CHECK(count_size_mpl_le(5, 1, 2) == 1);
}

TEST_CASE("oracle carrier cap") {
  try {
    oracle_bruteforce_classes(7);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::carrier_too_large);
  }
}

TEST_CASE("representative sanity across small types") {
  for (const char* ty : {"2:1,1", "2:2,1", "3:1,1"}) {
    auto t = type_signature::parse(ty);
    for (const auto& c : enumerate_classes(t)) {
      const auto& s = c.representative;
      CHECK(s.involutive());
      CHECK(is_indecomposable(s));
      auto g = perm_group::of_solution(s);
      CHECK(g.abelian());
      CHECK(g.regular());
      // type matches the signature
      std::vector<long long> expected;
      for (int i = 0; i < t.effective_n(); ++i) expected.push_back(t.diag(i));
      CHECK(solution_type(s) == expected);
      if (s.size() <= 16) {
        CHECK(proper_subsolutions(s).empty());
        auto aut = automorphism_group(s);
        CHECK(aut.elements.size() <= static_cast<size_t>(s.size()));
        // Aut is the additive group of the permutation brace (mpl 2 case)
        if (mpl(s) == 2) {
          REQUIRE(aut.invariant_factors.has_value());
          CHECK(*aut.invariant_factors ==
                abelian_invariant_factors(c.permutation_brace.additive_group()));
        }
      }
      CHECK(min_generators_abelian(g) <= mpl(s).value_or(0));
    }
  }
}
