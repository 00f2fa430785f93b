#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ybe/truncated_ring.hpp"

using namespace ybe;

namespace {

// independent multiplication oracle: full polynomial product in degrees
// 1..2n, then truncation at n
std::vector<long long> naive_mul(const std::vector<long long>& a,
                                 const std::vector<long long>& b, long long mod) {
  const int n = static_cast<int>(a.size());
  std::vector<long long> full(2 * n + 2, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) full[(i + 1) + (j + 1)] += a[i] * b[j];
  std::vector<long long> out(n, 0);
  for (int d = 1; d <= n; ++d) {
    out[d - 1] = full[d];
    if (mod) out[d - 1] = ((out[d - 1] % mod) + mod) % mod;
  }
  return out;
}

long long ipow(long long p, int e) {
  long long r = 1;
  while (e-- > 0) r *= p;
  return r;
}

}  // namespace

TEST_CASE("ring multiplication truncates at x^{n+1}") {
  auto x = ring_element::x(4, 0);
  auto x2 = ring_mul(x, x);
  CHECK(x2.coeffs() == std::vector<long long>{0, 1, 0, 0});
  auto x3 = ring_mul(x2, x);
  auto x4 = ring_mul(x3, x);
  CHECK(x4.coeffs() == std::vector<long long>{0, 0, 0, 1});
  CHECK(ring_mul(x4, x).is_zero());
}

TEST_CASE("ring multiplication matches the naive oracle") {
  std::mt19937 rng(424242);
  for (long long mod : {0LL, 4LL, 9LL}) {
    for (int trial = 0; trial < 20; ++trial) {
      int n = 1 + static_cast<int>(rng() % 5);
      std::vector<long long> a(n), b(n);
      for (auto& v : a) v = static_cast<long long>(rng() % 7) - 3;
      for (auto& v : b) v = static_cast<long long>(rng() % 7) - 3;
      auto ra = ring_element::from_coeffs(a, mod);
      auto rb = ring_element::from_coeffs(b, mod);
      CHECK(ring_mul(ra, rb).coeffs() == naive_mul(ra.coeffs(), rb.coeffs(), mod));
    }
  }
}

TEST_CASE("circ and its inverse") {
  // in F_2 mod 4: x o x = 2x + x^2
  auto x = ring_element::x(2, 4);
  CHECK(ring_circ(x, x).coeffs() == std::vector<long long>{2, 1});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    long long mod = (trial % 2) ? 8 : 0;
    std::vector<long long> c(n);
    for (auto& v : c) v = static_cast<long long>(rng() % 5) - 2;
    auto a = ring_element::from_coeffs(c, mod);
    CHECK(ring_circ(a, ring_inv_circ(a)).is_zero());
    CHECK(ring_circ(ring_inv_circ(a), a).is_zero());
  }
}

TEST_CASE("modulus mismatch is rejected") {
  auto a = ring_element::x(2, 4);
  auto b = ring_element::x(2, 8);
  CHECK_THROWS_AS(ring_mul(a, b), error);
}

TEST_CASE("type signatures") {
  auto t = type_signature::parse("2:2,1,1");
  CHECK(t.p == 2);
  CHECK(t.d == std::vector<int>{2, 1, 1});
  CHECK(t.total_d() == 4);
  CHECK(t.size() == 16);
  CHECK(t.to_string() == "2:2,1,1");
  CHECK(type_signature::make(3, {2, 1, 0, 0}).effective_n() == 2);
  CHECK_THROWS_AS(type_signature::parse("4:1"), error);        // not prime
  CHECK_THROWS_AS(type_signature::parse("2:1,2"), error);      // increasing
  CHECK_THROWS_AS(type_signature::parse("nonsense"), error);
}

TEST_CASE("matrix families") {
  SUBCASE("n=1") {
    auto ms = matrices_for_type(type_signature::parse("2:1"));
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].rows() == std::vector<std::vector<long long>>{{2}});
  }
  SUBCASE("n=2: off-diagonal entry ranges over [0, p^{d2})") {
    auto ms = matrices_for_type(type_signature::parse("2:1,1"));
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].entry(0, 1) == 0);
    CHECK(ms[1].entry(0, 1) == 1);
  }
  SUBCASE("n=3: the (0,1) entry is forced to equal the (1,2) entry") {
    auto ms = matrices_for_type(type_signature::parse("2:1,1,1"));
    REQUIRE(ms.size() == 4);
    for (const auto& m : ms) CHECK(m.entry(0, 1) == m.entry(1, 2));
  }
  SUBCASE("family size is p^{d-d1}") {
    for (long long p : {2LL, 3LL}) {
      for (auto d : std::vector<std::vector<int>>{{1}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 2}, {2, 1, 1}}) {
        auto t = type_signature::make(p, d);
        int rest = t.total_d() - t.d[0];
        CHECK(static_cast<long long>(matrices_for_type(t).size()) == ipow(p, rest));
      }
    }
  }
}

TEST_CASE("quotient braces of matrices") {
  auto t = type_signature::parse("2:1,1");
  auto ms = matrices_for_type(t);
  auto b0 = brace_of_matrix(ms[0], t);
  auto b1 = brace_of_matrix(ms[1], t);
  CHECK(abelian_invariant_factors(b0.b.additive_group()) == std::vector<long long>{2, 2});
  CHECK(abelian_invariant_factors(b1.b.additive_group()) == std::vector<long long>{4});
  // m=1: (1,0)+(1,0) reduces through the row (2,1) to (0,1)
  CHECK(b1.b.add(b1.x_index, b1.x_index) == 1);
}

TEST_CASE("canonical matrix recovery") {
  std::mt19937 rng(777);
  for (const char* ty : {"2:1,1", "2:2,1", "2:1,1,1", "3:2,1", "2:2,1,1"}) {
    auto t = type_signature::parse(ty);
    for (const auto& m : matrices_for_type(t)) {
      CHECK(canonical_matrix(m.rows(), t) == m);  // already normal: unchanged
      // scramble by row operations and recover
      auto rows = m.rows();
      for (int step = 0; step < 6; ++step) {
        int i = static_cast<int>(rng() % rows.size());
        int j = static_cast<int>(rng() % rows.size());
        if (i == j) continue;
        long long q = static_cast<long long>(rng() % 5) - 2;
        for (size_t c = 0; c < rows[i].size(); ++c) rows[i][c] += q * rows[j][c];
      }
      std::shuffle(rows.begin(), rows.end(), rng);
      CHECK(canonical_matrix(rows, t) == m);
    }
  }
}

TEST_CASE("canonical matrix rejects the wrong diagonal") {
  auto t = type_signature::parse("2:1,1");
  std::vector<std::vector<long long>> rows = {{2, 0}, {0, 4}};
  try {
    canonical_matrix(rows, t);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code == errc::wrong_type);
  }
}

TEST_CASE("phi action") {
  SUBCASE("y = x acts trivially") {
    for (const char* ty : {"2:1,1", "2:1,1,1", "3:1,1"}) {
      auto t = type_signature::parse(ty);
      auto y = ring_element::x(t.n(), t.size());
      for (const auto& m : matrices_for_type(t)) CHECK(phi_action(y, m, t) == m);
    }
  }
  SUBCASE("n=2: every seed acts trivially") {
    auto t = type_signature::parse("2:2,1");
    for (const auto& m : matrices_for_type(t))
      for (long long a = 0; a < t.size(); ++a) {
        auto y = ring_element::from_coeffs({1, a}, t.size());
        CHECK(phi_action(y, m, t) == m);
      }
  }
  SUBCASE("n=3 example: x + x^2 moves m1 by m2") {
    auto t = type_signature::parse("2:1,1,1");
    auto y = ring_element::from_coeffs({1, 1, 0}, t.size());
    auto m = class_matrix::checked({{2, 1, 0}, {0, 2, 1}, {0, 0, 2}}, t);
    auto expected = class_matrix::checked({{2, 1, 1}, {0, 2, 1}, {0, 0, 2}}, t);
    CHECK(phi_action(y, m, t) == expected);
  }
  SUBCASE("acting twice equals acting by the composed automorphism") {
    // composing x -> y' and x -> y sends x to y' evaluated at y
    auto t = type_signature::parse("2:1,1,1");
    auto ms = matrices_for_type(t);
    const long long pd = t.size();
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
      auto y = ring_element::from_coeffs(
          {1, static_cast<long long>(rng() % pd), static_cast<long long>(rng() % pd)}, pd);
      auto yp = ring_element::from_coeffs(
          {1, static_cast<long long>(rng() % pd), static_cast<long long>(rng() % pd)}, pd);
      ring_element composed(t.n(), pd);
      for (int i = 0; i < t.n(); ++i)
        if (yp.coeff(i) != 0) {
          auto term = ring_pow(y, i + 1);
          std::vector<long long> scaled(term.coeffs());
          for (auto& v : scaled) v *= yp.coeff(i);
          composed = ring_add(composed, ring_element::from_coeffs(scaled, pd));
        }
      for (const auto& m : ms)
        CHECK(phi_action(y, phi_action(yp, m, t), t) == phi_action(composed, m, t));
    }
  }
  SUBCASE("seed must be congruent to x") {
    auto t = type_signature::parse("2:1,1");
    auto bad = ring_element::from_coeffs({2, 0}, t.size());
    auto ms = matrices_for_type(t);
    try {
      phi_action(bad, ms[0], t);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code == errc::bad_automorphism_seed);
    }
  }
}

TEST_CASE("matrix orbits") {
  SUBCASE("n=2 orbits are singletons") {
    auto orbits = matrix_orbits(type_signature::parse("2:1,1"));
    CHECK(orbits == std::vector<std::vector<int>>{{0}, {1}});
  }
  SUBCASE("single-matrix families") {
    CHECK(matrix_orbits(type_signature::parse("3:2")).size() == 1);
  }
  SUBCASE("2:1,1,1 has orbit sizes 1,1,2") {
    auto orbits = matrix_orbits(type_signature::parse("2:1,1,1"));
    std::vector<size_t> sizes;
    for (const auto& o : orbits) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 2});
  }
  SUBCASE("orbit sizes follow the valuation of the (1,2) entry") {
    for (const char* ty : {"2:1,1,1", "2:2,1,1", "3:1,1,1"}) {
      auto t = type_signature::parse(ty);
      auto ms = matrices_for_type(t);
      auto orbits = matrix_orbits(t);
      std::vector<long long> orbit_size(ms.size());
      for (const auto& o : orbits)
        for (int i : o) orbit_size[i] = static_cast<long long>(o.size());
      for (size_t i = 0; i < ms.size(); ++i) {
        auto nu = p_valuation(ms[i].entry(1, 2), t.p);
        int r = 0;
        if (nu) r = std::max(0, -t.d[0] + t.d[1] + t.d[2] - *nu);
        CHECK(orbit_size[i] == ipow(t.p, r));
      }
    }
  }
  SUBCASE("seed space cap") {
    try {
      matrix_orbits(type_signature::parse("2:2,2,2"), 10);
      CHECK(false);
    } catch (const error& e) {
      CHECK(e.code == errc::search_space_too_large);
    }
  }
}

TEST_CASE("p-valuation") {
  CHECK(p_valuation(8, 2) == 3);
  CHECK_FALSE(p_valuation(0, 2).has_value());
  CHECK(p_valuation(18, 3) == 2);
  CHECK(p_valuation(-12, 2) == 2);
}
