#include "ybe/truncated_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ybe {

ring_element::ring_element(int n, long long modulus) : coeffs_(n, 0), modulus_(modulus) {
  if (n < 1) fail(errc::bad_parameters, "ring degree bound must be positive");
  if (modulus < 0) fail(errc::bad_parameters, "modulus must be non-negative");
}

ring_element ring_element::x(int n, long long modulus) {
  ring_element e(n, modulus);
  e.coeffs_[0] = 1;
  e.reduce();
  return e;
}

ring_element ring_element::from_coeffs(std::vector<long long> coeffs, long long modulus) {
  ring_element e(static_cast<int>(coeffs.size()), modulus);
  e.coeffs_ = std::move(coeffs);
  e.reduce();
  return e;
}

bool ring_element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

void ring_element::reduce() {
  if (modulus_ == 0) return;
  for (auto& c : coeffs_) {
    c %= modulus_;
    if (c < 0) c += modulus_;
  }
}

namespace {

void require_compatible(const ring_element& a, const ring_element& b) {
  if (a.degree_bound() != b.degree_bound() || a.modulus() != b.modulus())
    fail(errc::modulus_mismatch, "ring elements live in different rings");
}

}  // namespace

ring_element ring_add(const ring_element& a, const ring_element& b) {
  require_compatible(a, b);
  std::vector<long long> c(a.coeffs());
  for (int i = 0; i < a.degree_bound(); ++i) c[i] += b.coeff(i);
  return ring_element::from_coeffs(std::move(c), a.modulus());
}

ring_element ring_neg(const ring_element& a) {
  std::vector<long long> c(a.coeffs());
  for (auto& v : c) v = -v;
  return ring_element::from_coeffs(std::move(c), a.modulus());
}

ring_element ring_mul(const ring_element& a, const ring_element& b) {
  require_compatible(a, b);
  const int n = a.degree_bound();
  std::vector<long long> c(n, 0);
  // coeffs_[i] carries x^{i+1}: degree (i+1)+(j+1) lands at index i+j+1
  for (int i = 0; i < n; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j + 1 < n; ++j) c[i + j + 1] += a.coeff(i) * b.coeff(j);
  }
  return ring_element::from_coeffs(std::move(c), a.modulus());
}

ring_element ring_circ(const ring_element& a, const ring_element& b) {
  return ring_add(ring_add(a, b), ring_mul(a, b));
}

ring_element ring_inv_circ(const ring_element& a) {
  ring_element na = ring_neg(a);
  ring_element term = na;
  ring_element sum = na;
  for (int i = 2; i <= a.degree_bound(); ++i) {
    term = ring_mul(term, na);
    sum = ring_add(sum, term);
  }
  return sum;
}

ring_element ring_pow(const ring_element& a, int k) {
  if (k < 1) fail(errc::bad_parameters, "ring_pow needs k >= 1");
  ring_element r = a;
  for (int i = 1; i < k; ++i) r = ring_mul(r, a);
  return r;
}

type_signature type_signature::make(long long p, std::vector<int> d) {
  if (p < 2) fail(errc::bad_parameters, "p must be a prime");
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) fail(errc::bad_parameters, "p must be a prime");
  if (d.empty()) fail(errc::bad_parameters, "signature needs at least one exponent");
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) fail(errc::bad_parameters, "exponents must be non-negative");
    if (i > 0 && d[i] > d[i - 1])
      fail(errc::bad_parameters, "exponents must be non-increasing");
  }
  type_signature t;
  t.p = p;
  t.d = std::move(d);
  return t;
}

type_signature type_signature::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(errc::bad_parameters, "type syntax is p:d1,d2,...,dn");
  try {
    long long p = std::stoll(text.substr(0, colon));
    std::vector<int> d;
    std::stringstream ss(text.substr(colon + 1));
    std::string part;
    while (std::getline(ss, part, ',')) d.push_back(std::stoi(part));
    return make(p, std::move(d));
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::bad_parameters, "type syntax is p:d1,d2,...,dn");
  }
}

std::string type_signature::to_string() const {
  std::string s = std::to_string(p) + ":";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s;
}

int type_signature::total_d() const { return std::accumulate(d.begin(), d.end(), 0); }

int type_signature::effective_n() const {
  int m = n();
  while (m > 0 && d[m - 1] == 0) --m;
  return m;
}

long long type_signature::size() const {
  long long s = 1;
  for (int i = 0; i < total_d(); ++i) s *= p;
  return s;
}

long long type_signature::diag(int i) const {
  long long s = 1;
  for (int k = 0; k < d[i]; ++k) s *= p;
  return s;
}

namespace {

// Membership of s+(row) in the integer span of the rows below it. Those rows
// are upper triangular with nonzero diagonal, so greedy exact division down
// the pivots decides membership.
bool shift_in_span(const std::vector<long long>& row,
                   const std::vector<std::vector<long long>>& rows, int k) {
  const int n = static_cast<int>(row.size());
  std::vector<long long> t(n, 0);
  for (int j = 1; j < n; ++j) t[j] = row[j - 1];
  for (int i = k + 1; i < n; ++i) {
    long long diag = rows[i][i];
    if (t[i] % diag != 0) return false;
    long long q = t[i] / diag;
    for (int j = i; j < n; ++j) t[j] -= q * rows[i][j];
  }
  return std::all_of(t.begin(), t.end(), [](long long v) { return v == 0; });
}

}  // namespace

class_matrix class_matrix::checked(std::vector<std::vector<long long>> rows,
                                   const type_signature& t) {
  const int n = t.n();
  if (static_cast<int>(rows.size()) != n)
    fail(errc::matrix_not_in_normal_form, "matrix has wrong dimensions");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      fail(errc::matrix_not_in_normal_form, "matrix has wrong dimensions");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j < i && rows[i][j] != 0)
        fail(errc::matrix_not_in_normal_form, "matrix is not upper triangular", {i, j});
      if (rows[i][j] < 0)
        fail(errc::matrix_not_in_normal_form, "matrix has a negative entry", {i, j});
    }
  for (int i = 0; i < n; ++i)
    if (rows[i][i] != t.diag(i))
      fail(errc::wrong_type, "diagonal differs from the signature", {i});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rows[i][j] >= rows[j][j])
        fail(errc::matrix_not_in_normal_form,
             "diagonal entry does not dominate its column", {i, j});
  for (int k = 0; k < n; ++k)
    if (!shift_in_span(rows[k], rows, k))
      fail(errc::matrix_not_in_normal_form, "row shift leaves the span of lower rows", {k});
  class_matrix m;
  m.rows_ = std::move(rows);
  return m;
}

std::vector<class_matrix> matrices_for_type(const type_signature& t) {
  const int n = t.n();
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = t.diag(i);
  std::vector<class_matrix> out;

  // fill rows bottom-up; candidate entries at (k,j) range over [0, diag(j))
  auto rec = [&](auto&& self, int k) -> void {
    if (k < 0) {
      out.push_back(class_matrix::checked(rows, t));
      return;
    }
    std::vector<int> cols;
    for (int j = k + 1; j < n; ++j) cols.push_back(j);
    std::vector<long long> entry(cols.size(), 0);
    for (;;) {
      for (size_t i = 0; i < cols.size(); ++i) rows[k][cols[i]] = entry[i];
      if (shift_in_span(rows[k], rows, k)) self(self, k - 1);
      // odometer
      size_t pos = cols.size();
      while (pos > 0) {
        --pos;
        if (++entry[pos] < t.diag(cols[pos])) break;
        entry[pos] = 0;
        if (pos == 0) {
          for (size_t i = 0; i < cols.size(); ++i) rows[k][cols[i]] = 0;
          return;
        }
      }
      if (cols.empty()) return;
    }
  };
  rec(rec, n - 1);
  std::sort(out.begin(), out.end(), [](const class_matrix& a, const class_matrix& b) {
    return a.rows() < b.rows();
  });
  return out;
}

std::vector<std::vector<long long>> ideal_of_matrix(const class_matrix& m) { return m.rows(); }

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<long long> reduce_vector(const class_matrix& m, const type_signature& t,
                                     std::vector<long long> v) {
  const int n = t.n();
  for (int i = 0; i < n; ++i) {
    long long q = floor_div(v[i], m.entry(i, i));
    if (q != 0)
      for (int j = i; j < n; ++j) v[j] -= q * m.entry(i, j);
  }
  return v;
}

matrix_brace brace_of_matrix(const class_matrix& m, const type_signature& t) {
  const int n = t.n();
  std::vector<long long> strides(n, 1);
  for (int i = n - 2; i >= 0; --i) strides[i] = strides[i + 1] * t.diag(i + 1);
  const long long size = strides[0] * t.diag(0);
  if (size > 100000) fail(errc::search_space_too_large, "quotient brace too large");
  const int N = static_cast<int>(size);

  auto to_vec = [&](int idx) {
    std::vector<long long> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = idx / strides[i];
      idx = static_cast<int>(idx % strides[i]);
    }
    return v;
  };
  auto to_idx = [&](const std::vector<long long>& v) {
    long long idx = 0;
    for (int i = 0; i < n; ++i) idx += v[i] * strides[i];
    return static_cast<int>(idx);
  };

  std::vector<std::vector<long long>> reps(N);
  for (int i = 0; i < N; ++i) reps[i] = to_vec(i);

  std::vector<std::vector<int>> add(N, std::vector<int>(N)), mul(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a) {
    ring_element ra = ring_element::from_coeffs(reps[a], 0);
    for (int c = 0; c < N; ++c) {
      std::vector<long long> sum(n);
      for (int i = 0; i < n; ++i) sum[i] = reps[a][i] + reps[c][i];
      add[a][c] = to_idx(reduce_vector(m, t, std::move(sum)));
      ring_element rc = ring_element::from_coeffs(reps[c], 0);
      mul[a][c] = to_idx(reduce_vector(m, t, ring_circ(ra, rc).coeffs()));
    }
  }
  std::vector<long long> e1(n, 0);
  e1[0] = 1;
  int x_index = to_idx(reduce_vector(m, t, std::move(e1)));
  return {brace::validate(std::move(add), std::move(mul)), x_index, std::move(reps)};
}

class_matrix canonical_matrix(std::vector<std::vector<long long>> rows,
                              const type_signature& t) {
  const int n = t.n();
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      fail(errc::bad_parameters, "rows have wrong length");
  int r = 0;
  for (int col = 0; col < n; ++col) {
    for (;;) {
      int best = -1;
      for (int i = r; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][col] != 0 &&
            (best == -1 || std::abs(rows[i][col]) < std::abs(rows[best][col])))
          best = i;
      if (best == -1) fail(errc::wrong_type, "rows do not span a finite-index subgroup", {col});
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][col] == 0) continue;
        long long q = floor_div(rows[i][col], rows[r][col]);
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] < 0)
      for (int j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
    for (int i = 0; i < r; ++i) {
      long long q = floor_div(rows[i][col], rows[r][col]);
      if (q != 0)
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
    if (r == n) break;
  }
  if (r < n) fail(errc::wrong_type, "rows do not span a finite-index subgroup");
  rows.resize(n);
  for (int i = 0; i < n; ++i)
    if (rows[i][i] != t.diag(i))
      fail(errc::wrong_type, "reduced diagonal differs from the signature", {i});
  return class_matrix::checked(std::move(rows), t);
}

class_matrix phi_action(const ring_element& y, const class_matrix& m, const type_signature& t) {
  const int n = t.n();
  const long long pd = t.size();
  if (y.degree_bound() != n || y.modulus() != pd)
    fail(errc::bad_parameters, "automorphism seed lives in the wrong ring");
  if (y.coeff(0) != 1)
    fail(errc::bad_automorphism_seed, "seed must be congruent to x modulo F^2");

  std::vector<ring_element> pow;
  pow.push_back(y);
  for (int k = 2; k <= n; ++k) pow.push_back(ring_mul(pow.back(), y));

  std::vector<std::vector<long long>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> acc(n, 0);
    for (int j = 0; j < n; ++j) {
      if (m.entry(i, j) == 0) continue;
      for (int k = 0; k < n; ++k)
        acc[k] = (acc[k] + m.entry(i, j) % pd * pow[j].coeff(k)) % pd;
    }
    rows.push_back(std::move(acc));
  }
  for (int k = 0; k < n; ++k) {
    std::vector<long long> lift(n, 0);
    lift[k] = pd;
    rows.push_back(std::move(lift));
  }
  return canonical_matrix(std::move(rows), t);
}

std::vector<std::vector<int>> matrix_orbits(const type_signature& t, long long space_cap) {
  const int n = t.n();
  const long long pd = t.size();
  long long space = 1;
  for (int i = 1; i < n; ++i) {
    if (space > space_cap / pd + 1) space = space_cap + 1;
    else space *= pd;
    if (space > space_cap)
      fail(errc::search_space_too_large,
           "automorphism seed space exceeds cap " + std::to_string(space_cap));
  }

  std::vector<class_matrix> ms = matrices_for_type(t);
  if (ms.size() <= 1) return {{0}};  // includes p^d = 1, where no seed exists
  std::map<std::vector<std::vector<long long>>, int> index;
  for (size_t i = 0; i < ms.size(); ++i) index[ms[i].rows()] = static_cast<int>(i);

  std::vector<int> parent(ms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<long long> coeff(n, 0);
  coeff[0] = 1;
  for (long long it = 0; it < space; ++it) {
    long long rem = it;
    for (int i = 1; i < n; ++i) {
      coeff[i] = rem % pd;
      rem /= pd;
    }
    ring_element y = ring_element::from_coeffs(coeff, pd);
    for (size_t i = 0; i < ms.size(); ++i) {
      class_matrix img = phi_action(y, ms[i], t);
      auto it2 = index.find(img.rows());
      if (it2 == index.end())
        fail(errc::wrong_type, "phi image left the normal-form family");
      int a = find(static_cast<int>(i)), b = find(it2->second);
      if (a != b) parent[a] = b;
    }
  }

  std::map<int, std::vector<int>> by_root;
  for (size_t i = 0; i < ms.size(); ++i) by_root[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> orbits;
  for (auto& [root, members] : by_root) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

std::optional<int> p_valuation(long long k, long long p) {
  if (p < 2) fail(errc::bad_parameters, "p must be at least 2");
  if (k == 0) return std::nullopt;
  if (k < 0) k = -k;
  int v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

}  // namespace ybe
