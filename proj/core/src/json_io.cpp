#include "ybe/json_io.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace ybe {

namespace {

using nlohmann::json;

json table_to_json(const std::vector<std::vector<int>>& t) {
  json a = json::array();
  for (const auto& row : t) a.push_back(row);
  return a;
}

std::vector<std::vector<int>> table_from_json(const json& j, const char* name) {
  if (!j.is_array()) fail(errc::bad_parameters, std::string(name) + " must be an array");
  std::vector<std::vector<int>> t;
  for (const auto& row : j) {
    if (!row.is_array()) fail(errc::bad_parameters, std::string(name) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(errc::bad_parameters, "table entries must be integers");
      r.push_back(v.get<int>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

// A 0-based table never contains n; a 1-based one always does (rows are
// bijections) and never contains 0.
void normalize_one_based(std::vector<std::vector<int>>& t, int n) {
  bool has_n = false, has_zero = false;
  for (const auto& row : t)
    for (int v : row) {
      if (v == n) has_n = true;
      if (v == 0) has_zero = true;
    }
  if (!has_n) return;
  if (has_zero)
    fail(errc::out_of_range_entry, "table mixes 0-based and 1-based labels");
  for (auto& row : t)
    for (int& v : row) --v;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::bad_parameters, "invalid JSON");
  return j;
}

}  // namespace

std::string solution_to_json(const solution& s) {
  json j;
  j["n"] = s.size();
  j["involutive"] = s.involutive();
  j["sigma"] = table_to_json(s.sigma_table());
  j["tau"] = table_to_json(s.tau_table());
  return j.dump();
}

solution solution_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    fail(errc::bad_parameters, "solution JSON needs integer field n");
  int n = j["n"].get<int>();
  if (!j.contains("sigma")) fail(errc::bad_parameters, "solution JSON needs sigma");
  auto sigma = table_from_json(j["sigma"], "sigma");
  if (static_cast<int>(sigma.size()) != n)
    fail(errc::bad_parameters, "sigma size differs from n");
  normalize_one_based(sigma, n);
  bool involutive = j.value("involutive", false);
  std::optional<std::vector<std::vector<int>>> tau;
  if (j.contains("tau") && !j["tau"].is_null()) {
    auto t = table_from_json(j["tau"], "tau");
    normalize_one_based(t, n);
    tau = std::move(t);
  }
  return solution::validate(std::move(sigma), std::move(tau), involutive);
}

std::string brace_to_json(const brace& b) {
  json j;
  j["n"] = b.size();
  j["add"] = table_to_json(b.add_table());
  j["mul"] = table_to_json(b.mul_table());
  return j.dump();
}

brace brace_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("n") || !j.contains("add") || !j.contains("mul"))
    fail(errc::bad_parameters, "brace JSON needs n, add, mul");
  int n = j["n"].get<int>();
  auto add = table_from_json(j["add"], "add");
  auto mul = table_from_json(j["mul"], "mul");
  if (static_cast<int>(add.size()) != n || static_cast<int>(mul.size()) != n)
    fail(errc::bad_parameters, "table size differs from n");
  for (const auto& row : add)
    if (static_cast<int>(row.size()) != n) fail(errc::bad_parameters, "add rows must have length n");
  for (const auto& row : mul)
    if (static_cast<int>(row.size()) != n) fail(errc::bad_parameters, "mul rows must have length n");
  normalize_one_based(add, n);
  normalize_one_based(mul, n);
  for (const auto& row : add)
    for (int v : row)
      if (v < 0 || v >= n) fail(errc::out_of_range_entry, "add entry out of range");
  for (const auto& row : mul)
    for (int v : row)
      if (v < 0 || v >= n) fail(errc::out_of_range_entry, "mul entry out of range");
  // identity normalized to index 0
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = add[cand][x] == x && add[x][cand] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e > 0) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[i] = i;
    std::swap(f[0], f[e]);
    std::vector<std::vector<int>> add2(n, std::vector<int>(n)), mul2(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        add2[f[a]][f[c]] = f[add[a][c]];
        mul2[f[a]][f[c]] = f[mul[a][c]];
      }
    add = std::move(add2);
    mul = std::move(mul2);
  }
  return brace::validate(std::move(add), std::move(mul));
}

std::string matrix_to_text(const class_matrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) out << ' ';
      out << m.entry(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<long long>> matrix_rows_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> vals;
  long long v;
  while (in >> v) vals.push_back(v);
  auto n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(vals.size()))));
  if (vals.empty() || static_cast<size_t>(n) * n != vals.size())
    fail(errc::bad_parameters, "matrix text must hold n*n integers");
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = vals[i * n + j];
  return rows;
}

}  // namespace ybe
