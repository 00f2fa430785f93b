#pragma once

#include <string>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"
#include "ybe/truncated_ring.hpp"

namespace ybe {

/// Canonical form: sorted keys, no whitespace. {"involutive":bool,"n":int,
/// "sigma":[[...]],"tau":[[...]]}
std::string solution_to_json(const solution& s);

/// Accepts the canonical form; tau may be omitted for involutive input and
/// 1-based tables are normalized on load.
solution solution_from_json(const std::string& text);

/// {"add":[[...]],"mul":[[...]],"n":int}; identity is element 0. 1-based
/// tables and a shifted identity are normalized on load.
std::string brace_to_json(const brace& b);
brace brace_from_json(const std::string& text);

std::string matrix_to_text(const class_matrix& m);
std::vector<std::vector<long long>> matrix_rows_from_text(const std::string& text);

}  // namespace ybe
