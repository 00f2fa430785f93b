// Command-line front end: validation, analysis, construction, enumeration
// and counting for set-theoretic Yang-Baxter solutions and finite skew
// braces. All output is deterministic; exit codes are 0 (success),
// 1 (validation failure / negative answer), 2 (bad arguments),
// 3 (cap exceeded).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ybe/bridge.hpp"
#include "ybe/classify.hpp"
#include "ybe/json_io.hpp"
#include "ybe/perm_group.hpp"
#include "ybe/solution_maps.hpp"

using nlohmann::json;
using namespace ybe;

namespace {

int exit_code_for(const error& e) {
  switch (e.code) {
    case errc::group_too_large:
    case errc::carrier_too_large:
    case errc::search_space_too_large:
      return 3;
    case errc::bad_parameters:
    case errc::unsupported:
      return 2;
    default:
      return 1;
  }
}

json error_json(const error& e) {
  json j;
  j["code"] = errc_name(e.code);
  j["message"] = e.what();
  j["witness"] = e.witness;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_parameters, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// text mode renders top-level fields as aligned "key  value" rows; json mode
// is canonical compact JSON, --pretty indents it
void emit(const json& j, const std::string& format, bool pretty) {
  if (format == "text" && j.is_object()) {
    size_t width = 0;
    for (auto& [k, v] : j.items()) width = std::max(width, k.size());
    for (auto& [k, v] : j.items())
      std::cout << k << std::string(width - k.size() + 2, ' ')
                << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return;
  }
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

json analyze_solution(const solution& s, std::size_t cap_group, int cap_subsolutions,
                      int cap_aut) {
  json j;
  j["n"] = s.size();
  j["involutive"] = s.involutive();
  j["square_free"] = is_square_free(s);
  j["condition_star"] = satisfies_condition_star(s);
  auto orb = orbits(s);
  j["orbits"] = orb.blocks;
  j["indecomposable"] = orb.blocks.size() == 1;
  j["retraction_sizes"] = retraction_sizes(s);
  auto m = mpl(s), mp = mpl_prime(s);
  j["mpl"] = m ? json(*m) : json(nullptr);
  j["mpl_prime"] = mp ? json(*mp) : json(nullptr);
  auto ty = solution_type(s);
  j["type"] = ty ? json(*ty) : json(nullptr);

  perm_group g = perm_group::of_solution(s, cap_group);
  json pg;
  pg["order"] = g.order();
  pg["abelian"] = g.abelian();
  pg["transitive"] = g.transitive();
  pg["regular"] = g.regular();
  pg["min_generators"] = g.abelian() ? json(min_generators_abelian(g)) : json(nullptr);
  j["permutation_group"] = pg;

  if (s.size() <= cap_subsolutions) {
    j["subsolutions"] = proper_subsolutions(s, cap_subsolutions);
    j["subsolutions_skipped"] = false;
  } else {
    j["subsolutions"] = nullptr;
    j["subsolutions_skipped"] = true;
  }

  if (s.size() <= cap_aut) {
    auto aut = automorphism_group(s);
    json a;
    a["order"] = aut.elements.size();
    a["abelian"] = aut.abelian;
    a["invariant_factors"] =
        aut.invariant_factors ? json(*aut.invariant_factors) : json(nullptr);
    j["aut"] = a;
    j["aut_skipped"] = false;
  } else {
    j["aut"] = nullptr;
    j["aut_skipped"] = true;
  }
  return j;
}

json class_to_json(const solution_class& c) {
  json j;
  j["matrix"] = c.matrix.rows();
  j["orbit_size"] = c.orbit_size;
  j["brace"] = json::parse(brace_to_json(c.permutation_brace));
  j["generator"] = c.generator;
  j["solution"] = json::parse(solution_to_json(c.representative));
  auto m = mpl(c.representative);
  j["mpl"] = m ? json(*m) : json(nullptr);
  auto ty = solution_type(c.representative);
  j["type"] = ty ? json(*ty) : json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-theoretic Yang-Baxter solutions and finite skew braces"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  std::string format = "json";
  app.add_flag("--pretty", pretty, "indented human-oriented output");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // validate
  auto* cmd_validate = app.add_subcommand("validate", "check solution or brace axioms");
  std::string validate_file;
  cmd_validate->add_option("file", validate_file, "JSON file")->required();

  // analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "full analysis of a solution");
  std::string analyze_file;
  std::size_t cap_group = perm_group::default_cap;
  int cap_subsolutions = 20, cap_aut = 16;
  cmd_analyze->add_option("file", analyze_file, "solution JSON file")->required();
  cmd_analyze->add_option("--cap-group", cap_group, "permutation-group closure cap");
  cmd_analyze->add_option("--cap-subsolutions", cap_subsolutions, "subsolution carrier cap");
  cmd_analyze->add_option("--cap-aut", cap_aut, "automorphism search carrier cap");

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "brace and solution from a matrix");
  std::string construct_type, construct_matrix;
  cmd_construct->add_option("--type", construct_type, "type signature p:d1,..,dn")->required();
  cmd_construct->add_option("--matrix", construct_matrix, "matrix file or index")->required();

  // enumerate
  auto* cmd_enumerate = app.add_subcommand("enumerate", "isomorphism classes for a type");
  std::string enumerate_type, emit_dir;
  bool verify_formula = false, verify_iso = false;
  long long cap_orbit_space = 1000000;
  cmd_enumerate->add_option("--type", enumerate_type, "type signature p:d1,..,dn")->required();
  cmd_enumerate->add_flag("--verify-formula", verify_formula, "compare against the closed formula");
  cmd_enumerate->add_flag("--verify-iso", verify_iso,
                          "confirm pairwise non-isomorphism (sizes <= 16)");
  cmd_enumerate->add_option("--emit-dir", emit_dir, "write per-class files and a manifest");
  cmd_enumerate->add_option("--cap-orbit-space", cap_orbit_space, "automorphism seed space cap");

  // count
  auto* cmd_count = app.add_subcommand("count", "closed-formula class count by size");
  long long count_p = 2;
  int count_d = 0, count_mpl_le = 2;
  cmd_count->add_option("--p", count_p, "prime")->required();
  cmd_count->add_option("--d", count_d, "total exponent: size p^d")->required();
  cmd_count->add_option("--mpl-le", count_mpl_le, "2 or 3")->required();

  // iso
  auto* cmd_iso = app.add_subcommand("iso", "solution isomorphism witness");
  std::string iso_a, iso_b;
  cmd_iso->add_option("a", iso_a, "solution JSON file")->required();
  cmd_iso->add_option("b", iso_b, "solution JSON file")->required();

  // oracle
  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force classes of a given size");
  int oracle_size = 0, cap_oracle = 6;
  cmd_oracle->add_option("--size", oracle_size, "carrier size")->required();
  cmd_oracle->add_option("--cap-oracle", cap_oracle, "carrier cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_validate) {
      std::string text = read_file(validate_file);
      json in = json::parse(text, nullptr, false);
      if (in.is_discarded()) fail(errc::bad_parameters, "invalid JSON");
      json out;
      try {
        if (in.contains("sigma")) {
          solution s = solution_from_json(text);
          out["kind"] = "solution";
          out["valid"] = true;
          out["n"] = s.size();
          out["involutive"] = s.involutive();
        } else if (in.contains("add")) {
          brace b = brace_from_json(text);
          out["kind"] = "brace";
          out["valid"] = true;
          out["n"] = b.size();
          out["additive_abelian"] = b.additive_abelian();
          out["multiplicative_abelian"] = b.multiplicative_abelian();
        } else {
          fail(errc::bad_parameters, "JSON is neither a solution (sigma) nor a brace (add)");
        }
      } catch (const error& e) {
        if (e.code == errc::bad_parameters) throw;
        out["valid"] = false;
        out["error"] = error_json(e);
        emit(out, format, pretty);
        return 1;
      }
      emit(out, format, pretty);
      return 0;
    }

    if (*cmd_analyze) {
      solution s = solution_from_json(read_file(analyze_file));
      json j = analyze_solution(s, cap_group, cap_subsolutions, cap_aut);
      emit(j, format, pretty);
      return 0;
    }

    if (*cmd_construct) {
      type_signature t = type_signature::parse(construct_type);
      class_matrix m = [&] {
        if (!construct_matrix.empty() &&
            construct_matrix.find_first_not_of("0123456789") == std::string::npos) {
          auto ms = matrices_for_type(t);
          std::size_t idx = std::stoul(construct_matrix);
          if (idx >= ms.size())
            fail(errc::bad_parameters,
                 "matrix index out of range (family has " + std::to_string(ms.size()) + ")");
          return ms[idx];
        }
        return class_matrix::checked(matrix_rows_from_text(read_file(construct_matrix)), t);
      }();
      matrix_brace mb = brace_of_matrix(m, t);
      solution s = bachiller_solution(mb.b, mb.x_index);
      json out;
      out["type"] = t.to_string();
      out["matrix"] = m.rows();
      out["generator"] = mb.x_index;
      out["brace"] = json::parse(brace_to_json(mb.b));
      out["solution"] = json::parse(solution_to_json(s));
      emit(out, format, pretty);
      return 0;
    }

    if (*cmd_enumerate) {
      type_signature t = type_signature::parse(enumerate_type);
      auto classes = enumerate_classes(t, cap_orbit_space);
      json out;
      out["type"] = t.to_string();
      out["count"] = classes.size();
      json arr = json::array();
      for (size_t i = 0; i < classes.size(); ++i) {
        json c = class_to_json(classes[i]);
        c["index"] = i;
        arr.push_back(std::move(c));
      }
      out["classes"] = arr;
      if (verify_formula) {
        try {
          long long f = count_formula(t);
          out["formula"] = f;
          out["formula_agrees"] = (f == static_cast<long long>(classes.size()));
        } catch (const error& e) {
          if (e.code != errc::unsupported) throw;
          out["formula"] = nullptr;
          out["formula_agrees"] = nullptr;
        }
      }
      if (verify_iso) {
        bool checked = true, pairwise = true;
        for (size_t i = 0; i < classes.size() && pairwise; ++i)
          for (size_t j = i + 1; j < classes.size() && pairwise; ++j) {
            if (classes[i].representative.size() > 16) {
              checked = false;
              break;
            }
            if (isomorphic_solutions(classes[i].representative, classes[j].representative))
              pairwise = false;
          }
        out["pairwise_non_isomorphic"] = checked ? json(pairwise) : json(nullptr);
        if (checked && !pairwise) {
          emit(out, format, pretty);
          return 1;
        }
      }
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (size_t i = 0; i < classes.size(); ++i) {
          std::string stem = emit_dir + "/class_" + std::to_string(i);
          std::ofstream(stem + ".solution.json")
              << solution_to_json(classes[i].representative) << "\n";
          std::ofstream(stem + ".brace.json") << brace_to_json(classes[i].permutation_brace)
                                              << "\n";
          std::ofstream(stem + ".matrix.txt") << matrix_to_text(classes[i].matrix);
        }
        std::ofstream(emit_dir + std::string("/manifest.json")) << out.dump() << "\n";
      }
      if (verify_formula && out.contains("formula_agrees") &&
          out["formula_agrees"].is_boolean() && !out["formula_agrees"].get<bool>()) {
        emit(out, format, pretty);
        return 1;
      }
      emit(out, format, pretty);
      return 0;
    }

    if (*cmd_count) {
      long long c = count_size_mpl_le(count_p, count_d, count_mpl_le);
      if (format == "json" && !pretty) {
        std::cout << c << "\n";  // bare exact integer
      } else {
        json out;
        out["count"] = c;
        out["p"] = count_p;
        out["d"] = count_d;
        out["mpl_le"] = count_mpl_le;
        emit(out, format, pretty);
      }
      return 0;
    }

    if (*cmd_iso) {
      solution a = solution_from_json(read_file(iso_a));
      solution b = solution_from_json(read_file(iso_b));
      auto w = isomorphic_solutions(a, b);
      json out;
      out["isomorphic"] = w.has_value();
      out["witness"] = w ? json(*w) : json(nullptr);
      emit(out, format, pretty);
      return w ? 0 : 1;
    }

    if (*cmd_oracle) {
      auto classes = oracle_bruteforce_classes(oracle_size, cap_oracle);
      json out;
      out["size"] = oracle_size;
      out["count"] = classes.size();
      json arr = json::array();
      for (const auto& s : classes) arr.push_back(json::parse(solution_to_json(s)));
      out["classes"] = arr;
      emit(out, format, pretty);
      return 0;
    }
  } catch (const error& e) {
    json out;
    out["error"] = error_json(e);
    emit(out, format, pretty);
    return exit_code_for(e);
  }
  return 2;
}
