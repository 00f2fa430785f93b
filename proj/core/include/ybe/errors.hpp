#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ybe {

enum class errc {
  out_of_range_entry,
  non_bijective_row,
  braid_failure,
  not_involutive,
  group_too_large,
  not_abelian,
  carrier_too_large,
  not_a_group,
  brace_axiom_failure,
  not_an_ideal,
  bad_parameters,
  size_mismatch,
  modulus_mismatch,
  matrix_not_in_normal_form,
  wrong_type,
  bad_automorphism_seed,
  search_space_too_large,
  not_in_transitive_cycle_base,
  condition_violated,
  not_a_cycle_base,
  unsupported,
};

const char* errc_name(errc c);

/// Failure of a validation or precondition. `witness` holds the indices of
/// the offending element/pair/triple where one exists.
class error : public std::runtime_error {
public:
  error(errc code, std::string msg, std::vector<long long> witness = {})
      : std::runtime_error(std::move(msg)), code(code), witness(std::move(witness)) {}

  errc code;
  std::vector<long long> witness;
};

[[noreturn]] inline void fail(errc code, std::string msg, std::vector<long long> witness = {}) {
  throw error(code, std::move(msg), std::move(witness));
}

}  // namespace ybe
