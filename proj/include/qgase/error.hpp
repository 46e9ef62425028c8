#pragma once

#include <stdexcept>
#include <string>

namespace qgase {

enum class ErrorCode {
  // graph construction / validation
  self_loop,
  duplicate_edge,
  index_out_of_range,
  dirichlet_on_interior_vertex,
  disconnected_channel,
  non_positive_length,
  invalid_channel_order,
  fraction_out_of_range,
  non_positive_factor,
  bad_graph_file,
  // word / family builders
  empty_word,
  word_too_short,
  unsupported_family,
  // numerics
  singular_system,
  no_channels,
  normalization_failure,
  not_equilateral,
  no_convergence,
  too_few_samples,
  invalid_argument,
};

const char* to_string(ErrorCode code);

/// True for failures of the numerical machinery (as opposed to bad inputs).
/// The CLI maps these to exit code 3, everything else to exit code 2.
bool is_numerical_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& msg);

}  // namespace qgase
