#include "qgase/error.hpp"

namespace qgase {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::dirichlet_on_interior_vertex: return "DirichletOnInteriorVertex";
    case ErrorCode::disconnected_channel: return "DisconnectedChannel";
    case ErrorCode::non_positive_length: return "NonPositiveLength";
    case ErrorCode::invalid_channel_order: return "InvalidChannelOrder";
    case ErrorCode::fraction_out_of_range: return "FractionOutOfRange";
    case ErrorCode::non_positive_factor: return "NonPositiveFactor";
    case ErrorCode::bad_graph_file: return "BadGraphFile";
    case ErrorCode::empty_word: return "EmptyWord";
    case ErrorCode::word_too_short: return "WordTooShort";
    case ErrorCode::unsupported_family: return "UnsupportedFamily";
    case ErrorCode::singular_system: return "SingularSystem";
    case ErrorCode::no_channels: return "NoChannels";
    case ErrorCode::normalization_failure: return "NormalizationFailure";
    case ErrorCode::not_equilateral: return "NotEquilateral";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::too_few_samples: return "TooFewSamples";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

bool is_numerical_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::singular_system:
    case ErrorCode::normalization_failure:
    case ErrorCode::no_convergence:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace qgase
