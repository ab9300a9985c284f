#ifndef SUPG_ERRORS_HPP
#define SUPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supg {

struct UnsupportedDegree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AssemblyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDomain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedMetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OptimizationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormalizationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrainingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeserializationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A chained command needs a file another command should have produced.
struct UpstreamArtifactMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace supg

#endif
