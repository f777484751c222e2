#pragma once

#include <stdexcept>
#include <string>

namespace ovmq {

enum class ErrorCode {
  invalid_argument,
  integrability,
  node_evaluation,
  divergent_moment,
  grid_mismatch,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorCode::invalid_argument, w) {}
};

// No convergent quadrature exists for the requested weight (e.g. Cahill-Glauber
// with Re s >= 0); the analytic construction must be used instead.
struct IntegrabilityError : Error {
  explicit IntegrabilityError(const std::string& w) : Error(ErrorCode::integrability, w) {}
};

struct NodeEvaluationError : Error {
  explicit NodeEvaluationError(const std::string& w) : Error(ErrorCode::node_evaluation, w) {}
};

struct DivergentMomentError : Error {
  explicit DivergentMomentError(const std::string& w) : Error(ErrorCode::divergent_moment, w) {}
};

struct GridMismatchError : Error {
  explicit GridMismatchError(const std::string& w) : Error(ErrorCode::grid_mismatch, w) {}
};

}  // namespace ovmq
