#pragma once

#include <stdexcept>
#include <string>

namespace mcover {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kParseError,
  kIoError,
  kGraph6Multigraph,
  kNoPerfectMatching,
  kNotMatchingCovered,
  kIncomplete,
  kBudgetExhausted,
  kDimensionTooLarge,
  kInvalidParameter,
  kEdgeNotInGraph,
  kNotEquivalent,
  kColoringMismatch,
  kInternal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcover
