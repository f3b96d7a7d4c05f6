#pragma once

#include <stdexcept>
#include <string>

namespace petcm {

enum class ErrorCode {
  ShapeMismatch,
  DegenerateRange,
  InvalidSchedule,
  ZeroTimestep,
  OddDimension,
  IndivisibleSize,
  TimestepBelowEps,
  NoRecordedGraph,
  IndexOutOfGrid,
  NonFiniteGradient,
  EmptyDataset,
  InvalidPlan,
  EmptyList,
  TargetTooSmall,
  PatchTooLarge,
  LayoutMismatch,
  TooSmallForScales,
  ConstantImage,
  EmptyRoi,
  NegativeActivity,
  BadConfig,
  IoError,
};

const char* to_string(ErrorCode code);

/// All library failures throw this; code() tells callers which contract broke.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace petcm
