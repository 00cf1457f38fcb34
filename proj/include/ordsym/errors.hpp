#pragma once

#include <exception>
#include <string>
#include <string_view>

namespace ordsym {

// Base class for all library errors. Pipeline drivers prepend the failing
// stage via set_stage() so that a propagated error names where it happened.
class Error : public std::exception {
 public:
  explicit Error(std::string message) : message_(std::move(message)), composed_(message_) {}

  void set_stage(std::string_view stage) {
    if (stage_.empty()) {
      stage_ = std::string(stage);
    } else {
      stage_ = std::string(stage) + ": " + stage_;
    }
    composed_ = stage_ + ": " + message_;
  }

  const char* what() const noexcept override { return composed_.c_str(); }

 private:
  std::string stage_;
  std::string message_;
  std::string composed_;
};

#define ORDSYM_ERROR_TYPE(NAME) \
  struct NAME : Error {         \
    using Error::Error;         \
  }

ORDSYM_ERROR_TYPE(WindowTooShort);
ORDSYM_ERROR_TYPE(SeriesTooShort);
ORDSYM_ERROR_TYPE(NonFiniteValue);
ORDSYM_ERROR_TYPE(IdOutOfRange);
ORDSYM_ERROR_TYPE(OrderOutOfRange);
ORDSYM_ERROR_TYPE(DuplicatePattern);
ORDSYM_ERROR_TYPE(NotAPartition);
ORDSYM_ERROR_TYPE(BadPatternLiteral);
ORDSYM_ERROR_TYPE(DimensionMismatch);
ORDSYM_ERROR_TYPE(TooFewWindows);
ORDSYM_ERROR_TYPE(NotAProbabilityVector);
ORDSYM_ERROR_TYPE(ZeroGroupProbability);
ORDSYM_ERROR_TYPE(UnknownKernel);
ORDSYM_ERROR_TYPE(BandwidthTooSmall);
ORDSYM_ERROR_TYPE(DegenerateModel);
ORDSYM_ERROR_TYPE(NotPSD);
ORDSYM_ERROR_TYPE(EmptySample);
ORDSYM_ERROR_TYPE(UnstableAR);
ORDSYM_ERROR_TYPE(UnknownMarginal);
ORDSYM_ERROR_TYPE(BadProcessSpec);
ORDSYM_ERROR_TYPE(FileNotFound);
ORDSYM_ERROR_TYPE(ParseError);
ORDSYM_ERROR_TYPE(EmptySeries);
ORDSYM_ERROR_TYPE(NonPositiveValue);
ORDSYM_ERROR_TYPE(UnknownExperiment);

#undef ORDSYM_ERROR_TYPE

}  // namespace ordsym
