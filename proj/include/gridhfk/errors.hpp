// Error taxonomy shared by the whole library.
//
// Every failure the library can signal is a subclass of GridError carrying a
// stable machine-readable code.  The CLI maps codes to process exit status:
// domain errors -> 1, usage errors -> 2, resource limits -> 3.
#pragma once

#include <stdexcept>
#include <string>

namespace gridhfk {

enum class ErrorCode {
  Syntax,              // unparseable textual/JSON input
  Validation,          // structurally parseable but not a valid grid diagram
  IllegalMove,         // move request violates its legality conditions
  LimitExceeded,       // enumeration or solver exceeds configured bounds
  DimensionMismatch,   // chain/diagram size disagreement
  NotAKnot,            // operation defined only for single-component diagrams
  NotACommutationPair, // adjacent columns/rows do not commute
  UnsupportedType,     // operation not provided for this move flavour
  CycleCheckFailed,    // internal audit: canonical chain failed d(x)=0
};

class GridError : public std::runtime_error {
 public:
  GridError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Convenience subclasses so call sites and tests can catch precisely.
#define GRIDHFK_DEFINE_ERROR(Name, Code)                    \
  class Name : public GridError {                           \
   public:                                                  \
    explicit Name(const std::string& what)                  \
        : GridError(ErrorCode::Code, what) {}               \
  };

GRIDHFK_DEFINE_ERROR(SyntaxError, Syntax)
GRIDHFK_DEFINE_ERROR(ValidationError, Validation)
GRIDHFK_DEFINE_ERROR(IllegalMove, IllegalMove)
GRIDHFK_DEFINE_ERROR(LimitExceeded, LimitExceeded)
GRIDHFK_DEFINE_ERROR(DimensionMismatch, DimensionMismatch)
GRIDHFK_DEFINE_ERROR(NotAKnot, NotAKnot)
GRIDHFK_DEFINE_ERROR(NotACommutationPair, NotACommutationPair)
GRIDHFK_DEFINE_ERROR(UnsupportedType, UnsupportedType)
GRIDHFK_DEFINE_ERROR(CycleCheckFailed, CycleCheckFailed)

#undef GRIDHFK_DEFINE_ERROR

const char* error_code_name(ErrorCode code);

}  // namespace gridhfk
