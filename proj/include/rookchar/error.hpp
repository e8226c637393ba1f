#ifndef ROOKCHAR_ERROR_HPP_
#define ROOKCHAR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rookchar {

enum class Errc {
  // rook_core
  DuplicateInput,
  DuplicateOutput,
  NonPositiveIndex,
  DuplicatePoint,
  SupportExceedsDimension,
  BoundExceeded,
  // notation
  SyntaxError,
  EmptyCycle,
  // thoma
  NotDescending,
  MassExceedsOne,
  RhoIndexOutOfRange,
  // gram_lab
  NotSymmetric,
  NoConvergence,
  EmptyPool,
  // tensor_oracle
  TraceExceedsOne,
  QOnNonpositive,
  KernelTooSmall,
  BadDimension,
  SupportExceedsTruncation,
  EMinusIsFull,
  // cli / misc
  InvalidArgument,
};

// Single exception type; `position` is set for parse errors (byte offset
// into the source text), -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int position = -1)
      : std::runtime_error(msg), code_(code), position_(position) {}

  Errc code() const { return code_; }
  int position() const { return position_; }

 private:
  Errc code_;
  int position_;
};

}  // namespace rookchar

#endif  // ROOKCHAR_ERROR_HPP_
