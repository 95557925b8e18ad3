#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hym {

enum class Errc {
  LengthMismatch,
  BadPartition,
  OrderTooLow,
  ArityMismatch,
  NotHypercubic,
  NotHypersquare,
  NotSquare,
  DimensionMismatch,
  MidMismatch,
  MidsVectorMismatch,
  ShapeMismatch,
  Singular,
  TooLarge,
  TallSlice,
  BadK,
  ZeroSliceVector,
  NotMember,
  UnknownSuite,
  BadShape,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by every hym operation. The code is stable and is what
/// the CLI prints; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hym
