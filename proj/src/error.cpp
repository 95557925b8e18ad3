#include "hym/error.hpp"

#include <stdexcept>
#include <string>

#include "hym/det.hpp"

namespace hym {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BadPartition: return "BadPartition";
    case Errc::OrderTooLow: return "OrderTooLow";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotHypercubic: return "NotHypercubic";
    case Errc::NotHypersquare: return "NotHypersquare";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::MidMismatch: return "MidMismatch";
    case Errc::MidsVectorMismatch: return "MidsVectorMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::Singular: return "Singular";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TallSlice: return "TallSlice";
    case Errc::BadK: return "BadK";
    case Errc::ZeroSliceVector: return "ZeroSliceVector";
    case Errc::NotMember: return "NotMember";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::BadShape: return "BadShape";
  }
  return "Unknown";
}

DetKind parse_det_kind(std::string_view name) {
  if (name == "cdet") return DetKind::Combinatorial;
  if (name == "ddet") return DetKind::Modified;
  if (name == "sdet") return DetKind::SliceBased;
  throw std::invalid_argument("unknown determinant kind '" + std::string(name) + "'");
}

std::string_view det_kind_name(DetKind kind) noexcept {
  switch (kind) {
    case DetKind::Combinatorial: return "cdet";
    case DetKind::Modified: return "ddet";
    case DetKind::SliceBased: return "sdet";
  }
  return "sdet";
}

}  // namespace hym
