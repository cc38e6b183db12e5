#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdmap {

enum class Errc {
  NonInvolutiveTwin,
  InvalidRotation,
  DisconnectedMap,
  EulerViolation,
  NotPolyhedral,
  NotSelfDual,
  NotStronglyInvolutive,
  NoCatalogMatch,
  AmbiguousMatch,
  UnknownVertex,
  UnknownFace,
  FaceNotFound,
  InvalidSymbol,
  ClosureOverflow,
  QTooSmall,
  BadParams,
  NotAntipodalPairing,
  PointOutsideRegion,
  MergeAmbiguity,
  EmptyDoodle,
  UnsupportedMap,
  StepFailed,
  FormatError,
  FileNotFound,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonInvolutiveTwin: return "NonInvolutiveTwin";
    case Errc::InvalidRotation: return "InvalidRotation";
    case Errc::DisconnectedMap: return "DisconnectedMap";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::NotPolyhedral: return "NotPolyhedral";
    case Errc::NotSelfDual: return "NotSelfDual";
    case Errc::NotStronglyInvolutive: return "NotStronglyInvolutive";
    case Errc::NoCatalogMatch: return "NoCatalogMatch";
    case Errc::AmbiguousMatch: return "AmbiguousMatch";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::FaceNotFound: return "FaceNotFound";
    case Errc::InvalidSymbol: return "InvalidSymbol";
    case Errc::ClosureOverflow: return "ClosureOverflow";
    case Errc::QTooSmall: return "QTooSmall";
    case Errc::BadParams: return "BadParams";
    case Errc::NotAntipodalPairing: return "NotAntipodalPairing";
    case Errc::PointOutsideRegion: return "PointOutsideRegion";
    case Errc::MergeAmbiguity: return "MergeAmbiguity";
    case Errc::EmptyDoodle: return "EmptyDoodle";
    case Errc::UnsupportedMap: return "UnsupportedMap";
    case Errc::StepFailed: return "StepFailed";
    case Errc::FormatError: return "FormatError";
    case Errc::FileNotFound: return "FileNotFound";
  }
  return "Unknown";
}

/// Domain error carrying a machine-readable code; the message names the
/// violated invariant.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sdmap
