#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxshadow {

enum class Errc {
  UnsupportedType,
  NotAffine,
  NotIncident,
  NotWallConsistent,
  NotPeriodic,
  OrientationUndefined,
  PositionOutOfRange,
  WordTooLong,
  BoundRequiresWeylOrientation,
  RequiresWeylOrientation,
  NotBraidInvariant,
  LengthNotAdditive,
  NotADescent,
  Exceeded,
  RenderUnsupported,
  ArithmeticOverflow,
  Parse,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::NotAffine: return "NotAffine";
    case Errc::NotIncident: return "NotIncident";
    case Errc::NotWallConsistent: return "NotWallConsistent";
    case Errc::NotPeriodic: return "NotPeriodic";
    case Errc::OrientationUndefined: return "OrientationUndefined";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::WordTooLong: return "WordTooLong";
    case Errc::BoundRequiresWeylOrientation: return "BoundRequiresWeylOrientation";
    case Errc::RequiresWeylOrientation: return "RequiresWeylOrientation";
    case Errc::NotBraidInvariant: return "NotBraidInvariant";
    case Errc::LengthNotAdditive: return "LengthNotAdditive";
    case Errc::NotADescent: return "NotADescent";
    case Errc::Exceeded: return "Exceeded";
    case Errc::RenderUnsupported: return "RenderUnsupported";
    case Errc::ArithmeticOverflow: return "ArithmeticOverflow";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace coxshadow
