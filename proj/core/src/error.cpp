#include "origami/error.hpp"

namespace origami {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::EtaDegreeCapExceeded: return "EtaDegreeCapExceeded";
    case Errc::Parse: return "Parse";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SameDirection: return "SameDirection";
    case Errc::MissingUnitDirection: return "MissingUnitDirection";
    case Errc::TooFewAngles: return "TooFewAngles";
    case Errc::DuplicateAngle: return "DuplicateAngle";
    case Errc::DepthOutOfRange: return "DepthOutOfRange";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NonRationalScalar: return "NonRationalScalar";
    case Errc::DegenerateTau: return "DegenerateTau";
    case Errc::CollidingDirections: return "CollidingDirections";
    case Errc::ZeroQuaternion: return "ZeroQuaternion";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::RankDeficientBasis: return "RankDeficientBasis";
    case Errc::CannotTriangularize: return "CannotTriangularize";
    case Errc::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace origami
