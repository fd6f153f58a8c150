#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace origami {

enum class Errc {
  DivisionByZero,
  EtaDegreeCapExceeded,
  Parse,
  ZeroVector,
  DimensionMismatch,
  SameDirection,
  MissingUnitDirection,
  TooFewAngles,
  DuplicateAngle,
  DepthOutOfRange,
  RankDeficient,
  NonRationalScalar,
  DegenerateTau,
  CollidingDirections,
  ZeroQuaternion,
  ZeroDirection,
  RankDeficientBasis,
  CannotTriangularize,
  Config,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace origami
