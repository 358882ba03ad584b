#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace spatch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix/vector dimension mismatch.
struct ShapeError : Error {
  using Error::Error;
};

// A programmatically derived matrix disagrees with its embedded reference
// data, or an exact rank came out wrong. Signals a transcription or
// convention bug, never bad user input.
struct DerivationError : Error {
  using Error::Error;
};

// Boundary tangents violate the corner/tangent compatibility constraint
// beyond tolerance. Carries the per-coordinate residuals.
struct IncompatibleTangentsError : Error {
  IncompatibleTangentsError(const std::string& msg, std::array<double, 3> r)
      : Error(msg), residuals(r) {}
  std::array<double, 3> residuals{};
};

// du x dv vanished where a unit normal was requested.
struct DegenerateNormalError : Error {
  DegenerateNormalError(const std::string& msg, double u_, double v_)
      : Error(msg), u(u_), v(v_) {}
  double u = 0.0;
  double v = 0.0;
};

// A patch handed to alpha/beta extraction does not satisfy the twist
// identities.
struct NotAnSPatchError : Error {
  using Error::Error;
};

// Construction produced a patch that fails its own degree check.
struct InternalDegreeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::string ctx = {})
      : Error(msg), context(std::move(ctx)) {}
  std::string context;  // JSON path / patch id the error refers to
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace spatch
