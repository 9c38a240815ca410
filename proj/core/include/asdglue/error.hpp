#pragma once

#include <stdexcept>
#include <string>

namespace asdglue {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at the center of an exterior radial gauge.
class GaugeSingularity : public Error {
 public:
  using Error::Error;
};

/// The background is degenerate at p or q, so the reducibility targets do
/// not exist. The caller must resample the field.
class DegenerateTarget : public Error {
 public:
  using Error::Error;
};

/// Multi-start search finished without finding the expected minima.
class OracleInconclusive : public Error {
 public:
  using Error::Error;
};

/// Jacobian at a solution is too close to singular for a reliable sign.
class NearDegenerate : public Error {
 public:
  using Error::Error;
};

}  // namespace asdglue
