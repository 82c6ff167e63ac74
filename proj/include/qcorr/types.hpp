#pragma once

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorCode {
  ShapeMismatch,
  NotCStar,
  NotPositive,
  NotCoassociative,
  GaloisSingular,
  NoSolution,
  NoHaarState,
  HaarNotFaithful,
  NotInvariant,
  ZeroSubalgebra,
  DegenerateVector,
  InvalidSubgroup,
  HypothesisFailed,
  InvalidGroup,
  NotNormal,
  TooLarge,
  UnknownKind,
  ParseError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Global default tolerance; QCORR_TOL overrides, CLI can override per run.
double default_tol();

/// Global default RNG seed; QCORR_SEED overrides.
std::uint64_t default_seed();

}  // namespace qcorr
