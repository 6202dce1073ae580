#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace katolab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Base class of all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalFailure : Error {
  using Error::Error;
};
struct SpectrumOnCut : Error {
  using Error::Error;
};
struct SingularResolvent : Error {
  using Error::Error;
};
struct NotPositive : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotAccretive : Error {
  using Error::Error;
};
struct IllConditionedEmbedding : Error {
  using Error::Error;
};
struct InvariantBreach : Error {
  using Error::Error;
};
struct QuadratureDivergence : Error {
  using Error::Error;
};
struct KindMismatch : Error {
  using Error::Error;
};
struct BadParameter : Error {
  using Error::Error;
};
struct RangeScalingFailed : Error {
  using Error::Error;
};

/// Witness search exhausted its budget; carries the best margin reached.
struct NoCertificateFound : Error {
  double best_margin;
  NoCertificateFound(const std::string& what, double margin)
      : Error(what), best_margin(margin) {}
};

}  // namespace katolab
