#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace rtps {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Base class of all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid problem dimensions: 2m <= d, n <= M, or mismatched sizes.
struct DimensionError : Error {
  using Error::Error;
};

/// Two design points coincide (relative to the data diameter).
struct DuplicatePointsError : Error {
  using Error::Error;
};

/// The polynomial design matrix does not have full column rank.
struct RankDeficientError : Error {
  using Error::Error;
};

/// The reduced normal equations resist factorization even with jitter.
struct SingularSystemError : Error {
  using Error::Error;
};

/// A hat-diagonal entry is too close to 1 for the leave-one-out formula.
struct LeverageOneError : Error {
  using Error::Error;
};

/// A converged fit was required but the iteration hit max_iter.
struct NoConvergenceError : Error {
  using Error::Error;
};

/// Every lambda in a selection grid failed to produce a criterion value.
struct AllFailedError : Error {
  using Error::Error;
};

/// Malformed input document (CSV, config file, or model file).
struct ParseError : Error {
  using Error::Error;
};

/// Regression sample: n covariate rows in R^d plus one response per row.
template <typename Scalar = double>
struct Dataset {
  Matrix<Scalar> points;     // n x d
  Vector<Scalar> responses;  // n

  Index n() const { return points.rows(); }
  Index dim() const { return points.cols(); }

  void validate() const {
    if (points.rows() < 1 || points.cols() < 1)
      throw DimensionError("dataset needs at least one point with d >= 1");
    if (responses.size() != points.rows())
      throw DimensionError("responses length " + std::to_string(responses.size()) +
                           " does not match point count " + std::to_string(points.rows()));
  }
};

}  // namespace rtps
