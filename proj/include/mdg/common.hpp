#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;
using Index = Eigen::Index;

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the range an operation accepts (k >= n, t <= 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data: NaN entries, shape mismatch, non-orthogonal basis.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The data is well-formed but the numerics break down
/// (isolated vertex, zero self-tuning scale, non-PD factorization).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Max |a_ij - a_ji| relative to the largest |a_ij|; 0 for the zero matrix.
double asymmetry(const Matrix& m);

}  // namespace mdg
