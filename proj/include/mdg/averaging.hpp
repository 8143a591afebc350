#pragma once

// Closed-form "average Laplacian" alternatives to joint diagonalization for
// the clustering regime, where only the (near-)null joint eigenvectors matter.

#include "mdg/common.hpp"
#include "mdg/jade.hpp"

#include <variant>
#include <vector>

namespace mdg {

/// sum_i L_i^2 = sum_i L_i^T L_i.
struct SquaredSum {};

/// sum_i w_i L_i with weights normalized to sum 1; empty means equal weights.
class Arithmetic {
 public:
  Arithmetic() = default;
  explicit Arithmetic(std::vector<double> weights);
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

/// Regularized harmonic mean (sum_i (L_i + alpha I)^{-1})^{-1}.
struct Harmonic {
  double alpha = 1.0;
};

using AveragingMode = std::variant<SquaredSum, Arithmetic, Harmonic>;

Matrix average_laplacian(const MatrixSet& set, const AveragingMode& mode);

/// The matrix whose k smallest-eigenvalue eigenvectors solve the multimodal
/// clustering relaxation min sum_i ||L_i V||_F^2 (SquaredSum) or its
/// arithmetic / harmonic variants.
Matrix null_space_clustering_matrix(const MatrixSet& set, const AveragingMode& mode);

}  // namespace mdg
