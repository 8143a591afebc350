#pragma once

#include "mdg/common.hpp"

#include <functional>
#include <span>
#include <vector>

namespace mdg {

/// Sum of squared off-diagonal entries, ||M - diag(M)||_F^2.
double off_norm(const Matrix& m);

/// m >= 1 dense symmetric matrices of a common size n.
class MatrixSet {
 public:
  explicit MatrixSet(std::vector<Matrix> matrices);

  const std::vector<Matrix>& matrices() const { return matrices_; }
  const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
  std::size_t count() const { return matrices_.size(); }
  Index dim() const { return matrices_.front().rows(); }

 private:
  std::vector<Matrix> matrices_;
};

struct JadeOptions {
  int max_sweeps = 100;
  /// Stop once a full sweep lowers the total off criterion by less than
  /// rel_tol * sum_i ||L_i||_F^2.
  double rel_tol = 1e-12;
  /// Rotations with |s| below this are skipped.
  double rotation_threshold = 1e-14;
  /// Optional per-matrix weights on the off criterion; empty means all 1.
  std::vector<double> weights;

  void validate(std::size_t matrix_count) const;
};

/// Plane rotation acting on coordinates (p, q): r_pp = r_qq = c, r_pq = s,
/// r_qp = -s.
struct Rotation {
  double c = 1.0;
  double s = 0.0;
};

/// Closed-form rotation minimizing sum_i w_i off(R^T A_i R) over the (p, q)
/// plane. Requires p < q.
Rotation rotation_for_pair(std::span<const Matrix> set, Index p, Index q,
                           std::span<const double> weights = {});

/// In-place A <- R^T A R for symmetric A.
void rotate_symmetric(Matrix& a, Index p, Index q, Rotation r);

/// In-place V <- V R (columns p and q).
void rotate_columns(Matrix& v, Index p, Index q, Rotation r);

struct JointBasis {
  Matrix basis;              ///< n x n orthogonal, columns are joint eigenvectors
  Matrix per_modality_eigs;  ///< m x n, row i = diag(V^T L_i V)
  Vector joint_eigs;         ///< column means of per_modality_eigs, ascending
  double residual = 0.0;     ///< sum_i off(V^T L_i V)
  int sweeps_used = 0;
};

/// Called after every accepted rotation with the current rotated matrices.
using RotationObserver = std::function<void(const std::vector<Matrix>& rotated, Index p, Index q)>;

/// Approximate joint diagonalization by cyclic Jacobi sweeps over (p, q),
/// p < q in row-major order. The result is sorted by joint eigenvalue
/// (stable) and each column's largest-magnitude entry is made nonnegative.
JointBasis jade(const MatrixSet& set, const JadeOptions& options = {},
                const RotationObserver& observer = {});

struct JointEigenReport {
  Matrix per_modality_eigs;
  Vector joint_eigs;
  double residual = 0.0;
};

/// Diagonals and residual of basis^T L_i basis; throws InputError if the
/// basis is not orthogonal within 1e-8.
JointEigenReport joint_eigendecomposition_report(const MatrixSet& set, const Matrix& basis);

}  // namespace mdg
