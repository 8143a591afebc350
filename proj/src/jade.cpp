#include "mdg/jade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mdg {

double off_norm(const Matrix& m) {
  double total = 0.0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != j) total += m(i, j) * m(i, j);
    }
  }
  return total;
}

MatrixSet::MatrixSet(std::vector<Matrix> matrices) : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw InputError("matrix set is empty");
  const Index n = matrices_.front().rows();
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const Matrix& m = matrices_[i];
    if (m.rows() != n || m.cols() != n) {
      throw InputError("matrix " + std::to_string(i) + " is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" +
                       std::to_string(n));
    }
    if (!m.allFinite()) throw InputError("matrix " + std::to_string(i) + " has non-finite entries");
    if (asymmetry(m) > 1e-12) throw InputError("matrix " + std::to_string(i) + " is not symmetric");
  }
}

void JadeOptions::validate(std::size_t matrix_count) const {
  if (max_sweeps <= 0) throw ParameterError("max_sweeps must be positive");
  if (!(rel_tol > 0.0)) throw ParameterError("rel_tol must be positive");
  if (!(rotation_threshold > 0.0)) throw ParameterError("rotation_threshold must be positive");
  if (!weights.empty()) {
    if (weights.size() != matrix_count) {
      throw ParameterError("expected " + std::to_string(matrix_count) + " matrix weights, got " +
                           std::to_string(weights.size()));
    }
    for (double w : weights) {
      if (!(w > 0.0)) throw ParameterError("matrix weights must be positive");
    }
  }
}

Rotation rotation_for_pair(std::span<const Matrix> set, Index p, Index q,
                           std::span<const double> weights) {
  // With r_pq = s, r_qp = -s the rotated off-diagonal entry is
  // cos(2t) a_pq + sin(2t) (a_pp - a_qq) / 2, so the optimal (cos 2t, sin 2t)
  // is the top eigenvector of sum_i w_i h_i h_i^T, h_i = (a_pp - a_qq, -2 a_pq).
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Matrix& a = set[i];
    const double w = weights.empty() ? 1.0 : weights[i];
    const double h1 = a(p, p) - a(q, q);
    const double h2 = -2.0 * a(p, q);
    g11 += w * h1 * h1;
    g12 += w * h1 * h2;
    g22 += w * h2 * h2;
  }
  const double ton = g11 - g22;
  const double toff = 2.0 * g12 + 0.0;  // +0.0 folds -0 so a tie at x = 0 resolves to y > 0
  const double phi = 0.5 * std::atan2(toff, ton);
  const double x = std::cos(phi);
  const double y = std::sin(phi);
  const double c = std::sqrt((x + 1.0) / 2.0);
  return {c, y / (2.0 * c)};
}

void rotate_symmetric(Matrix& a, Index p, Index q, Rotation r) {
  const Index n = a.rows();
  const double c = r.c, s = r.s;
  const double app = a(p, p), aqq = a(q, q), apq = a(p, q);
  double* col_p = a.col(p).data();
  double* col_q = a.col(q).data();
  for (Index k = 0; k < n; ++k) {
    const double kp = col_p[k];
    const double kq = col_q[k];
    col_p[k] = c * kp - s * kq;
    col_q[k] = s * kp + c * kq;
  }
  for (Index k = 0; k < n; ++k) {
    a(p, k) = col_p[k];
    a(q, k) = col_q[k];
  }
  const double cs = c * s;
  a(p, p) = c * c * app - 2.0 * cs * apq + s * s * aqq;
  a(q, q) = s * s * app + 2.0 * cs * apq + c * c * aqq;
  a(p, q) = a(q, p) = cs * (app - aqq) + (c * c - s * s) * apq;
}

void rotate_columns(Matrix& v, Index p, Index q, Rotation r) {
  double* col_p = v.col(p).data();
  double* col_q = v.col(q).data();
  for (Index k = 0; k < v.rows(); ++k) {
    const double kp = col_p[k];
    const double kq = col_q[k];
    col_p[k] = r.c * kp - r.s * kq;
    col_q[k] = r.s * kp + r.c * kq;
  }
}

namespace {

double weighted_off(const std::vector<Matrix>& ms, const std::vector<double>& w) {
  double total = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) total += w[i] * off_norm(ms[i]);
  return total;
}

}  // namespace

JointBasis jade(const MatrixSet& set, const JadeOptions& options, const RotationObserver& observer) {
  options.validate(set.count());
  const Index n = set.dim();
  const std::size_t m = set.count();
  const std::vector<double> w =
      options.weights.empty() ? std::vector<double>(m, 1.0) : options.weights;

  std::vector<Matrix> work = set.matrices();
  Matrix v = Matrix::Identity(n, n);

  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) scale += w[i] * work[i].squaredNorm();
  const double stop_decrease = options.rel_tol * scale;

  double off_before = weighted_off(work, w);
  int sweeps = 0;
  while (sweeps < options.max_sweeps) {
    ++sweeps;
    std::size_t applied = 0;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Rotation r = rotation_for_pair(work, p, q, w);
        if (std::abs(r.s) < options.rotation_threshold) continue;
        for (auto& a : work) rotate_symmetric(a, p, q, r);
        rotate_columns(v, p, q, r);
        ++applied;
        if (observer) observer(work, p, q);
      }
    }
    const double off_after = weighted_off(work, w);
    const bool stalled = applied == 0 || off_before - off_after < stop_decrease;
    off_before = off_after;
    if (stalled) break;
  }

  Matrix diag(static_cast<Index>(m), n);
  double residual = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    diag.row(static_cast<Index>(i)) = work[i].diagonal().transpose();
    residual += off_norm(work[i]);
  }
  const Vector means = diag.colwise().mean().transpose();

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return means[a] < means[b]; });

  JointBasis out;
  out.basis.resize(n, n);
  out.per_modality_eigs.resize(static_cast<Index>(m), n);
  out.joint_eigs.resize(n);
  for (Index j = 0; j < n; ++j) {
    const Index src = order[static_cast<std::size_t>(j)];
    out.basis.col(j) = v.col(src);
    out.per_modality_eigs.col(j) = diag.col(src);
    out.joint_eigs[j] = means[src];
    Index top = 0;
    out.basis.col(j).cwiseAbs().maxCoeff(&top);
    if (out.basis(top, j) < 0.0) out.basis.col(j) *= -1.0;
  }
  out.residual = residual;
  out.sweeps_used = sweeps;
  return out;
}

JointEigenReport joint_eigendecomposition_report(const MatrixSet& set, const Matrix& basis) {
  const Index n = set.dim();
  if (basis.rows() != n || basis.cols() != n) throw InputError("basis has the wrong shape");
  const double ortho = (basis.transpose() * basis - Matrix::Identity(n, n)).norm();
  if (!(ortho <= 1e-8)) {
    throw InputError("basis is not orthogonal (||B^T B - I||_F = " + std::to_string(ortho) + ")");
  }
  JointEigenReport out;
  out.per_modality_eigs.resize(static_cast<Index>(set.count()), n);
  for (std::size_t i = 0; i < set.count(); ++i) {
    const Matrix rotated = basis.transpose() * set[i] * basis;
    out.per_modality_eigs.row(static_cast<Index>(i)) = rotated.diagonal().transpose();
    out.residual += off_norm(rotated);
  }
  out.joint_eigs = out.per_modality_eigs.colwise().mean().transpose();
  return out;
}

}  // namespace mdg
