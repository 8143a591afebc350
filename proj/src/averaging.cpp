#include "mdg/averaging.hpp"

#include <Eigen/Cholesky>

#include <numeric>
#include <string>

namespace mdg {

Arithmetic::Arithmetic(std::vector<double> weights) : weights_(std::move(weights)) {
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw ParameterError("arithmetic-mean weights must be positive");
    total += w;
  }
  for (double& w : weights_) w /= total;
}

namespace {

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

Matrix inverse_pd(const Matrix& m, double alpha) {
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NumericError("L + alpha I is not numerically positive definite at alpha=" +
                       std::to_string(alpha) + "; increase alpha");
  }
  return llt.solve(Matrix::Identity(m.rows(), m.cols()));
}

}  // namespace

Matrix average_laplacian(const MatrixSet& set, const AveragingMode& mode) {
  const Index n = set.dim();
  const std::size_t m = set.count();
  Matrix out = Matrix::Zero(n, n);

  if (std::holds_alternative<SquaredSum>(mode)) {
    for (const auto& l : set.matrices()) out.noalias() += l * l;
  } else if (const auto* arith = std::get_if<Arithmetic>(&mode)) {
    std::vector<double> w = arith->weights();
    if (w.empty()) w.assign(m, 1.0 / static_cast<double>(m));
    if (w.size() != m) {
      throw ParameterError("expected " + std::to_string(m) + " arithmetic weights, got " +
                         std::to_string(w.size()));
    }
    for (std::size_t i = 0; i < m; ++i) out += w[i] * set[i];
  } else {
    const double alpha = std::get<Harmonic>(mode).alpha;
    if (!(alpha > 0.0)) throw ParameterError("harmonic-mean alpha must be positive");
    const Matrix shift = alpha * Matrix::Identity(n, n);
    for (const auto& l : set.matrices()) out += inverse_pd(symmetrized(l + shift), alpha);
    out = inverse_pd(symmetrized(out), alpha);
  }
  return symmetrized(out);
}

Matrix null_space_clustering_matrix(const MatrixSet& set, const AveragingMode& mode) {
  return average_laplacian(set, mode);
}

}  // namespace mdg
