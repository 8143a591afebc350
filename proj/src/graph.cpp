#include "mdg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mdg {

double asymmetry(const Matrix& m) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (m - m.transpose()).cwiseAbs().maxCoeff() / scale;
}

PointCloud::PointCloud(Matrix points, std::optional<std::vector<int>> labels,
                       std::string modality_name)
    : points_(std::move(points)), labels_(std::move(labels)), name_(std::move(modality_name)) {
  if (points_.rows() < 2) throw InputError("point cloud needs at least 2 samples");
  if (points_.cols() < 1) throw InputError("point cloud needs at least 1 feature column");
  if (!points_.allFinite()) throw InputError("point cloud '" + name_ + "' contains NaN or Inf");
  if (labels_ && static_cast<Index>(labels_->size()) != points_.rows()) {
    throw InputError("label count " + std::to_string(labels_->size()) + " does not match " +
                     std::to_string(points_.rows()) + " samples");
  }
}

Index NeighborGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.size();
  return static_cast<Index>(twice / 2);
}

NeighborGraph knn_graph(const PointCloud& cloud, Index k) {
  const Index n = cloud.size();
  if (k < 1 || k >= n) {
    throw ParameterError("neighbour count k=" + std::to_string(k) + " must satisfy 1 <= k < n=" +
                         std::to_string(n));
  }
  NeighborGraph g;
  g.k = k;
  g.nearest = kernels::knn(cloud.points(), k);
  g.adjacency.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const kernels::Neighbor* row = g.nearest.row(i);
    for (Index r = 0; r < k; ++r) {
      g.adjacency[static_cast<std::size_t>(i)].push_back(row[r]);
      g.adjacency[static_cast<std::size_t>(row[r].index)].push_back({i, row[r].distance});
    }
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end(),
              [](const kernels::Neighbor& a, const kernels::Neighbor& b) { return a.index < b.index; });
    adj.erase(std::unique(adj.begin(), adj.end(),
                          [](const kernels::Neighbor& a, const kernels::Neighbor& b) {
                            return a.index == b.index;
                          }),
              adj.end());
  }
  return g;
}

WeightGraph::WeightGraph(SparseMatrix weights, Index neighbor_count)
    : weights_(std::move(weights)), neighbor_count_(neighbor_count) {
  const Index n = weights_.rows();
  if (weights_.cols() != n) throw InputError("weight matrix must be square");
  weights_.makeCompressed();
  const SparseMatrix transposed = weights_.transpose();
  if ((weights_ - transposed).norm() != 0.0) throw InputError("weight matrix is not symmetric");
  degrees_ = Vector::Zero(n);
  for (Index col = 0; col < weights_.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(weights_, col); it; ++it) {
      if (it.row() == it.col() && it.value() != 0.0) {
        throw InputError("weight matrix has a nonzero diagonal entry at " + std::to_string(col));
      }
      if (!(it.value() >= 0.0 && it.value() <= 1.0)) {
        throw InputError("weight outside [0, 1] at (" + std::to_string(it.row()) + ", " +
                         std::to_string(it.col()) + ")");
      }
      degrees_[col] += it.value();
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (!(degrees_[i] > 0.0)) {
      throw NumericError("vertex " + std::to_string(i) +
                         " is isolated (zero degree); increase the neighbour count k or the "
                         "Gaussian scale");
    }
  }
}

WeightGraph gaussian_weights(const NeighborGraph& graph, const Scale& scale) {
  const Index n = graph.size();
  Vector sigma;
  double t = 0.0;
  if (const auto* fixed = std::get_if<FixedScale>(&scale)) {
    if (!(fixed->t > 0.0)) throw ParameterError("Gaussian scale t must be positive");
    t = fixed->t;
  } else {
    const Index rank = std::get<SelfTuning>(scale).rank;
    if (rank < 1 || rank >= n) {
      throw ParameterError("self-tuning rank must satisfy 1 <= rank < n");
    }
    if (rank > graph.k) {
      throw ParameterError("self-tuning rank " + std::to_string(rank) +
                           " exceeds the graph's neighbour count " + std::to_string(graph.k));
    }
    sigma.resize(n);
    for (Index i = 0; i < n; ++i) {
      sigma[i] = graph.nearest.row(i)[rank - 1].distance;
      if (sigma[i] == 0.0) {
        throw NumericError("self-tuning scale is zero at point " + std::to_string(i) +
                           " (duplicate points up to its neighbour of rank " +
                           std::to_string(rank) + ")");
      }
    }
  }

  std::vector<Eigen::Triplet<double>> triplets;
  for (Index i = 0; i < n; ++i) {
    for (const auto& nb : graph.adjacency[static_cast<std::size_t>(i)]) {
      const Index j = nb.index;
      if (j <= i) continue;
      const double d2 = nb.distance * nb.distance;
      const double w = sigma.size() ? std::exp(-d2 / (sigma[i] * sigma[j])) : std::exp(-d2 / t);
      triplets.emplace_back(i, j, w);
      triplets.emplace_back(j, i, w);
    }
  }
  SparseMatrix w(n, n);
  w.setFromTriplets(triplets.begin(), triplets.end());
  return WeightGraph(std::move(w), graph.k);
}

Laplacian::Laplacian(Matrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols()) throw InputError("Laplacian must be square");
  if (asymmetry(matrix_) > 1e-12) throw InputError("Laplacian is not symmetric");
}

Laplacian sym_normalized_laplacian(const WeightGraph& graph) {
  const Index n = graph.size();
  const Vector inv_sqrt = graph.degrees().cwiseSqrt().cwiseInverse();
  Matrix l = Matrix::Identity(n, n);
  const SparseMatrix& w = graph.weights();
  for (Index col = 0; col < w.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(w, col); it; ++it) {
      l(it.row(), col) -= it.value() * (inv_sqrt[it.row()] * inv_sqrt[col]);
    }
  }
  return Laplacian(std::move(l));
}

std::vector<Index> connected_components(const WeightGraph& graph) {
  const Index n = graph.size();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const SparseMatrix& w = graph.weights();
  for (Index col = 0; col < w.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(w, col); it; ++it) {
      if (it.value() > 0.0) parent[find(it.row())] = find(col);
    }
  }
  std::vector<Index> label(static_cast<std::size_t>(n), -1);
  std::vector<Index> root_label(static_cast<std::size_t>(n), -1);
  Index next = 0;
  for (Index i = 0; i < n; ++i) {
    const Index r = find(i);
    if (root_label[r] < 0) root_label[r] = next++;
    label[i] = root_label[r];
  }
  return label;
}

}  // namespace mdg
