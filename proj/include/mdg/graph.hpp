#pragma once

#include "mdg/common.hpp"
#include "mdg/kernels.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mdg {

/// One modality: n samples (rows) of d features, optional class labels.
/// Immutable once constructed; the constructor rejects n < 2, d < 1,
/// non-finite entries and label vectors of the wrong length.
class PointCloud {
 public:
  PointCloud(Matrix points, std::optional<std::vector<int>> labels = std::nullopt,
             std::string modality_name = {});

  const Matrix& points() const { return points_; }
  const std::optional<std::vector<int>>& labels() const { return labels_; }
  const std::string& modality_name() const { return name_; }
  Index size() const { return points_.rows(); }
  Index dim() const { return points_.cols(); }

 private:
  Matrix points_;
  std::optional<std::vector<int>> labels_;
  std::string name_;
};

/// Union-symmetrized k-NN structure. `adjacency[i]` lists every j such that
/// j is among the k nearest of i or i among the k nearest of j, sorted by
/// index, with exact Euclidean distances.
struct NeighborGraph {
  Index k = 0;
  kernels::KnnTable nearest;
  std::vector<std::vector<kernels::Neighbor>> adjacency;

  Index size() const { return static_cast<Index>(adjacency.size()); }
  Index edge_count() const;
};

NeighborGraph knn_graph(const PointCloud& cloud, Index k);

struct FixedScale {
  double t = 1.0;
};

/// Per-point bandwidth sigma_i = distance to the rank-th nearest neighbour.
struct SelfTuning {
  Index rank = 7;
};

using Scale = std::variant<FixedScale, SelfTuning>;

/// Symmetric nonnegative affinity matrix with zero diagonal and strictly
/// positive degrees.
class WeightGraph {
 public:
  /// Validates symmetry, range [0, 1], zero diagonal and positive degrees.
  explicit WeightGraph(SparseMatrix weights, Index neighbor_count = 0);

  const SparseMatrix& weights() const { return weights_; }
  const Vector& degrees() const { return degrees_; }
  Index neighbor_count() const { return neighbor_count_; }
  Index size() const { return weights_.rows(); }

 private:
  SparseMatrix weights_;
  Vector degrees_;
  Index neighbor_count_;
};

/// Gaussian affinities on the edges of `graph`. Self-tuning requires
/// rank <= graph.k since sigma_i is read from the neighbour table.
WeightGraph gaussian_weights(const NeighborGraph& graph, const Scale& scale);

/// Dense symmetric normalized Laplacian D^{-1/2} (D - W) D^{-1/2}.
class Laplacian {
 public:
  explicit Laplacian(Matrix m);
  const Matrix& matrix() const { return matrix_; }
  Index size() const { return matrix_.rows(); }

 private:
  Matrix matrix_;
};

Laplacian sym_normalized_laplacian(const WeightGraph& graph);

/// Component id per vertex (0-based, in order of first appearance).
std::vector<Index> connected_components(const WeightGraph& graph);

/// Practical size cap for dense Laplacians; larger inputs still run but slowly.
inline constexpr Index kDenseSizeHint = 3000;

}  // namespace mdg
