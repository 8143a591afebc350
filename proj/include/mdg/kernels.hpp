#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version used by the
// library and a plain serial reference kept for tests and benchmarks. Both
// evaluate each output entry with the same arithmetic, so results are
// bit-identical regardless of thread count.

#include "mdg/common.hpp"

#include <vector>

namespace mdg::kernels {

struct Neighbor {
  Index index;
  double distance;
};

/// Row-major n x k table of each point's k nearest neighbours (self excluded),
/// sorted by (distance, index).
struct KnnTable {
  Index n = 0;
  Index k = 0;
  std::vector<Neighbor> entries;

  const Neighbor* row(Index i) const { return entries.data() + i * k; }
};

KnnTable knn(const Matrix& points, Index k);
KnnTable knn_serial(const Matrix& points, Index k);

/// Euclidean distances between all rows of `coords`.
Matrix pairwise_distances(const Matrix& coords);
Matrix pairwise_distances_serial(const Matrix& coords);

/// Index of the nearest centroid row for every point row (ties to lowest
/// index) and the squared distance to it.
void assign_nearest(const Matrix& points, const Matrix& centroids, std::vector<Index>& labels,
                    Vector& sq_dist);
void assign_nearest_serial(const Matrix& points, const Matrix& centroids,
                           std::vector<Index>& labels, Vector& sq_dist);

/// Number of threads the parallel kernels will use.
int max_threads();

}  // namespace mdg::kernels
