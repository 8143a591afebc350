// Straightforward single-threaded references for the kernels in parallel.cpp.

#include "mdg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mdg::kernels {

KnnTable knn_serial(const Matrix& points, Index k) {
  const Index n = points.rows();
  KnnTable table{n, k, {}};
  table.entries.reserve(static_cast<std::size_t>(n * k));
  for (Index i = 0; i < n; ++i) {
    std::vector<Neighbor> all;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      double s = 0.0;
      for (Index l = 0; l < points.cols(); ++l) {
        const double diff = points(i, l) - points(j, l);
        s += diff * diff;
      }
      all.push_back({j, std::sqrt(s)});
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const Neighbor& a, const Neighbor& b) { return a.distance < b.distance; });
    table.entries.insert(table.entries.end(), all.begin(), all.begin() + k);
  }
  return table;
}

Matrix pairwise_distances_serial(const Matrix& coords) {
  const Index n = coords.rows();
  Matrix d(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      double s = 0.0;
      for (Index l = 0; l < coords.cols(); ++l) {
        const double diff = coords(i, l) - coords(j, l);
        s += diff * diff;
      }
      d(i, j) = std::sqrt(s);
    }
  }
  return d;
}

void assign_nearest_serial(const Matrix& points, const Matrix& centroids,
                           std::vector<Index>& labels, Vector& sq_dist) {
  const Index n = points.rows();
  labels.assign(static_cast<std::size_t>(n), 0);
  sq_dist.resize(n);
  for (Index i = 0; i < n; ++i) {
    double best_d = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < centroids.rows(); ++j) {
      double s = 0.0;
      for (Index l = 0; l < points.cols(); ++l) {
        const double diff = points(i, l) - centroids(j, l);
        s += diff * diff;
      }
      if (s < best_d) {
        best_d = s;
        labels[static_cast<std::size_t>(i)] = j;
      }
    }
    sq_dist[i] = best_d;
  }
}

}  // namespace mdg::kernels
