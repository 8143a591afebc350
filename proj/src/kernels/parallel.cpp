#include "mdg/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace mdg::kernels {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline double squared_distance(const double* a, const double* b, Index dim) {
  double s = 0.0;
  for (Index l = 0; l < dim; ++l) {
    const double diff = a[l] - b[l];
    s += diff * diff;
  }
  return s;
}

inline bool closer(const Neighbor& a, const Neighbor& b) {
  return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

KnnTable knn(const Matrix& points, Index k) {
  const RowMatrix x = points;
  const Index n = x.rows();
  const Index dim = x.cols();
  KnnTable table{n, k, std::vector<Neighbor>(static_cast<std::size_t>(n * k))};

#pragma omp parallel
  {
    std::vector<Neighbor> candidates(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
#pragma omp for schedule(dynamic, 16)
    for (Index i = 0; i < n; ++i) {
      std::size_t c = 0;
      for (Index j = 0; j < n; ++j) {
        if (j == i) continue;
        candidates[c++] = {j, std::sqrt(squared_distance(x.row(i).data(), x.row(j).data(), dim))};
      }
      std::partial_sort(candidates.begin(), candidates.begin() + k, candidates.end(), closer);
      std::copy_n(candidates.begin(), k, table.entries.begin() + i * k);
    }
  }
  return table;
}

Matrix pairwise_distances(const Matrix& coords) {
  const RowMatrix x = coords;
  const Index n = x.rows();
  const Index dim = x.cols();
  Matrix d = Matrix::Zero(n, n);

#pragma omp parallel for schedule(dynamic, 8)
  for (Index j = 0; j < n; ++j) {
    for (Index i = j + 1; i < n; ++i) {
      d(i, j) = std::sqrt(squared_distance(x.row(i).data(), x.row(j).data(), dim));
    }
  }
  d.triangularView<Eigen::StrictlyUpper>() = d.transpose();
  return d;
}

void assign_nearest(const Matrix& points, const Matrix& centroids, std::vector<Index>& labels,
                    Vector& sq_dist) {
  const RowMatrix x = points;
  const RowMatrix c = centroids;
  const Index n = x.rows();
  const Index dim = x.cols();
  labels.resize(static_cast<std::size_t>(n));
  sq_dist.resize(n);

#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    Index best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (Index j = 0; j < c.rows(); ++j) {
      const double dj = squared_distance(x.row(i).data(), c.row(j).data(), dim);
      if (dj < best_d) {
        best_d = dj;
        best = j;
      }
    }
    labels[static_cast<std::size_t>(i)] = best;
    sq_dist[i] = best_d;
  }
}

}  // namespace mdg::kernels
