#include "mdg/spectral.hpp"

#include "mdg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

namespace mdg {

TransferKernel TransferKernel::heat(double t) {
  if (!(t > 0.0)) throw ParameterError("heat kernel time must be positive");
  return TransferKernel(Heat{t});
}

TransferKernel TransferKernel::identity() { return TransferKernel(Identity{}); }

TransferKernel TransferKernel::custom(std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) throw ParameterError("custom kernel needs at least one knot");
  std::sort(knots.begin(), knots.end());
  for (const auto& [lambda, value] : knots) {
    if (!std::isfinite(lambda) || !(value >= 0.0)) {
      throw ParameterError("custom kernel values must be finite and nonnegative");
    }
  }
  return TransferKernel(Custom{std::move(knots)});
}

double TransferKernel::operator()(double lambda) const {
  if (const auto* h = std::get_if<Heat>(&kind_)) return std::exp(-lambda * h->t);
  if (std::holds_alternative<Identity>(kind_)) return 1.0;
  const auto& knots = std::get<Custom>(kind_).knots;
  if (lambda <= knots.front().first) return knots.front().second;
  if (lambda >= knots.back().first) return knots.back().second;
  const auto hi = std::upper_bound(knots.begin(), knots.end(), lambda,
                                   [](double x, const auto& knot) { return x < knot.first; });
  const auto lo = hi - 1;
  const double f = (lambda - lo->first) / (hi->first - lo->first);
  return lo->second + f * (hi->second - lo->second);
}

std::string TransferKernel::describe() const {
  std::ostringstream os;
  if (const auto* h = std::get_if<Heat>(&kind_)) {
    os << "heat(t=" << h->t << ")";
  } else if (std::holds_alternative<Identity>(kind_)) {
    os << "identity";
  } else {
    os << "custom(" << std::get<Custom>(kind_).knots.size() << " knots)";
  }
  return os.str();
}

Eigensystem eig_sym(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("eig_sym needs a square matrix");
  if (asymmetry(m) > 1e-10) throw InputError("eig_sym input is not symmetric");
  const JointBasis jb = jade(MatrixSet({0.5 * (m + m.transpose())}));
  return {jb.joint_eigs, jb.basis};
}

DiffusionEmbedding diffusion_map(const Vector& eigvals, const Matrix& eigvecs,
                                 const TransferKernel& kernel, Index k, bool discard_null) {
  const Index n = eigvecs.rows();
  if (eigvals.size() < eigvecs.cols() && eigvals.size() < k) {
    throw InputError("fewer eigenvalues than requested columns");
  }
  if (k > eigvecs.cols() || k > n) {
    throw ParameterError("k=" + std::to_string(k) + " exceeds the available eigenvectors");
  }
  if (discard_null ? k < 2 : k < 1) {
    throw ParameterError("diffusion map needs k >= 2 when the null eigenvector is discarded");
  }
  for (Index j = 1; j < k; ++j) {
    if (eigvals[j] < eigvals[j - 1]) throw InputError("eigenvalues must be ascending");
  }
  const Index first = discard_null ? 1 : 0;
  DiffusionEmbedding e;
  e.kernel = kernel;
  e.null_discarded = discard_null;
  e.eigvals_used = eigvals.head(k);
  e.coords.resize(n, k - first);
  for (Index j = first; j < k; ++j) {
    e.coords.col(j - first) = std::sqrt(kernel(eigvals[j])) * eigvecs.col(j);
  }
  if (!e.coords.allFinite()) throw NumericError("diffusion embedding has non-finite entries");
  return e;
}

Matrix diffusion_distance_matrix(const DiffusionEmbedding& embedding) {
  return kernels::pairwise_distances(embedding.coords);
}

namespace {

constexpr int kMaxLloydIterations = 300;

Matrix kmeanspp_seed(const Matrix& x, Index k, std::mt19937_64& rng) {
  const Index n = x.rows();
  Matrix centroids(k, x.cols());
  std::uniform_int_distribution<Index> pick(0, n - 1);
  centroids.row(0) = x.row(pick(rng));
  Vector d2 = (x.rowwise() - centroids.row(0)).rowwise().squaredNorm();
  for (Index c = 1; c < k; ++c) {
    const double total = d2.sum();
    Index chosen = 0;
    if (total > 0.0) {
      const double target = std::uniform_real_distribution<double>(0.0, total)(rng);
      double acc = 0.0;
      chosen = n - 1;
      for (Index i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc > target && d2[i] > 0.0) {
          chosen = i;
          break;
        }
      }
    } else {
      chosen = pick(rng);
    }
    centroids.row(c) = x.row(chosen);
    d2 = d2.cwiseMin((x.rowwise() - centroids.row(c)).rowwise().squaredNorm());
  }
  return centroids;
}

ClusterResult lloyd(const Matrix& x, Matrix centroids) {
  const Index n = x.rows();
  const Index k = centroids.rows();
  std::vector<Index> labels;
  Vector d2;
  kernels::assign_nearest(x, centroids, labels, d2);
  for (int it = 0; it < kMaxLloydIterations; ++it) {
    Matrix sums = Matrix::Zero(k, x.cols());
    std::vector<Index> counts(static_cast<std::size_t>(k), 0);
    for (Index i = 0; i < n; ++i) {
      sums.row(labels[i]) += x.row(i);
      ++counts[labels[i]];
    }
    for (Index c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        centroids.row(c) = sums.row(c) / static_cast<double>(counts[c]);
        continue;
      }
      Index far = 0;
      d2.maxCoeff(&far);
      centroids.row(c) = x.row(far);
      d2[far] = 0.0;
    }
    std::vector<Index> next;
    kernels::assign_nearest(x, centroids, next, d2);
    if (next == labels) break;
    labels = std::move(next);
  }
  ClusterResult r;
  r.labels.assign(labels.begin(), labels.end());
  r.centroids = std::move(centroids);
  r.inertia = d2.sum();
  return r;
}

}  // namespace

ClusterResult kmeans(const Matrix& points, Index k, std::uint64_t seed, int restarts) {
  const Index n = points.rows();
  if (k < 1 || k > n) {
    throw ParameterError("k-means needs 1 <= k <= n (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  }
  if (restarts < 1) throw ParameterError("k-means needs at least one restart");
  if (!points.allFinite()) throw InputError("k-means input has non-finite entries");

  std::mt19937_64 rng(seed);
  ClusterResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    ClusterResult candidate = lloyd(points, kmeanspp_seed(points, k, rng));
    if (candidate.inertia < best.inertia) best = std::move(candidate);
  }
  best.seed = seed;
  best.restarts = restarts;
  return best;
}

ClusterResult spectral_clustering(const Matrix& eigvecs, Index k_clusters, std::uint64_t seed,
                                  int restarts) {
  if (k_clusters < 1 || k_clusters > eigvecs.cols()) {
    throw ParameterError("spectral clustering needs 1 <= k_clusters <= available eigenvectors");
  }
  Matrix y = eigvecs.leftCols(k_clusters);
  for (Index i = 0; i < y.rows(); ++i) {
    const double norm = y.row(i).norm();
    if (norm > 0.0) y.row(i) /= norm;
  }
  return kmeans(y, k_clusters, seed, restarts);
}

SamplingResult farthest_point_sampling(const Matrix& dist, Index start, Index count) {
  const Index n = dist.rows();
  if (dist.cols() != n) throw InputError("distance matrix must be square");
  if (start < 0 || start >= n) throw ParameterError("start index out of range");
  if (count < 1 || count > n) {
    throw ParameterError("sample count must satisfy 1 <= count <= n=" + std::to_string(n));
  }
  SamplingResult out;
  out.indices.push_back(start);
  out.radii.push_back(dist.maxCoeff());
  Vector nearest = dist.row(start).transpose();
  for (Index j = 1; j < count; ++j) {
    Index next = 0;
    const double radius = nearest.maxCoeff(&next);
    out.indices.push_back(next);
    out.radii.push_back(radius);
    nearest = nearest.cwiseMin(dist.row(next).transpose());
  }
  return out;
}

}  // namespace mdg
