#pragma once

#include "mdg/common.hpp"
#include "mdg/jade.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mdg {

/// Spectral transfer function K(lambda) >= 0 acting as a low-pass filter.
class TransferKernel {
 public:
  struct Heat {
    double t;
  };
  struct Identity {};
  /// Piecewise-linear through (lambda, K) knots sorted by lambda; constant
  /// outside the knot range.
  struct Custom {
    std::vector<std::pair<double, double>> knots;
  };

  static TransferKernel heat(double t);
  static TransferKernel identity();
  static TransferKernel custom(std::vector<std::pair<double, double>> knots);

  double operator()(double lambda) const;
  std::string describe() const;
  const std::variant<Heat, Identity, Custom>& kind() const { return kind_; }

 private:
  explicit TransferKernel(std::variant<Heat, Identity, Custom> kind) : kind_(std::move(kind)) {}
  std::variant<Heat, Identity, Custom> kind_;
};

struct Eigensystem {
  Vector values;   ///< ascending
  Matrix vectors;  ///< orthonormal columns
};

/// Symmetric eigendecomposition through the single-matrix Jacobi path of
/// `jade`. Throws InputError when asymmetry exceeds 1e-10.
Eigensystem eig_sym(const Matrix& m);

struct DiffusionEmbedding {
  Matrix coords;  ///< row i is Psi(x_i)
  TransferKernel kernel = TransferKernel::identity();
  Vector eigvals_used;  ///< the first k eigenvalues
  bool null_discarded = true;
};

/// Column j of the embedding is sqrt(K(lambda_j)) v_j over eigenvectors 2..k
/// (1..k when discard_null is false), so squared embedding distances are
/// sum_l K(lambda_l) (v_il - v_jl)^2.
DiffusionEmbedding diffusion_map(const Vector& eigvals, const Matrix& eigvecs,
                                 const TransferKernel& kernel, Index k, bool discard_null = true);

Matrix diffusion_distance_matrix(const DiffusionEmbedding& embedding);

struct ClusterResult {
  std::vector<int> labels;
  Matrix centroids;
  double inertia = 0.0;
  std::uint64_t seed = 0;
  int restarts = 0;
};

/// k-means++ seeding and Lloyd iterations (assignment fixpoint or 300
/// iterations), best inertia over `restarts`. A cluster left empty by an
/// update is re-seeded at the point farthest from its current centroid.
ClusterResult kmeans(const Matrix& points, Index k, std::uint64_t seed, int restarts = 10);

/// Clusters the rows of the first k_clusters columns of `eigvecs` (assumed
/// ordered by ascending eigenvalue, null space included) after normalizing
/// each row to unit length.
ClusterResult spectral_clustering(const Matrix& eigvecs, Index k_clusters, std::uint64_t seed,
                                  int restarts = 10);

struct SamplingResult {
  std::vector<Index> indices;
  std::vector<double> radii;  ///< radii[0] is the matrix maximum
};

/// Greedy max-min selection on a distance matrix, ties to the lowest index.
SamplingResult farthest_point_sampling(const Matrix& dist, Index start, Index count);

}  // namespace mdg
