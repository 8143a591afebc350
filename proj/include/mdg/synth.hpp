#pragma once

#include "mdg/common.hpp"
#include "mdg/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdg {

/// Several modalities observing the same n samples (row i corresponds across
/// modalities). Regenerating with the same seed and options is bit-identical.
struct MultimodalDataset {
  std::vector<PointCloud> modalities;
  std::optional<std::vector<int>> labels;
  std::optional<Vector> intrinsic_param;
  std::uint64_t seed = 0;
  /// Generator name and parameters, recorded in the metadata sidecar.
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> warnings;
};

struct Interval {
  double lo;
  double hi;
};

inline constexpr double kRollUMin = 1.5 * 3.14159265358979323846;
inline constexpr double kRollUMax = 4.5 * 3.14159265358979323846;

struct SwissRollOptions {
  Index n = 600;
  double noise_sigma = 0.0;
  /// Per-modality u-intervals where the roll bulges outward until it almost
  /// touches the next loop, creating cross-loop k-NN edges.
  std::array<std::vector<Interval>, 2> shortcut_regions = default_shortcut_regions();
  /// Radial clearance left between a bulge's peak and the next loop.
  double bulge_clearance = 2.0;
  /// Modality 2 uses radius u + reparam_amplitude * sin(1.5 u) instead of u.
  double reparam_amplitude = 0.4;

  static std::array<std::vector<Interval>, 2> default_shortcut_regions();
};

/// Two Swiss rolls (r(u) cos u, v, r(u) sin u), u ~ U[3pi/2, 9pi/2],
/// v ~ U[0, 20], with topological noise at different places per modality.
/// intrinsic_param holds u.
MultimodalDataset swiss_roll_pair(const SwissRollOptions& options, std::uint64_t seed);

struct BlobsOptions {
  Index n_per_cluster = 50;
  int n_clusters = 6;
  std::array<double, 2> sigma = {1.0, 1.0};
  /// Centers are drawn in [0, box]^2 at least min_separation apart ...
  double box = 30.0;
  double min_separation = 8.0;
  /// ... except one pair per modality, placed this close together. The
  /// confused pairs of the two modalities are disjoint.
  double confusion_distance = 2.0;
};

/// Two 2-D Gaussian-mixture modalities sharing the cluster labels.
MultimodalDataset blobs(const BlobsOptions& options, std::uint64_t seed);

struct CirclesOptions {
  double inner_radius = 1.0;
  double outer_radius = 2.0;
  double radial_noise = 0.03;
  /// Empty angular sector (radians) in the middle of every class's half
  /// circle. Within one modality the gaps are the cheapest cuts, and they
  /// split each class in two.
  double gap_width = 0.35;
};

/// Four classes on two concentric circles per modality. Each class fills a
/// half circle minus a central gap. Modality 1 puts classes {0,1} on the inner circle and {2,3}
/// on the outer; modality 2 puts {0,2} inner and {1,3} outer. Angular
/// positions are drawn independently per modality. Requires n % 4 == 0.
MultimodalDataset circles(Index n, std::uint64_t seed, const CirclesOptions& options = {});

}  // namespace mdg
