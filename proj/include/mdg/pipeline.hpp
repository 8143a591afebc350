#pragma once

// End-to-end composition: point clouds -> graphs -> Laplacians -> joint basis
// (or averaged Laplacian) -> diffusion map, distances, clustering, scores.

#include "mdg/averaging.hpp"
#include "mdg/eval.hpp"
#include "mdg/graph.hpp"
#include "mdg/jade.hpp"
#include "mdg/spectral.hpp"
#include "mdg/synth.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mdg {

struct ExperimentConfig {
  // Exactly one of `inputs` (CSV paths) or `dataset` (generator name).
  std::vector<std::string> inputs;
  std::string dataset;
  Index n = 400;
  std::uint64_t seed = 0;
  double noise_sigma = 0.0;
  Index n_per_cluster = 50;
  int blob_clusters = 6;
  double sigma_1 = 1.0;
  double sigma_2 = 1.0;

  /// 0 uses every modality; i > 0 keeps only modality i (1-based).
  int modality = 0;

  Index knn_k = 10;
  std::string scale = "self-tuning";  ///< "self-tuning" or "fixed"
  double scale_t = 1.0;
  Index self_tuning_k = 7;

  std::string diag_method = "jade";  ///< jade | squared-sum | arithmetic | harmonic
  int max_sweeps = 100;
  double rel_tol = 1e-12;
  double rotation_threshold = 1e-14;
  std::vector<double> weights;
  double alpha = 1.0;

  Index n_eigvecs = 100;
  std::string kernel = "heat";  ///< heat | identity
  double kernel_t = 5.0;
  /// Eigenvalues are multiplied by this before the transfer kernel.
  double eigval_scale = 1.0;

  /// 0 means "number of distinct ground-truth labels", or skip clustering
  /// when no labels are available.
  Index n_clusters = 0;
  std::uint64_t kmeans_seed = 0;
  int kmeans_restarts = 10;

  std::string output_dir = "out";

  /// Throws ParameterError on inconsistent or out-of-range settings.
  void validate() const;
};

/// Either the generated dataset or the CSV point clouds named in `inputs`.
MultimodalDataset load_modalities(const ExperimentConfig& config);

/// Generator dispatch for `dataset` = circles | blobs | swissroll.
MultimodalDataset generate_dataset(const ExperimentConfig& config);

struct PipelineResult {
  std::vector<WeightGraph> graphs;
  std::vector<Laplacian> laplacians;
  std::optional<JointBasis> joint;
  std::optional<Matrix> averaged;
  Vector eigvals;  ///< ascending
  Matrix eigvecs;
  DiffusionEmbedding embedding;
  Matrix distances;
  std::optional<ClusterResult> clusters;
  std::optional<double> accuracy;
  std::optional<RocCurve> roc;
  std::string method;
};

/// Spectral decomposition stage alone, shared by the pipeline and callers
/// that already hold Laplacians.
void decompose(const ExperimentConfig& config, const std::vector<Laplacian>& laplacians,
               PipelineResult& result);

PipelineResult run_pipeline(const ExperimentConfig& config, const MultimodalDataset& data);

/// One file per stage under `dir` (created if missing).
void write_artifacts(const PipelineResult& result, const std::filesystem::path& dir);

/// "method=... residual=... accuracy=..." line.
std::string summary_line(const PipelineResult& result);

}  // namespace mdg
