#include "mdg/pipeline.hpp"

#include "mdg/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mdg {

void ExperimentConfig::validate() const {
  if (inputs.empty() == dataset.empty()) {
    throw ParameterError("give exactly one of inputs (CSV paths) or dataset (generator name)");
  }
  if (knn_k < 1) throw ParameterError("knn_k must be positive");
  if (scale != "self-tuning" && scale != "fixed") {
    throw ParameterError("scale must be 'self-tuning' or 'fixed', got '" + scale + "'");
  }
  if (scale == "fixed" && !(scale_t > 0.0)) throw ParameterError("scale_t must be positive");
  if (scale == "self-tuning" && self_tuning_k < 1) throw ParameterError("self_tuning_k must be positive");
  static const std::set<std::string> methods = {"jade", "squared-sum", "arithmetic", "harmonic"};
  if (!methods.count(diag_method)) throw ParameterError("unknown diag_method '" + diag_method + "'");
  if (diag_method == "harmonic" && !(alpha > 0.0)) throw ParameterError("alpha must be positive");
  if (n_eigvecs < 2) throw ParameterError("n_eigvecs must be at least 2");
  if (kernel != "heat" && kernel != "identity") throw ParameterError("kernel must be 'heat' or 'identity'");
  if (kernel == "heat" && !(kernel_t > 0.0)) throw ParameterError("kernel_t must be positive");
  if (!(eigval_scale > 0.0)) throw ParameterError("eigval_scale must be positive");
  if (n_clusters < 0) throw ParameterError("n_clusters must be nonnegative");
  if (kmeans_restarts < 1) throw ParameterError("kmeans_restarts must be positive");
  if (modality < 0) throw ParameterError("modality must be 0 (all) or a 1-based index");
}

MultimodalDataset generate_dataset(const ExperimentConfig& c) {
  if (c.dataset == "circles") return circles(c.n, c.seed);
  if (c.dataset == "blobs") {
    BlobsOptions o;
    o.n_per_cluster = c.n_per_cluster;
    o.n_clusters = c.blob_clusters;
    o.sigma = {c.sigma_1, c.sigma_2};
    return blobs(o, c.seed);
  }
  if (c.dataset == "swissroll") {
    SwissRollOptions o;
    o.n = c.n;
    o.noise_sigma = c.noise_sigma;
    return swiss_roll_pair(o, c.seed);
  }
  throw ParameterError("unknown dataset '" + c.dataset + "' (circles, blobs, swissroll)");
}

MultimodalDataset load_modalities(const ExperimentConfig& config) {
  config.validate();
  MultimodalDataset data;
  if (!config.dataset.empty()) {
    data = generate_dataset(config);
  } else {
    for (const auto& path : config.inputs) data.modalities.push_back(io::read_point_cloud(path));
    for (std::size_t i = 1; i < data.modalities.size(); ++i) {
      if (data.modalities[i].size() != data.modalities[0].size()) {
        throw InputError("modality '" + config.inputs[i] + "' has " +
                         std::to_string(data.modalities[i].size()) + " rows, expected " +
                         std::to_string(data.modalities[0].size()));
      }
    }
    for (const auto& m : data.modalities) {
      if (m.labels()) {
        data.labels = m.labels();
        break;
      }
    }
  }
  if (config.modality > 0) {
    if (config.modality > static_cast<int>(data.modalities.size())) {
      throw ParameterError("modality " + std::to_string(config.modality) + " requested but only " +
                           std::to_string(data.modalities.size()) + " available");
    }
    PointCloud keep = data.modalities[static_cast<std::size_t>(config.modality - 1)];
    data.modalities.assign(1, std::move(keep));
  }
  return data;
}

void decompose(const ExperimentConfig& config, const std::vector<Laplacian>& laplacians,
               PipelineResult& result) {
  std::vector<Matrix> mats;
  for (const auto& l : laplacians) mats.push_back(l.matrix());
  const MatrixSet set(std::move(mats));
  if (config.diag_method == "jade") {
    JadeOptions opts;
    opts.max_sweeps = config.max_sweeps;
    opts.rel_tol = config.rel_tol;
    opts.rotation_threshold = config.rotation_threshold;
    opts.weights = config.weights;
    result.joint = jade(set, opts);
    result.eigvals = result.joint->joint_eigs;
    result.eigvecs = result.joint->basis;
    result.method = set.count() == 1 ? "jade(m=1)" : "jade";
    return;
  }
  AveragingMode mode;
  if (config.diag_method == "squared-sum") {
    mode = SquaredSum{};
  } else if (config.diag_method == "arithmetic") {
    mode = config.weights.empty() ? Arithmetic{} : Arithmetic{config.weights};
  } else {
    mode = Harmonic{config.alpha};
  }
  result.averaged = null_space_clustering_matrix(set, mode);
  const Eigensystem es = eig_sym(*result.averaged);
  result.eigvals = es.values;
  result.eigvecs = es.vectors;
  result.method = config.diag_method;
}

PipelineResult run_pipeline(const ExperimentConfig& config, const MultimodalDataset& data) {
  config.validate();
  if (data.modalities.empty()) throw InputError("no modalities to process");
  const Index n = data.modalities.front().size();
  for (const auto& m : data.modalities) {
    if (m.size() != n) throw InputError("modalities disagree on the number of samples");
  }
  if (config.n_clusters > n) {
    throw ParameterError("n_clusters=" + std::to_string(config.n_clusters) + " exceeds n=" +
                         std::to_string(n));
  }

  PipelineResult r;
  const Scale scale = config.scale == "fixed" ? Scale{FixedScale{config.scale_t}}
                                              : Scale{SelfTuning{config.self_tuning_k}};
  for (const auto& cloud : data.modalities) {
    const NeighborGraph nb = knn_graph(cloud, config.knn_k);
    r.graphs.push_back(gaussian_weights(nb, scale));
    r.laplacians.push_back(sym_normalized_laplacian(r.graphs.back()));
  }
  decompose(config, r.laplacians, r);

  const Index k = std::min(config.n_eigvecs, n);
  const TransferKernel kernel =
      config.kernel == "heat" ? TransferKernel::heat(config.kernel_t) : TransferKernel::identity();
  r.embedding = diffusion_map(config.eigval_scale * r.eigvals, r.eigvecs, kernel, k);
  r.distances = diffusion_distance_matrix(r.embedding);

  Index clusters = config.n_clusters;
  if (clusters == 0 && data.labels) {
    clusters = static_cast<Index>(std::set<int>(data.labels->begin(), data.labels->end()).size());
  }
  if (clusters > 0) {
    r.clusters = spectral_clustering(r.eigvecs, clusters, config.kmeans_seed, config.kmeans_restarts);
    if (data.labels) r.accuracy = clustering_accuracy(r.clusters->labels, *data.labels);
  }
  if (data.labels && std::set<int>(data.labels->begin(), data.labels->end()).size() > 1) {
    r.roc = roc_from_distances(r.distances, *data.labels);
  }
  return r;
}

void write_artifacts(const PipelineResult& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw io::IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  for (std::size_t i = 0; i < r.graphs.size(); ++i) {
    const std::string id = std::to_string(i + 1);
    io::write_matrix_market(dir / ("graph_" + id + ".mtx"), r.graphs[i]);
    const Vector& deg = r.graphs[i].degrees();
    const auto comps = connected_components(r.graphs[i]);
    const Index n_comp = comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;
    io::write_metadata(dir / ("laplacian_" + id + ".meta"),
                       {{"n", std::to_string(r.laplacians[i].size())},
                        {"edges", std::to_string(r.graphs[i].weights().nonZeros() / 2)},
                        {"neighbor_count", std::to_string(r.graphs[i].neighbor_count())},
                        {"min_degree", io::format_double(deg.minCoeff())},
                        {"max_degree", io::format_double(deg.maxCoeff())},
                        {"components", std::to_string(n_comp)},
                        {"frobenius_sq", io::format_double(r.laplacians[i].matrix().squaredNorm())}});
  }
  if (r.joint) {
    io::write_joint_basis(dir / "basis", *r.joint);
  } else {
    std::vector<std::string> header;
    for (Index j = 0; j < r.eigvals.size(); ++j) header.push_back(io::format_double(r.eigvals[j]));
    io::write_matrix(dir / "basis.csv", r.eigvecs, header);
    io::write_metadata(io::sidecar(dir / "basis.csv"), {{"method", r.method}});
    io::write_matrix(dir / "averaged.csv", *r.averaged);
    io::write_metadata(io::sidecar(dir / "averaged.csv"),
                       {{"method", r.method}, {"n", std::to_string(r.averaged->rows())}});
  }
  io::write_matrix(dir / "embedding.csv", r.embedding.coords);
  io::write_metadata(io::sidecar(dir / "embedding.csv"),
                     {{"kernel", r.embedding.kernel.describe()},
                      {"k", std::to_string(r.embedding.eigvals_used.size())},
                      {"null_discarded", r.embedding.null_discarded ? "true" : "false"}});
  io::write_matrix(dir / "distances.csv", r.distances);
  if (r.clusters) io::write_cluster_result(dir / "labels.csv", *r.clusters);
  if (r.accuracy) io::write_metadata(dir / "accuracy.meta", {{"accuracy", io::format_double(*r.accuracy)}});
  if (r.roc) io::write_roc(dir / "roc.csv", *r.roc);
}

std::string summary_line(const PipelineResult& r) {
  std::ostringstream os;
  os << "method=" << r.method;
  if (r.joint) os << " residual=" << io::format_double(r.joint->residual) << " sweeps=" << r.joint->sweeps_used;
  if (r.accuracy) os << " accuracy=" << io::format_double(*r.accuracy) << '%';
  if (r.roc) os << " auc=" << io::format_double(r.roc->auc);
  return os.str();
}

}  // namespace mdg
