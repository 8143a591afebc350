// mdg: generate datasets, run the multimodal pipeline, and evaluate results.
// Exit codes: 0 ok, 2 usage/config/input error, 3 numeric failure.

#include "mdg/io.hpp"
#include "mdg/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr int kUsageError = 2;
constexpr int kNumericError = 3;

void add_dataset_flags(CLI::App& cmd, mdg::ExperimentConfig& c) {
  cmd.add_option("--dataset", c.dataset, "Generator: circles | blobs | swissroll");
  cmd.add_option("--n", c.n, "Samples (circles, swissroll)");
  cmd.add_option("--seed", c.seed, "Generator seed");
  cmd.add_option("--noise_sigma", c.noise_sigma, "Swiss roll ambient noise");
  cmd.add_option("--n_per_cluster", c.n_per_cluster, "Blobs: points per cluster");
  cmd.add_option("--blob_clusters", c.blob_clusters, "Blobs: number of clusters");
  cmd.add_option("--sigma_1", c.sigma_1, "Blobs: spread in modality 1");
  cmd.add_option("--sigma_2", c.sigma_2, "Blobs: spread in modality 2");
  cmd.add_option("--output_dir", c.output_dir, "Directory for written files");
}

void add_pipeline_flags(CLI::App& cmd, mdg::ExperimentConfig& c) {
  cmd.add_option("--input", c.inputs, "Modality CSV (repeat once per modality)");
  cmd.add_option("--modality", c.modality, "Keep only this 1-based modality (0 = all)");
  cmd.add_option("--knn_k", c.knn_k, "Neighbours per vertex");
  cmd.add_option("--scale", c.scale, "Gaussian scale: self-tuning | fixed");
  cmd.add_option("--scale_t", c.scale_t, "Fixed Gaussian scale t");
  cmd.add_option("--self_tuning_k", c.self_tuning_k, "Self-tuning neighbour rank");
  cmd.add_option("--diag_method", c.diag_method, "jade | squared-sum | arithmetic | harmonic");
  cmd.add_option("--max_sweeps", c.max_sweeps, "JADE sweep limit");
  cmd.add_option("--rel_tol", c.rel_tol, "JADE relative stopping tolerance");
  cmd.add_option("--rotation_threshold", c.rotation_threshold, "Skip rotations with |s| below this");
  cmd.add_option("--weights", c.weights, "Per-modality weights")->delimiter(',');
  cmd.add_option("--alpha", c.alpha, "Harmonic mean regularization");
  cmd.add_option("--n_eigvecs", c.n_eigvecs, "Eigenvectors kept in the embedding");
  cmd.add_option("--kernel", c.kernel, "Transfer kernel: heat | identity");
  cmd.add_option("--kernel_t", c.kernel_t, "Heat kernel time");
  cmd.add_option("--eigval_scale", c.eigval_scale, "Multiply eigenvalues by this before the kernel");
  cmd.add_option("--n_clusters", c.n_clusters, "Clusters (0 = number of label classes)");
  cmd.add_option("--kmeans_seed", c.kmeans_seed, "k-means++ seed");
  cmd.add_option("--kmeans_restarts", c.kmeans_restarts, "k-means restarts");
}

int run_generate(const mdg::ExperimentConfig& c) {
  if (c.dataset.empty()) throw mdg::ParameterError("generate needs --dataset");
  const mdg::MultimodalDataset data = mdg::generate_dataset(c);
  for (const auto& w : data.warnings) std::cerr << "warning: " << w << '\n';

  const fs::path dir = c.output_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw mdg::io::IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  for (std::size_t m = 0; m < data.modalities.size(); ++m) {
    mdg::io::write_point_cloud(dir / ("modality_" + std::to_string(m + 1) + ".csv"), data.modalities[m]);
  }
  if (data.labels) mdg::io::write_labels(dir / "labels.csv", *data.labels);
  if (data.intrinsic_param) {
    mdg::io::write_matrix(dir / "intrinsic.csv", mdg::Matrix(*data.intrinsic_param), {"u"});
  }
  mdg::io::Metadata meta = data.params;
  for (const auto& w : data.warnings) meta.emplace_back("warning", w);
  mdg::io::write_metadata(dir / "metadata.meta", meta);
  std::cout << "wrote " << data.modalities.size() << " modalities, "
            << data.modalities.front().size() << " samples to " << dir.string() << '\n';
  return 0;
}

int run_pipeline(const mdg::ExperimentConfig& c) {
  const mdg::MultimodalDataset data = mdg::load_modalities(c);
  for (const auto& w : data.warnings) std::cerr << "warning: " << w << '\n';
  const mdg::PipelineResult result = mdg::run_pipeline(c, data);
  mdg::write_artifacts(result, c.output_dir);
  std::cout << mdg::summary_line(result) << '\n';
  return 0;
}

int run_fps(const std::string& dist_path, mdg::Index start, mdg::Index count, const std::string& out) {
  const mdg::Matrix dist = mdg::io::read_matrix(dist_path);
  if (dist.rows() != dist.cols()) {
    throw mdg::InputError(dist_path + " is " + std::to_string(dist.rows()) + "x" +
                          std::to_string(dist.cols()) + ", expected a square distance matrix");
  }
  const mdg::SamplingResult s = mdg::farthest_point_sampling(dist, start, count);
  mdg::Matrix table(static_cast<mdg::Index>(s.indices.size()), 2);
  for (std::size_t i = 0; i < s.indices.size(); ++i) {
    table(static_cast<mdg::Index>(i), 0) = static_cast<double>(s.indices[i]);
    table(static_cast<mdg::Index>(i), 1) = s.radii[i];
  }
  mdg::io::write_matrix(out, table, {"index", "radius"});
  for (mdg::Index i : s.indices) std::cout << i << ' ';
  std::cout << '\n';
  return 0;
}

int run_roc(const std::string& dist_path, const std::string& labels_path, const std::string& out) {
  const mdg::Matrix dist = mdg::io::read_matrix(dist_path);
  const std::vector<int> truth = mdg::io::read_labels(labels_path);
  const mdg::RocCurve roc = mdg::roc_from_distances(dist, truth);
  mdg::io::write_roc(out, roc);
  std::cout << "auc=" << mdg::io::format_double(roc.auc) << '\n';
  return 0;
}

int run_accuracy(const std::string& labels_path, const std::string& truth_path) {
  const std::vector<int> labels = mdg::io::read_labels(labels_path);
  const std::vector<int> truth = mdg::io::read_labels(truth_path);
  std::cout << "accuracy=" << mdg::io::format_double(mdg::clustering_accuracy(labels, truth)) << "%\n";
  return 0;
}

// `--config FILE` becomes one `--key value` pair per line of FILE, inserted
// ahead of the real arguments. Keys also given as flags are dropped so the
// flag wins. Returned in reverse order, as CLI::App::parse(vector) expects.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> given(argv + 1, argv + argc);
  std::vector<std::string> rest;
  std::string config_path;
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (given[i] == "--config" && i + 1 < given.size()) {
      config_path = given[++i];
    } else if (given[i].rfind("--config=", 0) == 0) {
      config_path = given[i].substr(9);
    } else {
      rest.push_back(given[i]);
    }
  }
  std::vector<std::string> out;
  if (!rest.empty()) out.push_back(rest.front());
  if (!config_path.empty()) {
    const auto flagged = [&](const std::string& key) {
      const std::string flag = "--" + key;
      for (const auto& a : rest) {
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
      }
      return false;
    };
    for (const auto& [key, value] : mdg::io::read_metadata(config_path)) {
      if (flagged(key)) continue;
      out.push_back("--" + key);
      out.push_back(value);
    }
  }
  out.insert(out.end(), rest.begin() + (rest.empty() ? 0 : 1), rest.end());
  return {out.rbegin(), out.rend()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multimodal diffusion geometry: joint Laplacian diagonalization pipeline"};
  app.require_subcommand(1);

  mdg::ExperimentConfig gen_config;
  auto* gen = app.add_subcommand("generate", "Write a synthetic multimodal dataset as CSV");
  gen->add_option("--config", "key = value file; flags override it");
  add_dataset_flags(*gen, gen_config);

  mdg::ExperimentConfig pipe_config;
  auto* pipe = app.add_subcommand("pipeline", "Graphs, joint basis, embedding, clustering, scores");
  pipe->add_option("--config", "key = value file; flags override it");
  add_dataset_flags(*pipe, pipe_config);
  add_pipeline_flags(*pipe, pipe_config);

  std::string dist_path, labels_path, truth_path, out_path;
  mdg::Index start = 0, count = 0;
  auto* fps = app.add_subcommand("fps", "Farthest point sampling on a distance matrix CSV");
  fps->add_option("--dist", dist_path, "Distance matrix CSV")->required();
  fps->add_option("--start", start, "First sample index");
  fps->add_option("--count", count, "Number of samples")->required();
  fps->add_option("--output", out_path, "Output CSV (index,radius)")->required();

  auto* roc = app.add_subcommand("roc", "ROC curve and AUC of a distance matrix against labels");
  roc->add_option("--dist", dist_path, "Distance matrix CSV")->required();
  roc->add_option("--labels", labels_path, "Ground-truth labels CSV")->required();
  roc->add_option("--output", out_path, "Output CSV (threshold,fpr,tpr)")->required();

  auto* acc = app.add_subcommand("accuracy", "Clustering accuracy under the best label matching");
  acc->add_option("--labels", labels_path, "Predicted labels CSV")->required();
  acc->add_option("--truth", truth_path, "Ground-truth labels CSV")->required();

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const mdg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageError;
  }

  try {
    if (*gen) return run_generate(gen_config);
    if (*pipe) return run_pipeline(pipe_config);
    if (*fps) return run_fps(dist_path, start, count, out_path);
    if (*roc) return run_roc(dist_path, labels_path, out_path);
    if (*acc) return run_accuracy(labels_path, truth_path);
  } catch (const mdg::NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericError;
  } catch (const mdg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
