#pragma once

// File formats. CSVs use ',' separators, '.' decimals and a header row.
// Metadata sidecars are "key = value" lines. Doubles are written in the
// shortest form that round-trips, so identical inputs give identical bytes.

#include "mdg/common.hpp"
#include "mdg/eval.hpp"
#include "mdg/graph.hpp"
#include "mdg/jade.hpp"
#include "mdg/spectral.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace mdg::io {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Raised for unreadable/unwritable files and malformed file contents.
class IoError : public InputError {
 public:
  using InputError::InputError;
};

std::string format_double(double x);

/// Point cloud CSV: header row, numeric feature columns, optional final
/// column named `label` holding integer class ids.
PointCloud read_point_cloud(const std::filesystem::path& path, std::string modality_name = {});
void write_point_cloud(const std::filesystem::path& path, const PointCloud& cloud);

/// Numeric CSV with a header row (header contents are ignored on read).
Matrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const Matrix& m,
                  const std::vector<std::string>& header = {});

/// Single-column CSV with header `label`.
std::vector<int> read_labels(const std::filesystem::path& path);
void write_labels(const std::filesystem::path& path, const std::vector<int>& labels);

void write_metadata(const std::filesystem::path& path, const Metadata& entries);
Metadata read_metadata(const std::filesystem::path& path);

/// Matrix Market coordinate real symmetric (lower triangle, 1-based).
void write_matrix_market(const std::filesystem::path& path, const WeightGraph& graph);
SparseMatrix read_matrix_market(const std::filesystem::path& path);

/// <stem>.csv with one column per eigenvector, header = joint eigenvalues;
/// <stem>.meta with residual and sweep count.
void write_joint_basis(const std::filesystem::path& stem, const JointBasis& basis);

/// threshold,fpr,tpr CSV plus <path>.meta holding auc.
void write_roc(const std::filesystem::path& path, const RocCurve& roc);

/// Labels CSV plus <path>.meta with seed, inertia and restarts.
void write_cluster_result(const std::filesystem::path& path, const ClusterResult& result);

/// `path` with ".meta" appended to its file name.
std::filesystem::path sidecar(const std::filesystem::path& path);

}  // namespace mdg::io
