#include "mdg/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace mdg::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return in;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& text, const std::filesystem::path& path, std::size_t line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    throw IoError(path.string() + ":" + std::to_string(line) + ": not a number: '" + text + "'");
  }
  return value;
}

int parse_int(const std::string& text, const std::filesystem::path& path, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw IoError(path.string() + ":" + std::to_string(line) + ": not an integer label: '" + text +
                  "'");
  }
  return value;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table read_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (!have_header) {
      t.header = split(line);
      have_header = true;
      continue;
    }
    t.rows.push_back(split(line));
    if (t.rows.back().size() != t.header.size()) {
      throw IoError(path.string() + ": row " + std::to_string(t.rows.size()) + " has " +
                    std::to_string(t.rows.back().size()) + " fields, header has " +
                    std::to_string(t.header.size()));
    }
  }
  if (!have_header) throw IoError(path.string() + ": empty file (header row required)");
  return t;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::filesystem::path sidecar(const std::filesystem::path& path) {
  std::filesystem::path out = path;
  out += ".meta";
  return out;
}

PointCloud read_point_cloud(const std::filesystem::path& path, std::string modality_name) {
  const Table t = read_table(path);
  const bool has_label = !t.header.empty() && t.header.back() == "label";
  const std::size_t features = t.header.size() - (has_label ? 1 : 0);
  if (features == 0) throw IoError(path.string() + ": no feature columns");
  Matrix pts(static_cast<Index>(t.rows.size()), static_cast<Index>(features));
  std::vector<int> labels;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < features; ++c) {
      pts(static_cast<Index>(r), static_cast<Index>(c)) = parse_double(t.rows[r][c], path, r + 2);
    }
    if (has_label) labels.push_back(parse_int(t.rows[r].back(), path, r + 2));
  }
  if (modality_name.empty()) modality_name = path.stem().string();
  std::optional<std::vector<int>> maybe_labels;
  if (has_label) maybe_labels = std::move(labels);
  return PointCloud(std::move(pts), std::move(maybe_labels), std::move(modality_name));
}

void write_point_cloud(const std::filesystem::path& path, const PointCloud& cloud) {
  auto out = open_out(path);
  const Matrix& p = cloud.points();
  for (Index c = 0; c < p.cols(); ++c) out << (c ? "," : "") << 'x' << c;
  if (cloud.labels()) out << ",label";
  out << '\n';
  for (Index r = 0; r < p.rows(); ++r) {
    for (Index c = 0; c < p.cols(); ++c) out << (c ? "," : "") << format_double(p(r, c));
    if (cloud.labels()) out << ',' << (*cloud.labels())[static_cast<std::size_t>(r)];
    out << '\n';
  }
}

Matrix read_matrix(const std::filesystem::path& path) {
  const Table t = read_table(path);
  Matrix m(static_cast<Index>(t.rows.size()), static_cast<Index>(t.header.size()));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.header.size(); ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = parse_double(t.rows[r][c], path, r + 2);
    }
  }
  return m;
}

void write_matrix(const std::filesystem::path& path, const Matrix& m,
                  const std::vector<std::string>& header) {
  auto out = open_out(path);
  for (Index c = 0; c < m.cols(); ++c) {
    out << (c ? "," : "");
    if (header.empty()) {
      out << 'c' << c;
    } else {
      out << header[static_cast<std::size_t>(c)];
    }
  }
  out << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) out << (c ? "," : "") << format_double(m(r, c));
    out << '\n';
  }
}

std::vector<int> read_labels(const std::filesystem::path& path) {
  const Table t = read_table(path);
  if (t.header.size() != 1) throw IoError(path.string() + ": labels CSV must have one column");
  std::vector<int> labels;
  labels.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) labels.push_back(parse_int(t.rows[r][0], path, r + 2));
  return labels;
}

void write_labels(const std::filesystem::path& path, const std::vector<int>& labels) {
  auto out = open_out(path);
  out << "label\n";
  for (int l : labels) out << l << '\n';
}

void write_metadata(const std::filesystem::path& path, const Metadata& entries) {
  auto out = open_out(path);
  for (const auto& [key, value] : entries) out << key << " = " << value << '\n';
}

Metadata read_metadata(const std::filesystem::path& path) {
  auto in = open_in(path);
  Metadata entries;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError(path.string() + ": expected key = value: " + line);
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

void write_matrix_market(const std::filesystem::path& path, const WeightGraph& graph) {
  const SparseMatrix& w = graph.weights();
  Index nnz = 0;
  for (Index col = 0; col < w.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(w, col); it; ++it) nnz += it.row() >= col;
  }
  auto out = open_out(path);
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << w.rows() << ' ' << w.cols() << ' ' << nnz << '\n';
  for (Index col = 0; col < w.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(w, col); it; ++it) {
      if (it.row() >= col) out << it.row() + 1 << ' ' << col + 1 << ' ' << format_double(it.value()) << '\n';
    }
  }
}

SparseMatrix read_matrix_market(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket matrix coordinate real", 0) != 0) {
    throw IoError(path.string() + ": not a Matrix Market coordinate real file");
  }
  const bool symmetric = line.find("symmetric") != std::string::npos;
  while (std::getline(in, line) && !line.empty() && line.front() == '%') {
  }
  std::istringstream dims(line);
  Index rows = 0, cols = 0, nnz = 0;
  if (!(dims >> rows >> cols >> nnz)) throw IoError(path.string() + ": bad size line");
  std::vector<Eigen::Triplet<double>> triplets;
  for (Index k = 0; k < nnz; ++k) {
    Index i = 0, j = 0;
    std::string value;
    if (!(in >> i >> j >> value)) throw IoError(path.string() + ": truncated entry list");
    const double x = parse_double(value, path, static_cast<std::size_t>(k + 3));
    triplets.emplace_back(i - 1, j - 1, x);
    if (symmetric && i != j) triplets.emplace_back(j - 1, i - 1, x);
  }
  SparseMatrix m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

void write_joint_basis(const std::filesystem::path& stem, const JointBasis& basis) {
  std::vector<std::string> header;
  header.reserve(static_cast<std::size_t>(basis.joint_eigs.size()));
  for (Index j = 0; j < basis.joint_eigs.size(); ++j) header.push_back(format_double(basis.joint_eigs[j]));
  std::filesystem::path csv = stem;
  csv += ".csv";
  write_matrix(csv, basis.basis, header);
  write_metadata(sidecar(csv), {{"residual", format_double(basis.residual)},
                                {"sweeps_used", std::to_string(basis.sweeps_used)},
                                {"modalities", std::to_string(basis.per_modality_eigs.rows())},
                                {"n", std::to_string(basis.basis.rows())}});
}

void write_roc(const std::filesystem::path& path, const RocCurve& roc) {
  auto out = open_out(path);
  out << "threshold,fpr,tpr\n";
  for (const auto& p : roc.points) {
    out << format_double(p.threshold) << ',' << format_double(p.fpr) << ',' << format_double(p.tpr) << '\n';
  }
  out.close();
  write_metadata(sidecar(path), {{"auc", format_double(roc.auc)},
                                 {"points", std::to_string(roc.points.size())}});
}

void write_cluster_result(const std::filesystem::path& path, const ClusterResult& result) {
  write_labels(path, result.labels);
  write_metadata(sidecar(path), {{"seed", std::to_string(result.seed)},
                                 {"inertia", format_double(result.inertia)},
                                 {"restarts", std::to_string(result.restarts)},
                                 {"clusters", std::to_string(result.centroids.rows())}});
}

}  // namespace mdg::io
