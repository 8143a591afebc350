#include "mdg/eval.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace mdg {

std::vector<Index> max_weight_assignment(const Matrix& score) {
  // Hungarian algorithm (shortest augmenting paths with potentials) on the
  // square padding of -score.
  const Index rows = score.rows();
  const Index n = std::max(rows, score.cols());
  Matrix cost = Matrix::Zero(n, n);
  cost.topLeftCorner(rows, score.cols()) = -score;

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<Index> match(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (Index i = 1; i <= n; ++i) {
    match[0] = i;
    Index j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const Index i0 = match[j0];
      double delta = inf;
      Index j1 = 0;
      for (Index j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (Index j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const Index j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<Index> result(static_cast<std::size_t>(rows), -1);
  for (Index j = 1; j <= n; ++j) {
    const Index r = match[j] - 1;
    if (r < rows && j - 1 < score.cols()) result[r] = j - 1;
  }
  return result;
}

namespace {

// Dense 0..k-1 ids in order of first appearance.
std::vector<Index> compact_ids(std::span<const int> ids, Index& count) {
  std::map<int, Index> seen;
  std::vector<Index> out;
  out.reserve(ids.size());
  for (int id : ids) {
    auto [it, inserted] = seen.emplace(id, static_cast<Index>(seen.size()));
    out.push_back(it->second);
  }
  count = static_cast<Index>(seen.size());
  return out;
}

}  // namespace

double clustering_accuracy(std::span<const int> labels, std::span<const int> truth) {
  if (labels.size() != truth.size()) {
    throw InputError("label vectors differ in length (" + std::to_string(labels.size()) + " vs " +
                     std::to_string(truth.size()) + ")");
  }
  if (labels.empty()) throw InputError("label vectors are empty");
  Index k_pred = 0, k_true = 0;
  const auto pred = compact_ids(labels, k_pred);
  const auto real = compact_ids(truth, k_true);
  Matrix table = Matrix::Zero(k_pred, k_true);
  for (std::size_t i = 0; i < pred.size(); ++i) table(pred[i], real[i]) += 1.0;
  const auto match = max_weight_assignment(table);
  double correct = 0.0;
  for (Index r = 0; r < k_pred; ++r) {
    if (match[r] >= 0) correct += table(r, match[r]);
  }
  return 100.0 * correct / static_cast<double>(labels.size());
}

RocCurve roc_from_distances(const Matrix& dist, std::span<const int> truth) {
  const Index n = dist.rows();
  if (dist.cols() != n) throw InputError("distance matrix must be square");
  if (static_cast<Index>(truth.size()) != n) {
    throw InputError("truth has " + std::to_string(truth.size()) + " entries for " +
                     std::to_string(n) + " points");
  }
  struct Pair {
    double d;
    bool positive;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  double positives = 0.0, negatives = 0.0;
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      const bool same = truth[i] == truth[j];
      pairs.push_back({dist(i, j), same});
      (same ? positives : negatives) += 1.0;
    }
  }
  if (negatives == 0.0) throw InputError("degenerate ROC: a single class gives no negative pairs");
  if (positives == 0.0) throw InputError("degenerate ROC: no two samples share a class");
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.d < b.d; });

  RocCurve roc;
  roc.points.push_back({-std::numeric_limits<double>::infinity(), 0.0, 0.0});
  double tp = 0.0, fp = 0.0;
  for (std::size_t i = 0; i < pairs.size();) {
    const double threshold = pairs[i].d;
    for (; i < pairs.size() && pairs[i].d == threshold; ++i) (pairs[i].positive ? tp : fp) += 1.0;
    const RocPoint& prev = roc.points.back();
    const RocPoint next{threshold, fp / negatives, tp / positives};
    roc.auc += 0.5 * (next.fpr - prev.fpr) * (next.tpr + prev.tpr);
    roc.points.push_back(next);
  }
  return roc;
}

}  // namespace mdg
