#pragma once

#include "mdg/common.hpp"

#include <span>
#include <vector>

namespace mdg {

/// Maximum-weight one-to-one assignment on a rectangular score matrix:
/// result[r] is the column matched to row r, or -1 when rows outnumber columns.
std::vector<Index> max_weight_assignment(const Matrix& score);

/// Percentage of samples correctly labelled under the best one-to-one
/// matching of predicted clusters to true classes.
double clustering_accuracy(std::span<const int> labels, std::span<const int> truth);

struct RocPoint {
  double threshold;
  double fpr;
  double tpr;
};

struct RocCurve {
  std::vector<RocPoint> points;  ///< starts at (0, 0) with threshold -inf, ends at (1, 1)
  double auc = 0.0;
};

/// ROC over unordered pairs i < j (positive = same class), predicting a pair
/// positive when its distance is <= the threshold. Thresholds sweep the
/// sorted unique off-diagonal distances; AUC by the trapezoid rule.
RocCurve roc_from_distances(const Matrix& dist, std::span<const int> truth);

}  // namespace mdg
