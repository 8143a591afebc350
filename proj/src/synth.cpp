#include "mdg/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace mdg {

namespace {

std::string to_text(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string intervals_text(const std::vector<Interval>& regions) {
  std::string out;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (i) out += ';';
    out += to_text(regions[i].lo) + ':' + to_text(regions[i].hi);
  }
  return out;
}

double bulge_profile(double u, const std::vector<Interval>& regions) {
  double s = 0.0;
  for (const auto& r : regions) {
    if (u > r.lo && u < r.hi) {
      const double x = std::sin(std::numbers::pi * (u - r.lo) / (r.hi - r.lo));
      s = std::max(s, x * x);
    }
  }
  return s;
}

bool covers_everything(std::vector<Interval> regions) {
  std::sort(regions.begin(), regions.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double reached = kRollUMin;
  for (const auto& r : regions) {
    if (r.lo > reached) return false;
    reached = std::max(reached, r.hi);
  }
  return reached >= kRollUMax;
}

}  // namespace

std::array<std::vector<Interval>, 2> SwissRollOptions::default_shortcut_regions() {
  // Both bulges sit on the innermost loop, at opposite ends of it, so each
  // modality's shortcut passes far from the other's.
  return {std::vector<Interval>{{4.8, 5.4}}, std::vector<Interval>{{7.2, 7.8}}};
}

MultimodalDataset swiss_roll_pair(const SwissRollOptions& options, std::uint64_t seed) {
  if (options.n < 100) throw ParameterError("swiss roll needs n >= 100");
  if (!(options.noise_sigma >= 0.0)) throw ParameterError("noise_sigma must be nonnegative");
  if (!(options.bulge_clearance >= 0.0)) throw ParameterError("bulge_clearance must be nonnegative");

  MultimodalDataset out;
  out.seed = seed;
  for (std::size_t m = 0; m < 2; ++m) {
    const auto& regions = options.shortcut_regions[m];
    for (const auto& r : regions) {
      if (!(r.lo < r.hi)) throw ParameterError("shortcut interval must have lo < hi");
      if (r.hi + 2.0 * std::numbers::pi > kRollUMax) {
        out.warnings.push_back("modality " + std::to_string(m + 1) + " shortcut region ends at u=" +
                               to_text(r.hi) + " with no loop 2 pi further out");
      }
    }
    if (!regions.empty() && covers_everything(regions)) {
      out.warnings.push_back("modality " + std::to_string(m + 1) +
                             " shortcut regions cover the whole roll");
    }
  }

  const Index n = options.n;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw_u(kRollUMin, kRollUMax);
  std::uniform_real_distribution<double> draw_v(0.0, 20.0);
  Vector u(n), v(n);
  for (Index i = 0; i < n; ++i) {
    u[i] = draw_u(rng);
    v[i] = draw_v(rng);
  }

  const double amp = options.reparam_amplitude;
  const auto radius_of = [amp](std::size_t m, double x) {
    return m == 0 ? x : x + amp * std::sin(1.5 * x);
  };
  std::normal_distribution<double> noise(0.0, 1.0);
  for (std::size_t m = 0; m < 2; ++m) {
    Matrix pts(n, 3);
    for (Index i = 0; i < n; ++i) {
      const double base = radius_of(m, u[i]);
      const double next_loop = radius_of(m, u[i] + 2.0 * std::numbers::pi);
      const double s = bulge_profile(u[i], options.shortcut_regions[m]);
      const double r = base + s * (next_loop - base - options.bulge_clearance);
      pts(i, 0) = r * std::cos(u[i]);
      pts(i, 1) = v[i];
      pts(i, 2) = r * std::sin(u[i]);
    }
    if (options.noise_sigma > 0.0) {
      for (Index i = 0; i < n; ++i) {
        for (Index d = 0; d < 3; ++d) pts(i, d) += options.noise_sigma * noise(rng);
      }
    }
    out.modalities.emplace_back(std::move(pts), std::nullopt, "roll" + std::to_string(m + 1));
  }
  out.intrinsic_param = u;
  out.params = {{"dataset", "swissroll"},
                {"n", std::to_string(n)},
                {"seed", std::to_string(seed)},
                {"noise_sigma", to_text(options.noise_sigma)},
                {"shortcut_regions_1", intervals_text(options.shortcut_regions[0])},
                {"shortcut_regions_2", intervals_text(options.shortcut_regions[1])},
                {"bulge_clearance", to_text(options.bulge_clearance)},
                {"reparam_amplitude", to_text(amp)}};
  return out;
}

namespace {

using Point2 = Eigen::Vector2d;

// Centers at least min_separation apart, except confused.second, which sits
// confusion_distance from confused.first.
std::vector<Point2> draw_centers(const BlobsOptions& o, std::pair<int, int> confused,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(0.0, o.box);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const auto far_enough = [&](const std::vector<Point2>& placed, const Point2& p, int skip) {
    for (int j = 0; j < static_cast<int>(placed.size()); ++j) {
      if (j == skip || placed[j].hasNaN()) continue;
      if ((placed[j] - p).norm() < o.min_separation) return false;
    }
    return true;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point2> centers(o.n_clusters, Point2::Constant(std::nan("")));
    bool ok = true;
    for (int c = 0; c < o.n_clusters && ok; ++c) {
      if (c == confused.second) continue;
      ok = false;
      for (int tries = 0; tries < 1000 && !ok; ++tries) {
        const Point2 p(coord(rng), coord(rng));
        if (far_enough(centers, p, -1)) {
          centers[c] = p;
          ok = true;
        }
      }
    }
    if (ok && confused.second >= 0) {
      ok = false;
      for (int tries = 0; tries < 1000 && !ok; ++tries) {
        const double a = angle(rng);
        const Point2 p = centers[confused.first] + o.confusion_distance * Point2(std::cos(a), std::sin(a));
        if (far_enough(centers, p, confused.first)) {
          centers[confused.second] = p;
          ok = true;
        }
      }
    }
    if (ok) return centers;
  }
  throw ParameterError("could not place blob centers; enlarge box or reduce min_separation");
}

}  // namespace

MultimodalDataset blobs(const BlobsOptions& o, std::uint64_t seed) {
  if (o.n_clusters < 2) throw ParameterError("blobs needs at least 2 clusters");
  if (o.n_per_cluster < 1) throw ParameterError("blobs needs at least 1 point per cluster");
  for (double s : o.sigma) {
    if (!(s >= 0.0)) throw ParameterError("blob sigma must be nonnegative");
  }

  std::mt19937_64 rng(seed);
  std::vector<int> ids(o.n_clusters);
  for (int c = 0; c < o.n_clusters; ++c) ids[c] = c;
  std::shuffle(ids.begin(), ids.end(), rng);
  const std::pair<int, int> confused1{ids[0], ids[1]};
  const std::pair<int, int> confused2 =
      o.n_clusters >= 4 ? std::pair<int, int>{ids[2], ids[3]} : std::pair<int, int>{-1, -1};

  const Index n = o.n_per_cluster * o.n_clusters;
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels[i] = static_cast<int>(i / o.n_per_cluster);

  MultimodalDataset out;
  out.seed = seed;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t m = 0; m < 2; ++m) {
    const auto centers = draw_centers(o, m == 0 ? confused1 : confused2, rng);
    Matrix pts(n, 2);
    for (Index i = 0; i < n; ++i) {
      const Point2& c = centers[labels[i]];
      pts(i, 0) = c.x() + o.sigma[m] * gauss(rng);
      pts(i, 1) = c.y() + o.sigma[m] * gauss(rng);
    }
    out.modalities.emplace_back(std::move(pts), labels, "blobs" + std::to_string(m + 1));
  }
  out.labels = labels;
  out.params = {{"dataset", "blobs"},
                {"n_per_cluster", std::to_string(o.n_per_cluster)},
                {"n_clusters", std::to_string(o.n_clusters)},
                {"seed", std::to_string(seed)},
                {"sigma_1", to_text(o.sigma[0])},
                {"sigma_2", to_text(o.sigma[1])},
                {"box", to_text(o.box)},
                {"min_separation", to_text(o.min_separation)},
                {"confusion_distance", to_text(o.confusion_distance)}};
  return out;
}

MultimodalDataset circles(Index n, std::uint64_t seed, const CirclesOptions& o) {
  if (n < 4 || n % 4 != 0) throw ParameterError("circles needs n divisible by 4 (got " + std::to_string(n) + ")");
  if (!(o.inner_radius > 0.0 && o.outer_radius > o.inner_radius)) {
    throw ParameterError("circles needs 0 < inner_radius < outer_radius");
  }
  if (!(o.gap_width >= 0.0 && o.gap_width < std::numbers::pi)) {
    throw ParameterError("circles gap_width must lie in [0, pi)");
  }
  // (circle, half) per class: circle 0 = inner, half h spans [h pi, (h+1) pi).
  constexpr int kPlacement[2][4][2] = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}},
                                       {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  const Index per_class = n / 4;
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels[i] = static_cast<int>(i / per_class);

  std::mt19937_64 rng(seed);
  const double arc = std::numbers::pi - o.gap_width;
  std::uniform_real_distribution<double> along(0.0, arc);
  std::normal_distribution<double> gauss(0.0, 1.0);
  MultimodalDataset out;
  out.seed = seed;
  for (std::size_t m = 0; m < 2; ++m) {
    Matrix pts(n, 2);
    for (Index i = 0; i < n; ++i) {
      const auto& place = kPlacement[m][labels[i]];
      const double radius = (place[0] == 0 ? o.inner_radius : o.outer_radius) + o.radial_noise * gauss(rng);
      const double x = along(rng);
      const double angle = place[1] * std::numbers::pi + x + (x >= 0.5 * arc ? o.gap_width : 0.0);
      pts(i, 0) = radius * std::cos(angle);
      pts(i, 1) = radius * std::sin(angle);
    }
    out.modalities.emplace_back(std::move(pts), labels, "circles" + std::to_string(m + 1));
  }
  out.labels = labels;
  out.params = {{"dataset", "circles"},
                {"n", std::to_string(n)},
                {"seed", std::to_string(seed)},
                {"inner_radius", to_text(o.inner_radius)},
                {"outer_radius", to_text(o.outer_radius)},
                {"radial_noise", to_text(o.radial_noise)},
                {"gap_width", to_text(o.gap_width)}};
  return out;
}

}  // namespace mdg
