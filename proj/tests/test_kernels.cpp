#include "mdg/kernels.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mdg;

TEST_CASE("pairwise distances match the brute-force oracle") {
  std::mt19937_64 rng(11);
  const Matrix pts = oracle::random_points(37, 5, rng);
  const Matrix expect = oracle::distances(pts);
  CHECK((kernels::pairwise_distances_serial(pts) - expect).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((kernels::pairwise_distances(pts) - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("parallel kernels are bit-identical to the serial reference") {
  std::mt19937_64 rng(12);
  for (Index n : {2, 9, 64, 301}) {
    const Matrix pts = oracle::random_points(n, 3, rng);
    CHECK(kernels::pairwise_distances(pts) == kernels::pairwise_distances_serial(pts));

    const Index k = std::min<Index>(5, n - 1);
    const auto a = kernels::knn(pts, k);
    const auto b = kernels::knn_serial(pts, k);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].index == b.entries[i].index);
      CHECK(a.entries[i].distance == b.entries[i].distance);
    }

    const Matrix centroids = oracle::random_points(std::min<Index>(4, n), 3, rng);
    std::vector<Index> la, lb;
    Vector da, db;
    kernels::assign_nearest(pts, centroids, la, da);
    kernels::assign_nearest_serial(pts, centroids, lb, db);
    CHECK(la == lb);
    CHECK(da == db);
  }
}

TEST_CASE("knn rows are sorted and agree with a full sort of the distance row") {
  std::mt19937_64 rng(13);
  const Matrix pts = oracle::random_points(40, 2, rng);
  const Matrix d = oracle::distances(pts);
  const auto table = kernels::knn(pts, 6);
  for (Index i = 0; i < 40; ++i) {
    std::vector<std::pair<double, Index>> row;
    for (Index j = 0; j < 40; ++j)
      if (j != i) row.push_back({d(i, j), j});
    std::sort(row.begin(), row.end());
    for (Index r = 0; r < 6; ++r) {
      CHECK(table.row(i)[r].index == row[static_cast<std::size_t>(r)].second);
      CHECK(table.row(i)[r].distance == doctest::Approx(row[static_cast<std::size_t>(r)].first));
    }
  }
}

TEST_CASE("knn breaks distance ties by lower index") {
  Matrix pts(4, 1);
  pts << 0.0, -1.0, 1.0, 5.0;
  const auto table = kernels::knn_serial(pts, 2);
  CHECK(table.row(0)[0].index == 1);
  CHECK(table.row(0)[1].index == 2);
  const auto par = kernels::knn(pts, 2);
  CHECK(par.row(0)[0].index == 1);
  CHECK(par.row(0)[1].index == 2);
}

TEST_CASE("assign_nearest picks the first centroid on ties") {
  Matrix pts(1, 1);
  pts << 0.5;
  Matrix c(2, 1);
  c << 0.0, 1.0;
  std::vector<Index> labels;
  Vector sq;
  kernels::assign_nearest(pts, c, labels, sq);
  CHECK(labels[0] == 0);
  CHECK(sq[0] == 0.25);
}
