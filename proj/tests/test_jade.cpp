#include "mdg/jade.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace mdg;

namespace {

Matrix rotation_matrix(Index n, Index p, Index q, Rotation r) {
  Matrix m = Matrix::Identity(n, n);
  m(p, p) = r.c;
  m(q, q) = r.c;
  m(p, q) = r.s;
  m(q, p) = -r.s;
  return m;
}

}  // namespace

TEST_CASE("off_norm examples") {
  CHECK(off_norm(Vector(Eigen::Vector3d(3, -1, 7)).asDiagonal().toDenseMatrix()) == 0.0);
  Matrix m(2, 2);
  m << 1, 2, 3, 4;
  CHECK(off_norm(m) == 13.0);
  CHECK(off_norm(Matrix::Identity(5, 5)) == 0.0);
}

TEST_CASE("MatrixSet validation") {
  CHECK_THROWS_AS(MatrixSet({}), InputError);
  CHECK_THROWS_AS(MatrixSet({Matrix::Zero(2, 3)}), InputError);
  CHECK_THROWS_AS(MatrixSet({Matrix::Identity(2, 2), Matrix::Identity(3, 3)}), InputError);
  Matrix asym = Matrix::Identity(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(MatrixSet({asym}), InputError);
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(MatrixSet({nan}), InputError);
}

TEST_CASE("rotation for the 2x2 swap matrix") {
  Matrix a(2, 2);
  a << 0, 1, 1, 0;
  const std::vector<Matrix> set{a};
  const Rotation r = rotation_for_pair(set, 0, 1);
  CHECK(r.c == doctest::Approx(std::sqrt(0.5)));
  CHECK(r.s == doctest::Approx(std::sqrt(0.5)));
  const Matrix rr = rotation_matrix(2, 0, 1, r);
  const Matrix out = rr.transpose() * a * rr;
  CHECK(out(0, 0) == doctest::Approx(-1.0));
  CHECK(out(1, 1) == doctest::Approx(1.0));
  CHECK(std::abs(out(0, 1)) < 1e-15);

  Matrix b = a;
  rotate_symmetric(b, 0, 1, r);
  CHECK((b - out).norm() < 1e-15);
}

TEST_CASE("already diagonal pairs give the identity rotation") {
  const std::vector<Matrix> set{Vector(Eigen::Vector3d(1, 2, 3)).asDiagonal().toDenseMatrix(),
                                Vector(Eigen::Vector3d(0, 0, 5)).asDiagonal().toDenseMatrix()};
  for (auto [p, q] : {std::pair<Index, Index>{0, 1}, {0, 2}, {1, 2}}) {
    const Rotation r = rotation_for_pair(set, p, q);
    CHECK(r.c == 1.0);
    CHECK(r.s == 0.0);
  }
}

TEST_CASE("rotation recovers a known conjugation") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    const double th = angle(rng);
    const Rotation r0{std::cos(th), std::sin(th)};
    const Matrix r0m = rotation_matrix(2, 0, 1, r0);
    std::vector<Matrix> set;
    for (int i = 0; i < 3; ++i) {
      const Matrix d = Vector(Eigen::Vector2d(g(rng), g(rng))).asDiagonal();
      set.push_back(r0m * d * r0m.transpose());
    }
    const Rotation r = rotation_for_pair(set, 0, 1);
    CHECK(r.c * r.c + r.s * r.s == doctest::Approx(1.0));
    const Matrix rm = rotation_matrix(2, 0, 1, r);
    for (const auto& a : set) CHECK(oracle::off(rm.transpose() * a * rm) < 1e-20);
    // R0^T R must be a signed permutation.
    const Matrix p = r0m.transpose() * rm;
    const bool same = (p.cwiseAbs() - Matrix::Identity(2, 2)).norm() < 1e-9;
    const bool swapped = (p.cwiseAbs() - (Matrix(2, 2) << 0, 1, 1, 0).finished()).norm() < 1e-9;
    CHECK((same || swapped));
  }
}

TEST_CASE("rotation minimizes the pair objective against a dense angle scan") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Matrix> set{oracle::random_symmetric(4, rng), oracle::random_symmetric(4, rng)};
    const auto total = [&](Rotation r) {
      double s = 0.0;
      const Matrix rm = rotation_matrix(4, 1, 3, r);
      for (const auto& a : set) s += oracle::off(rm.transpose() * a * rm);
      return s;
    };
    const double best = total(rotation_for_pair(set, 1, 3));
    for (int k = 0; k < 2000; ++k) {
      const double th = M_PI * k / 2000.0;
      CHECK(best <= total({std::cos(th), std::sin(th)}) + 1e-10);
    }
  }
}

TEST_CASE("single matrix JADE matches a reference eigensolver") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = oracle::random_symmetric(15, rng);
    const JointBasis jb = jade(MatrixSet({a}));
    CHECK(jb.residual < 1e-10 * a.squaredNorm());
    CHECK((jb.joint_eigs - oracle::eigenvalues(a)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((jb.basis.transpose() * jb.basis - Matrix::Identity(15, 15)).norm() < 1e-10);
    CHECK((a * jb.basis - jb.basis * jb.joint_eigs.asDiagonal()).norm() < 1e-8 * a.norm());
  }
}

TEST_CASE("commuting pair {L, L^2} is diagonalized exactly") {
  std::mt19937_64 rng(24);
  const Matrix l = oracle::random_symmetric(12, rng);
  const Matrix l2 = l * l;
  const JointBasis jb = jade(MatrixSet({l, l2}));
  CHECK(jb.residual < 1e-10 * (l.squaredNorm() + l2.squaredNorm()));
}

TEST_CASE("{A, A} reproduces {A} with doubled residual") {
  std::mt19937_64 rng(25);
  const Matrix a = oracle::random_symmetric(10, rng);
  JadeOptions opts;
  opts.max_sweeps = 2;  // stop early so the residual is nonzero
  const JointBasis one = jade(MatrixSet({a}), opts);
  const JointBasis two = jade(MatrixSet({a, a}), opts);
  CHECK(one.basis == two.basis);
  CHECK(two.residual == doctest::Approx(2.0 * one.residual));
  CHECK(one.joint_eigs == two.joint_eigs);
}

TEST_CASE("output conventions") {
  std::mt19937_64 rng(26);
  const MatrixSet set({oracle::random_symmetric(9, rng), oracle::random_symmetric(9, rng)});
  const JointBasis jb = jade(set);
  for (Index j = 1; j < 9; ++j) CHECK(jb.joint_eigs[j - 1] <= jb.joint_eigs[j]);
  for (Index j = 0; j < 9; ++j) {
    CHECK(jb.joint_eigs[j] == (jb.per_modality_eigs(0, j) + jb.per_modality_eigs(1, j)) / 2.0);
    Index arg = 0;
    jb.basis.col(j).cwiseAbs().maxCoeff(&arg);
    CHECK(jb.basis(arg, j) >= 0.0);
  }
  const JointEigenReport rep = joint_eigendecomposition_report(set, jb.basis);
  CHECK(rep.residual == doctest::Approx(jb.residual).epsilon(1e-9));
  CHECK((rep.per_modality_eigs - jb.per_modality_eigs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("determinism") {
  std::mt19937_64 rng(27);
  const MatrixSet set({oracle::random_symmetric(8, rng), oracle::random_symmetric(8, rng)});
  const JointBasis a = jade(set);
  const JointBasis b = jade(set);
  CHECK(a.basis == b.basis);
  CHECK(a.per_modality_eigs == b.per_modality_eigs);
  CHECK(a.residual == b.residual);
}

TEST_CASE("report examples") {
  const Matrix l1 = Vector(Eigen::Vector2d(0, 1)).asDiagonal();
  const Matrix l2 = Vector(Eigen::Vector2d(0, 3)).asDiagonal();
  const auto rep = joint_eigendecomposition_report(MatrixSet({l1, l2}), Matrix::Identity(2, 2));
  CHECK(rep.residual == 0.0);
  CHECK(rep.joint_eigs[0] == 0.0);
  CHECK(rep.joint_eigs[1] == 2.0);
  CHECK(rep.per_modality_eigs.row(1) == Eigen::RowVector2d(0, 3));

  std::mt19937_64 rng(28);
  const Matrix a = oracle::random_symmetric(6, rng);
  const Matrix q = oracle::random_orthogonal(6, rng);
  const auto r = joint_eigendecomposition_report(MatrixSet({a}), q);
  CHECK(r.residual == doctest::Approx(oracle::off(q.transpose() * a * q)).epsilon(1e-12));

  CHECK_THROWS_AS(joint_eigendecomposition_report(MatrixSet({a}), 2.0 * q), InputError);
}

TEST_CASE("options validation") {
  const MatrixSet set({Matrix::Identity(2, 2)});
  JadeOptions bad;
  bad.max_sweeps = -1;
  CHECK_THROWS_AS(jade(set, bad), ParameterError);
  JadeOptions w;
  w.weights = {1.0, 2.0};
  CHECK_THROWS_AS(jade(set, w), ParameterError);
}
