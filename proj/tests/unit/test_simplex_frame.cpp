#include <gtest/gtest.h>

#include <cmath>

#include "jgap/error.hpp"
#include "jgap/simplex_frame.hpp"
#include "oracles.hpp"

using namespace jgap;

TEST(SimplexFrame, TooSmall) {
  EXPECT_THROW(build_simplex(1), Error);
  EXPECT_THROW(equator_frame(build_simplex(2)), Error);
}

TEST(SimplexFrame, PlanarAngles) {
  const SimplexFrame f = build_simplex(2);
  ASSERT_EQ(f.contacts.rows(), 3);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(f.contacts.row(i).norm(), 1.0, 1e-15);
    for (int j = i + 1; j < 3; ++j) EXPECT_NEAR(f.contacts.row(i).dot(f.contacts.row(j)), -0.5, 1e-15);
  }
}

TEST(SimplexFrame, GramMatrixN3) {
  const SimplexFrame f = build_simplex(3);
  const Eigen::MatrixXd G = f.contacts * f.contacts.transpose();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(G(i, j), i == j ? 1.0 : -1.0 / 3.0, 1e-15);
}

TEST(SimplexFrame, MatchesLiteralGramSchmidt) {
  for (int n : {2, 3, 5, 10, 40}) {
    const SimplexFrame f = build_simplex(n);
    const Eigen::MatrixXd U = oracle::simplex_contacts_mgs(n);
    EXPECT_LE((Eigen::MatrixXd(f.contacts) - U).cwiseAbs().maxCoeff(), 1e-13) << "n=" << n;
  }
}

TEST(SimplexFrame, GramAndJohnReports) {
  for (int n : {2, 3, 10, 100}) {
    const SimplexFrame f = build_simplex(n);
    const GramReport g = gram_report(f);
    EXPECT_LE(g.norm_error, 1e-10);
    EXPECT_LE(g.gram_error, 1e-10);
    EXPECT_LE(g.sum_error, 1e-9);
    const JohnReport j = john_check(f.contacts, f.weights);
    EXPECT_LE(j.identity_error, 1e-8);
    EXPECT_LE(j.barycenter_error, 1e-9);
    EXPECT_NEAR(f.weights[0], n / (n + 1.0), 1e-15);
  }
}

TEST(SimplexFrame, JohnCheckCoordinateCross) {
  const int n = 4;
  Matrix pts(2 * n, n);
  pts.setZero();
  for (int i = 0; i < n; ++i) {
    pts(2 * i, i) = 1.0;
    pts(2 * i + 1, i) = -1.0;
  }
  const JohnReport r = john_check(pts, Vector::Constant(2 * n, 0.5));
  EXPECT_LE(r.identity_error, 1e-12);
  EXPECT_EQ(r.barycenter_error, 0.0);
}

TEST(SimplexFrame, JohnCheckDetectsWrongWeights) {
  for (int n : {3, 7, 20}) {
    const SimplexFrame f = build_simplex(n);
    const JohnReport r = john_check(f.contacts, Vector::Ones(n + 1));
    EXPECT_NEAR(r.identity_error, std::sqrt(static_cast<double>(n)) / n, 1e-12);
  }
}

TEST(SimplexFrame, JohnCheckCountMismatch) {
  const SimplexFrame f = build_simplex(3);
  EXPECT_THROW(john_check(f.contacts, Vector::Ones(3)), Error);
}

TEST(SimplexFrame, EquatorSectionGeometry) {
  double previous = 0.0;
  for (int n : {3, 4, 8, 30, 200}) {
    const SimplexFrame f = build_simplex(n);
    const EquatorFrame eq = equator_frame(f);
    EXPECT_NEAR(eq.c_n, std::sqrt((n - 1.0) / (n + 1.0)), 1e-12);
    EXPECT_GT(eq.c_n, previous);
    previous = eq.c_n;
    const HPolytope d = simplex_hrep(f);
    for (int i = 0; i < n; ++i) {
      const Vector v = eq.dirs.row(i).transpose();
      EXPECT_NEAR(v.norm(), 1.0, 1e-12);
      EXPECT_NEAR(v.dot(eq.beta), 0.0, 1e-12);
      // c_n n v_i is a point of the boundary.
      const Vector p = eq.c_n * n * v;
      EXPECT_NEAR((d.normals() * p - d.offsets()).maxCoeff(), 0.0, 1e-9);
    }
    // Regular (n-1)-simplex: <v_i, v_j> = -1/(n-1).
    const Eigen::MatrixXd G = eq.dirs * eq.dirs.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) EXPECT_NEAR(G(i, j), -1.0 / (n - 1.0), 1e-12);
  }
}
