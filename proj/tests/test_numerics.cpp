#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "cossum/numerics.hpp"

namespace cossum {
namespace {

std::vector<double> sorted_real(const std::vector<Complex>& v) {
  std::vector<double> r;
  for (const auto& c : v) r.push_back(c.real());
  std::sort(r.begin(), r.end());
  return r;
}

TEST(Svd, ReconstructsAndSortsDescending) {
  Matrix a = Matrix::Random(7, 4);
  for (auto mode : {SvdVectors::full, SvdVectors::thin}) {
    const auto d = svd(a, mode);
    for (Eigen::Index i = 1; i < d.sigma.size(); ++i) EXPECT_GE(d.sigma(i - 1), d.sigma(i));
    const Matrix back = d.u.leftCols(4) * d.sigma.asDiagonal() * d.v.leftCols(4).transpose();
    EXPECT_LT((back - a).norm(), 1e-12);
  }
}

TEST(Svd, LargeMatricesUseSameConventions) {
  Matrix a = Matrix::Random(150, 90);
  const auto d = svd(a, SvdVectors::thin);
  for (Eigen::Index i = 1; i < d.sigma.size(); ++i) EXPECT_GE(d.sigma(i - 1), d.sigma(i));
  EXPECT_LT((d.u * d.sigma.asDiagonal() * d.v.transpose() - a).norm(), 1e-10);
  const auto left = svd_left(a);
  EXPECT_EQ(left.u.cols(), 90);
  EXPECT_LT((left.sigma - d.sigma).norm(), 1e-10);
}

TEST(Svd, NonFiniteInputThrows) {
  Matrix a = Matrix::Ones(2, 2);
  a(0, 1) = std::nan("");
  EXPECT_THROW(svd(a), std::invalid_argument);
}

TEST(LeastSquares, MinimumNormOnRankDeficientSystem) {
  Matrix a(2, 2);
  a << 1, 1, 1, 1;
  Vector b(2);
  b << 2, 2;
  const Vector x = least_squares(a, b);
  EXPECT_NEAR(x(0), 1.0, 1e-12);
  EXPECT_NEAR(x(1), 1.0, 1e-12);
}

TEST(LeastSquares, MatrixRightHandSide) {
  Matrix a = Matrix::Random(6, 3);
  Matrix x = Matrix::Random(3, 2);
  const Matrix got = least_squares(a, Matrix(a * x));
  EXPECT_LT((got - x).norm(), 1e-12);
  EXPECT_THROW(least_squares(a, Matrix(Matrix::Zero(5, 2))), std::invalid_argument);
}

TEST(Eig, DenseSpectrum) {
  Matrix a(2, 2);
  a << 0, 1, -1, 0;
  auto v = eig_dense(a);
  ASSERT_EQ(v.size(), 2u);
  for (const auto& c : v) EXPECT_NEAR(std::abs(c.imag()), 1.0, 1e-14);
}

TEST(Eig, PencilSeparatesInfiniteEigenvalues) {
  Matrix a = Matrix::Zero(3, 3), b = Matrix::Zero(3, 3);
  a.diagonal() << 2.0, 3.0, 1.0;
  b.diagonal() << 1.0, 1.0, 0.0;
  const auto s = eig_pencil(a, b);
  EXPECT_EQ(s.infinite, 1u);
  EXPECT_EQ(sorted_real(s.finite), (std::vector<double>{2.0, 3.0}));
}

TEST(NumericalRank, ThresholdIsRelative) {
  const std::vector<double> sigma{10.0, 1.0, 1e-12, 1e-14};
  EXPECT_EQ(numerical_rank(sigma, 1e-10), 2u);
  EXPECT_EQ(numerical_rank(sigma, 1e-20), 4u);
  EXPECT_EQ(numerical_rank(std::vector<double>{0.0, 0.0}, 1e-10), 0u);
}

}  // namespace
}  // namespace cossum
