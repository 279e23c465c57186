#include "pism/covariance_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pism {

Eigen::MatrixXd factor_psd_rank2(const Eigen::MatrixXd& cy) {
  if (cy.rows() != cy.cols()) throw std::invalid_argument("factor_psd_rank2: not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cy);
  const int n = static_cast<int>(cy.rows());
  Eigen::MatrixXd ky = Eigen::MatrixXd::Zero(n, 2);
  for (int j = 0; j < 2 && j < n; ++j) {
    const double lambda = eig.eigenvalues()[n - 1 - j];
    if (lambda > 0.0) ky.col(j) = std::sqrt(lambda) * eig.eigenvectors().col(n - 1 - j);
  }
  return ky;
}

Eigen::MatrixXd mixing_matrix(const Eigen::Vector2d& cx_diag, const Eigen::MatrixXd& ky,
                              const Eigen::MatrixXd& q) {
  if (ky.cols() != 2 || q.cols() != 2 || ky.rows() != q.rows())
    throw std::invalid_argument("mixing_matrix: shape mismatch");

  const double cx_max = cx_diag.maxCoeff();
  if (!(cx_max > 0.0)) return q;  // silent tile, output stays silent

  const Eigen::Vector2d cx = cx_diag.cwiseMax(kCxRegularization * cx_max);
  const Eigen::Vector2d kx = cx.cwiseSqrt();

  // A = Kx^T Q^T Ky (2x2); M = Ky V U^T Kx^{-1}.
  const Eigen::Matrix2d a = kx.asDiagonal() * (q.transpose() * ky);
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix2d rotation = svd.matrixV() * svd.matrixU().transpose();
  Eigen::MatrixXd m = ky * rotation * kx.cwiseInverse().asDiagonal();

  if (m.cwiseAbs().maxCoeff() > kMixingGainLimit) {
    const double target = ky.squaredNorm();  // trace(Cy)
    m = m.cwiseMax(-kMixingGainLimit).cwiseMin(kMixingGainLimit);
    const double achieved = (m * cx.asDiagonal() * m.transpose()).trace();
    if (achieved > 0.0) {
      m *= std::sqrt(target / achieved);
      m = m.cwiseMax(-kMixingGainLimit).cwiseMin(kMixingGainLimit);
    }
  }
  return m;
}

}  // namespace pism
