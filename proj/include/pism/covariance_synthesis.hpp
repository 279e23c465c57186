#pragma once

#include <Eigen/Dense>

namespace pism {

/// Per-entry magnitude limit on the mixing matrix.
inline constexpr double kMixingGainLimit = 4.0;

/// Relative eigenvalue floor applied to Cx before inversion.
inline constexpr double kCxRegularization = 1e-5;

/// Factor of a PSD matrix Cy of rank <= 2 such that Ky * Ky^T = Cy,
/// Ky of size S x 2 (eigendecomposition, two largest eigenpairs).
Eigen::MatrixXd factor_psd_rank2(const Eigen::MatrixXd& cy);

/// Least-change mixing matrix M (S x 2) with M Cx M^T = Ky Ky^T, where
/// Cx = diag(cx_diag). The orthogonal degree of freedom is aligned with
/// the prototype Q via the singular decomposition of Kx^T Q^T Ky:
/// M = Ky V U^T Kx^{-1}. Cx is floored at kCxRegularization times its
/// largest entry before inversion; entries of M are limited to
/// kMixingGainLimit with an energy rescale afterwards.
Eigen::MatrixXd mixing_matrix(const Eigen::Vector2d& cx_diag, const Eigen::MatrixXd& ky,
                              const Eigen::MatrixXd& q);

}  // namespace pism
