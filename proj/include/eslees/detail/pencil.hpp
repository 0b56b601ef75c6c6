#pragma once

#include <Eigen/Dense>
#include <utility>

#include "eslees/spectrum.hpp"

namespace eslees::detail {

// Full spectrum of the symmetric pencil (P, M): ascending eigenvalues with
// M-orthonormal eigenvectors. With mass_is_diagonal the solve goes through
// the symmetric standard problem D^{-1/2} P D^{-1/2}, which is noticeably
// faster at mesh sizes.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> dense_eig(const Eigen::MatrixXd& P,
                                                      const Eigen::MatrixXd& M,
                                                      bool mass_is_diagonal);

// Lowest `count` eigenpairs, widened so the window ends on a cluster boundary.
SpectrumResult solve_pencil_dense(const Eigen::MatrixXd& P, const Eigen::MatrixXd& M,
                                  int count, const SolveSettings& settings,
                                  bool mass_is_diagonal = false);

// The cluster-aligned window size covering at least `count` eigenvalues.
int cluster_aligned_count(const Eigen::VectorXd& all_values, int count, double gap_rel_tol);

}  // namespace eslees::detail
