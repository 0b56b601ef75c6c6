#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "eslees/assembly.hpp"
#include "eslees/spectrum.hpp"

namespace eslees {

// Lowest `count` eigenpairs of the pencil (B + K_A + shift*M, M), ascending,
// M-orthonormal, widened to cluster boundaries. Reference solver.
SpectrumResult solve_dense(const OperatorMatrices& mats, int count,
                           const SolveSettings& settings);

// Independent variational route: minimizes the Rayleigh quotient F over the
// M-unit sphere, M-orthogonal to the deflation vectors, by projected inverse
// iteration on the SPD-shifted pencil. Returns (mu, u) with u^T M u = 1.
// Throws NonConvergenceError (carrying the best iterate) past max_iters.
std::pair<double, Eigen::VectorXd> minimize_rayleigh(
    const OperatorMatrices& mats, const std::vector<Eigen::VectorXd>& deflation,
    const SolveSettings& settings);

// Max over cross-cluster pairs of |u_i^T M u_j| (0 for a single cluster).
double orthogonality_check(const SpectrumResult& result, const OperatorMatrices& mats);

}  // namespace eslees
