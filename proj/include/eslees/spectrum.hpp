#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace eslees {

enum class SolveMethod { Dense, Minimizer };

struct SolveSettings {
    double gap_rel_tol = 1e-6;   // relative gap separating eigenvalue clusters
    double residual_tol = 1e-9;  // convergence target for iterative solves
    int max_iters = 5000;
    std::uint64_t seed = 1;      // start-vector / trial seed
};

// Low spectrum of a symmetric pencil, ascending, with M-orthonormal
// eigenvectors and a partition of the indices into multiplicity clusters.
struct SpectrumResult {
    Eigen::VectorXd eigenvalues;            // ascending
    Eigen::MatrixXd eigenvectors;           // n x k, column j pairs with eigenvalue j
    std::vector<std::vector<int>> clusters; // consecutive index groups
    SolveMethod method = SolveMethod::Dense;

    int count() const { return static_cast<int>(eigenvalues.size()); }
};

// Groups an ascending eigenvalue list into clusters: mu[i] and mu[i+1] share a
// cluster iff |mu[i+1] - mu[i]| <= gap_rel_tol * max(1, |mu[i]|).
std::vector<std::vector<int>> cluster_eigenvalues(const Eigen::VectorXd& mu,
                                                  double gap_rel_tol);

}  // namespace eslees
