#include "eslees/spectrum.hpp"

#include <cmath>
#include <cstdlib>

#include "eslees/detail/pencil.hpp"
#include "eslees/errors.hpp"

namespace eslees {

std::vector<std::vector<int>> cluster_eigenvalues(const Eigen::VectorXd& mu,
                                                  double gap_rel_tol) {
    std::vector<std::vector<int>> clusters;
    if (mu.size() == 0) return clusters;
    clusters.push_back({0});
    for (int i = 1; i < mu.size(); ++i) {
        const double gap = std::abs(mu[i] - mu[i - 1]);
        if (gap <= gap_rel_tol * std::max(1.0, std::abs(mu[i - 1]))) {
            clusters.back().push_back(i);
        } else {
            clusters.push_back({i});
        }
    }
    return clusters;
}

namespace detail {

std::pair<Eigen::VectorXd, Eigen::MatrixXd> dense_eig(const Eigen::MatrixXd& P,
                                                      const Eigen::MatrixXd& M,
                                                      bool mass_is_diagonal) {
    const int n = static_cast<int>(P.rows());
    if (P.cols() != n || M.rows() != n || M.cols() != n)
        throw DimensionError("pencil matrices must be square and of equal size");

    if (mass_is_diagonal) {
        Eigen::VectorXd d = M.diagonal();
        if ((d.array() <= 0.0).any())
            throw MetricError("mass matrix has a non-positive diagonal entry");
        Eigen::VectorXd s = d.array().rsqrt();
        Eigen::MatrixXd C = s.asDiagonal() * P * s.asDiagonal();
        C = 0.5 * (C + C.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
        if (es.info() != Eigen::Success)
            throw NumericalFailureError("dense symmetric eigensolver did not converge");
        return {es.eigenvalues(), s.asDiagonal() * es.eigenvectors()};
    }
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success)
        throw MetricError("mass matrix is not positive definite");
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(P, M);
    if (es.info() != Eigen::Success)
        throw NumericalFailureError("dense generalized eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

int cluster_aligned_count(const Eigen::VectorXd& all_values, int count, double gap_rel_tol) {
    const auto clusters = cluster_eigenvalues(all_values, gap_rel_tol);
    for (const auto& cluster : clusters) {
        const int last = cluster.back();
        if (last >= count - 1) return last + 1;
    }
    return static_cast<int>(all_values.size());
}

SpectrumResult solve_pencil_dense(const Eigen::MatrixXd& P, const Eigen::MatrixXd& M,
                                  int count, const SolveSettings& settings,
                                  bool mass_is_diagonal) {
    if (count < 1 || count > P.rows())
        throw DimensionError("eigenpair count must lie in [1, n]");
    auto [all_values, all_vectors] = dense_eig(P, M, mass_is_diagonal);
    const int k = cluster_aligned_count(all_values, count, settings.gap_rel_tol);

    SpectrumResult result;
    result.eigenvalues = all_values.head(k);
    result.eigenvectors = all_vectors.leftCols(k);
    result.clusters = cluster_eigenvalues(result.eigenvalues, settings.gap_rel_tol);
    result.method = SolveMethod::Dense;
    return result;
}

}  // namespace detail
}  // namespace eslees
