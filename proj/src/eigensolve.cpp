#include "eslees/eigensolve.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "eslees/detail/pencil.hpp"
#include "eslees/errors.hpp"

namespace eslees {

SpectrumResult solve_dense(const OperatorMatrices& mats, int count,
                           const SolveSettings& settings) {
    SpectrumResult result = detail::solve_pencil_dense(mats.pencil(), mats.M, count, settings,
                                                       mats.mass_is_diagonal);
    result.method = SolveMethod::Dense;
    return result;
}

std::pair<double, Eigen::VectorXd> minimize_rayleigh(
    const OperatorMatrices& mats, const std::vector<Eigen::VectorXd>& deflation,
    const SolveSettings& settings) {
    const int n = mats.size();
    if (static_cast<int>(deflation.size()) >= n)
        throw DegenerateInputError("deflation space leaves no feasible direction");

    // Work in v = L^T u coordinates, where M = L L^T; the M inner product
    // becomes the Euclidean one and the pencil becomes C = L^{-1} P L^{-T}.
    Eigen::MatrixXd C;
    Eigen::MatrixXd Lmat;
    const Eigen::MatrixXd P = mats.pencil();
    bool diagonal_mass = mats.mass_is_diagonal;
    Eigen::VectorXd dsqrt;
    if (diagonal_mass) {
        Eigen::VectorXd d = mats.M.diagonal();
        if ((d.array() <= 0.0).any()) throw MetricError("mass matrix not positive definite");
        dsqrt = d.array().sqrt();
        const Eigen::VectorXd dinv = d.array().rsqrt();
        C = dinv.asDiagonal() * P * dinv.asDiagonal();
    } else {
        Eigen::LLT<Eigen::MatrixXd> llt(mats.M);
        if (llt.info() != Eigen::Success) throw MetricError("mass matrix not positive definite");
        Lmat = llt.matrixL();
        C = Lmat.triangularView<Eigen::Lower>().solve(P);
        C = Lmat.triangularView<Eigen::Lower>().solve(C.transpose().eval());
    }
    C = 0.5 * (C + C.transpose()).eval();

    auto to_v = [&](const Eigen::VectorXd& u) -> Eigen::VectorXd {
        if (diagonal_mass) return dsqrt.cwiseProduct(u);
        return Lmat.transpose() * u;
    };
    auto to_u = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        if (diagonal_mass) return v.cwiseQuotient(dsqrt);
        return Lmat.transpose().triangularView<Eigen::Upper>().solve(v);
    };

    Eigen::MatrixXd defl(n, static_cast<int>(deflation.size()));
    for (std::size_t j = 0; j < deflation.size(); ++j) {
        if (deflation[j].size() != n)
            throw DimensionError("deflation vector length mismatch");
        defl.col(static_cast<int>(j)) = to_v(deflation[j]);
    }
    if (defl.cols() > 0) {
        const Eigen::MatrixXd gram = defl.transpose() * defl;
        const double err =
            (gram - Eigen::MatrixXd::Identity(defl.cols(), defl.cols())).cwiseAbs().maxCoeff();
        if (err > 1e-8)
            throw DegenerateInputError("deflation vectors are not M-orthonormal");
    }
    // Twice-is-enough Gram-Schmidt against the deflation space.
    auto project = [&](Eigen::VectorXd& v) {
        if (defl.cols() == 0) return;
        v -= defl * (defl.transpose() * v);
        v -= defl * (defl.transpose() * v);
    };

    // SPD shift from a Gershgorin lower bound of C.
    double lower = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double radius = C.row(i).cwiseAbs().sum() - std::abs(C(i, i));
        lower = std::min(lower, C(i, i) - radius);
    }
    const double spd_shift = std::max(0.0, -lower) + 1.0;
    Eigen::MatrixXd Cs = C;
    Cs.diagonal().array() += spd_shift;
    Eigen::LLT<Eigen::MatrixXd> solver(Cs);
    if (solver.info() != Eigen::Success)
        throw NumericalFailureError("shifted pencil lost positive definiteness");

    std::mt19937_64 rng(settings.seed * 0x9e3779b97f4a7c15ULL + 1);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Eigen::VectorXd v(n);
    double norm = 0.0;
    for (int attempt = 0; attempt < 16; ++attempt) {
        for (int i = 0; i < n; ++i) v[i] = uni(rng);
        project(v);
        norm = v.norm();
        if (norm > 1e-8) break;
    }
    if (norm <= 1e-8)
        throw DegenerateInputError("could not find a start vector outside the deflation space");
    v /= norm;

    const double c_scale = std::max(1.0, C.cwiseAbs().rowwise().sum().maxCoeff());
    double mu = 0.0, residual = std::numeric_limits<double>::infinity();
    double best_residual = residual;
    double best_mu = 0.0;
    Eigen::VectorXd best_v = v;
    for (int iter = 0; iter < settings.max_iters; ++iter) {
        v = solver.solve(v);
        project(v);
        const double vn = v.norm();
        if (!(vn > 0.0) || !std::isfinite(vn))
            throw NumericalFailureError("inverse iteration produced a non-finite iterate");
        v /= vn;

        Eigen::VectorXd cv = C * v;
        project(cv);  // residual of the deflated (projected) operator
        mu = v.dot(cv);
        residual = (cv - mu * v).norm();
        if (residual < best_residual) {
            best_residual = residual;
            best_mu = mu;
            best_v = v;
        }
        if (residual <= settings.residual_tol * c_scale)
            return {mu, to_u(v)};
    }
    std::ostringstream os;
    os << "rayleigh minimizer did not reach residual " << settings.residual_tol * c_scale
       << " within " << settings.max_iters << " iterations (best residual " << best_residual
       << ")";
    throw NonConvergenceError(os.str(), best_mu, to_u(best_v), best_residual,
                              settings.max_iters);
}

double orthogonality_check(const SpectrumResult& result, const OperatorMatrices& mats) {
    if (result.eigenvectors.rows() != mats.size())
        throw DimensionError("spectrum result does not match the operator size");
    if (result.clusters.size() < 2) return 0.0;
    const Eigen::MatrixXd gram =
        result.eigenvectors.transpose() * mats.M * result.eigenvectors;
    double worst = 0.0;
    for (std::size_t a = 0; a < result.clusters.size(); ++a) {
        for (std::size_t b = a + 1; b < result.clusters.size(); ++b) {
            for (int i : result.clusters[a])
                for (int j : result.clusters[b]) worst = std::max(worst, std::abs(gram(i, j)));
        }
    }
    return worst;
}

}  // namespace eslees
