#include "eslees/assembly.hpp"

#include <cmath>

#include "eslees/errors.hpp"

namespace eslees {

namespace {

// Quadrature sum of (d phi_i)^T W(q) (d phi_j) for a per-point matrix field W.
Eigen::MatrixXd gradient_form(const ManifoldDiscretization& disc,
                              const std::vector<Eigen::MatrixXd>& W) {
    const int n = disc.n_dof;
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    if (disc.kind == ManifoldKind::TriangleMesh) {
        for (std::size_t t = 0; t < disc.mesh_faces.size(); ++t) {
            const auto& f = disc.mesh_faces[t];
            const auto& G = disc.mesh_gradients[t];
            const Eigen::Matrix3d local = disc.weights[t] * G.transpose() * W[t] * G;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) out(f[a], f[b]) += local(a, b);
        }
    } else {
        for (int a = 0; a < disc.dim; ++a) {
            for (int b = 0; b < disc.dim; ++b) {
                Eigen::VectorXd wab(disc.n_points());
                for (int q = 0; q < disc.n_points(); ++q) wab[q] = disc.weights[q] * W[q](a, b);
                out.noalias() += disc.basis_gradients[a].transpose() * wab.asDiagonal() *
                                 disc.basis_gradients[b];
            }
        }
    }
    return 0.5 * (out + out.transpose()).eval();
}

// B = K M^{-1} K realized as S^T S so it is symmetric positive semi-definite
// to roundoff; S = L^{-1} K with M = L L^T.
Eigen::MatrixXd biharmonic_from(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M,
                                bool mass_is_diagonal) {
    Eigen::MatrixXd S;
    if (mass_is_diagonal) {
        Eigen::VectorXd d = M.diagonal();
        if ((d.array() <= 0.0).any())
            throw MetricError("mass matrix has a non-positive diagonal entry");
        S = d.array().rsqrt().matrix().asDiagonal() * K;
    } else {
        Eigen::LLT<Eigen::MatrixXd> llt(M);
        if (llt.info() != Eigen::Success)
            throw MetricError("mass matrix is not positive definite");
        S = llt.matrixL().solve(K);
    }
    Eigen::MatrixXd B = S.transpose() * S;
    return 0.5 * (B + B.transpose()).eval();
}

}  // namespace

Eigen::MatrixXd OperatorMatrices::pencil() const {
    Eigen::MatrixXd P = form();
    P += shift * M;
    return P;
}

Eigen::MatrixXd OperatorMatrices::form() const {
    Eigen::MatrixXd P = B + K_A;
    if (zeroth.size() > 0) P += zeroth;
    return P;
}

OperatorMatrices assemble(const ManifoldDiscretization& disc, const TensorField& A,
                          double shift) {
    if (static_cast<int>(A.values_at.size()) != disc.n_points())
        throw DomainMismatchError("assemble: tensor field does not match the quadrature point set");

    OperatorMatrices mats;
    mats.M = mass_matrix(disc);
    mats.K = stiffness_matrix(disc);
    mats.B = biharmonic_from(mats.K, mats.M, disc.lumped_mass);
    mats.K_A = gradient_form(disc, A.values_at);
    mats.shift = shift;
    mats.mass_is_diagonal = disc.lumped_mass;
    return mats;
}

OperatorMatrices assemble_second_order(const ManifoldDiscretization& disc,
                                       const ScalarField& h, double shift) {
    if (h.values_at.size() != disc.n_points())
        throw DomainMismatchError("assemble_second_order: potential does not match the point set");

    OperatorMatrices mats;
    mats.M = mass_matrix(disc);
    mats.K = stiffness_matrix(disc);
    mats.B = Eigen::MatrixXd::Zero(disc.n_dof, disc.n_dof);
    mats.K_A = mats.K;  // A = g^{-1}
    mats.shift = shift;
    mats.mass_is_diagonal = disc.lumped_mass;

    const int n = disc.n_dof;
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n, n);
    if (disc.kind == ManifoldKind::TriangleMesh) {
        // Lumped, like the mass: keeps the pencil an irreducible Z-matrix so
        // the discrete ground state stays signed.
        for (std::size_t t = 0; t < disc.mesh_faces.size(); ++t)
            for (int d = 0; d < 3; ++d)
                V(disc.mesh_faces[t][d], disc.mesh_faces[t][d]) +=
                    disc.weights[t] / 3.0 * h.values_at[t];
    } else {
        Eigen::VectorXd wh = disc.weights.cwiseProduct(h.values_at);
        V = disc.basis_values.transpose() * wh.asDiagonal() * disc.basis_values;
        V = 0.5 * (V + V.transpose()).eval();
    }
    mats.zeroth = std::move(V);
    return mats;
}

double quadratic_form_G(const OperatorMatrices& mats, const Eigen::VectorXd& u) {
    if (u.size() != mats.size()) throw DimensionError("quadratic_form_G: vector length mismatch");
    double g = u.dot(mats.B * u) + u.dot(mats.K_A * u);
    if (mats.zeroth.size() > 0) g += u.dot(mats.zeroth * u);
    return g;
}

double rayleigh_F(const OperatorMatrices& mats, const Eigen::VectorXd& u) {
    if (u.size() != mats.size()) throw DimensionError("rayleigh_F: vector length mismatch");
    const double m = u.dot(mats.M * u);
    if (!(m > 0.0)) throw DegenerateInputError("rayleigh_F: vector has zero mass norm");
    return quadratic_form_G(mats, u) / m + mats.shift;
}

double holder_gap(const OperatorMatrices& mats, const Eigen::VectorXd& u) {
    if (u.size() != mats.size()) throw DimensionError("holder_gap: vector length mismatch");
    const double bu = std::max(0.0, u.dot(mats.B * u));
    const double mu = std::max(0.0, u.dot(mats.M * u));
    const double ku = u.dot(mats.K * u);
    return std::sqrt(bu) * std::sqrt(mu) - ku;
}

}  // namespace eslees
