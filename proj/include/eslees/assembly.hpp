#pragma once

#include <Eigen/Dense>

#include "eslees/manifold.hpp"
#include "eslees/tensorfield.hpp"

namespace eslees {

// Discrete quadratic forms of the fourth-order operator
//   u -> Lap^2 u - div(A du) + shift * u
// in the Galerkin basis: mass M, stiffness K, biharmonic B = K M^{-1} K,
// anisotropy form K_A and the scalar shift. The optional zeroth-order matrix
// carries the potential term of the second-order comparison operator
// -div grad + h (pencil K + M_h); it is empty for fourth-order operators.
struct OperatorMatrices {
    Eigen::MatrixXd M;
    Eigen::MatrixXd K;
    Eigen::MatrixXd B;
    Eigen::MatrixXd K_A;
    Eigen::MatrixXd zeroth;  // 0x0 when absent
    double shift = 0.0;
    bool mass_is_diagonal = false;

    int size() const { return static_cast<int>(M.rows()); }

    // B + K_A (+ zeroth) + shift * M.
    Eigen::MatrixXd pencil() const;

    // Pencil without the shift term (the quadratic form under G).
    Eigen::MatrixXd form() const;
};

OperatorMatrices assemble(const ManifoldDiscretization& disc, const TensorField& A,
                          double shift);

// Second-order comparison operator -div grad + h in the same pencil
// framework: B = 0, K_A = K (tensor g^{-1}), zeroth = mass form of h.
OperatorMatrices assemble_second_order(const ManifoldDiscretization& disc,
                                       const ScalarField& h, double shift);

// G(u) = u^T (B + K_A) u — the shift is deliberately excluded.
double quadratic_form_G(const OperatorMatrices& mats, const Eigen::VectorXd& u);

// F(u) = G(u) / u^T M u + shift.
double rayleigh_F(const OperatorMatrices& mats, const Eigen::VectorXd& u);

// sqrt(u^T B u) * sqrt(u^T M u) - u^T K u; nonnegative up to roundoff since
// B = K M^{-1} K makes it a Cauchy-Schwarz slack in the M inner product.
double holder_gap(const OperatorMatrices& mats, const Eigen::VectorXd& u);

}  // namespace eslees
