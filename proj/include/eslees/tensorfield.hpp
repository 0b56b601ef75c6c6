#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "eslees/manifold.hpp"

namespace eslees {

// A symmetric (2,0)-tensor field sampled at a discretization's quadrature
// points, expressed in the same local frame as the inverse metric.
struct TensorField {
    std::vector<Eigen::MatrixXd> values_at;  // dim x dim symmetric, per point
    std::string label;
};

// Scalar coefficient field sampled at the quadrature points (zeroth-order
// term of the second-order comparison operator).
struct ScalarField {
    Eigen::VectorXd values_at;
    std::string label;
};

// A(x) = c * g^{-1}(x).
TensorField scaled_inverse_metric(const ManifoldDiscretization& disc, double c);

// A(x) = T(x) - lambda2 * g^{-1}(x).
TensorField shifted_nsd(const ManifoldDiscretization& disc, const TensorField& T,
                        double lambda2);

// max over sample points of the largest eigenvalue of the pencil
// (A(x), g^{-1}(x)) — the discrete surrogate for max_x of
// max_w A(x)(w,w) / g^{-1}(x)(w,w).
double pointwise_max_ratio(const ManifoldDiscretization& disc, const TensorField& A);

// True iff the largest pencil eigenvalue of (T(x), g^{-1}(x)) is <= tol at
// every sample point.
bool is_negative_semidefinite(const ManifoldDiscretization& disc, const TensorField& T,
                              double tol);

// Deterministic negative semi-definite field T = -G^T(x) G(x) with
// low-frequency trigonometric entries (degree <= smoothness) drawn from seed.
TensorField random_nsd_field(const ManifoldDiscretization& disc, std::uint64_t seed,
                             int smoothness);

// Wraps externally supplied per-point matrices (validates symmetry, domain).
TensorField tabulated_field(const ManifoldDiscretization& disc,
                            std::vector<Eigen::MatrixXd> values, std::string label);

// Deterministic smooth scalar field, same trigonometric construction as the
// random tensor fields. Values lie in [-amplitude, amplitude].
ScalarField random_smooth_scalar(const ManifoldDiscretization& disc, std::uint64_t seed,
                                 int smoothness, double amplitude = 0.5);

}  // namespace eslees
