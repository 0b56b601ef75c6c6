#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "eslees/assembly.hpp"
#include "eslees/eigensolve.hpp"

namespace eslees {

enum class SignPattern { Positive, Negative, SignChanging, Indeterminate };
enum class EsleesVerdict { ESLEES, NotEsleesMultiplicity, NotEsleesSignChange, Indeterminate };

const char* to_string(SignPattern s);
const char* to_string(EsleesVerdict v);

// The pointwise hypothesis max_x lambda_m(x) <= -lambda2 evaluated on the
// sample points.
struct HypothesisCheck {
    double lambda2 = 0.0;
    double max_ratio = 0.0;
    bool satisfied = false;
};

// ESLEES = simple lowest eigenvalue with a signed eigenfunction. The verdict
// is certified by an explicit eigenvector from the lowest cluster.
struct EsleesReport {
    double lowest_eigenvalue = 0.0;
    int lowest_cluster_dim = 0;
    SignPattern sign_pattern = SignPattern::Indeterminate;
    EsleesVerdict verdict = EsleesVerdict::Indeterminate;
    HypothesisCheck hypothesis;
    Eigen::VectorXd certificate;  // unit M-norm coefficients, canonical sign
    double mean_value = 0.0;      // integral of the certificate / volume

    // Reporting extras: the computed low spectrum (cluster-aligned window),
    // its cluster partition, and certificate sample extremes.
    Eigen::VectorXd eigenvalues;
    std::vector<std::vector<int>> clusters;
    double certificate_min = 0.0;
    double certificate_max = 0.0;
};

// Classifies a sample vector as signed, sign-changing, or indeterminate
// relative to sign_tol * max-norm.
SignPattern sign_pattern(const Eigen::VectorXd& u, double sign_tol);

// Assembles u -> Lap^2 u - div(A du) + shift*u, solves the pencil, decides
// ESLEES status, and evaluates the pointwise hypothesis.
EsleesReport classify_operator(const ManifoldDiscretization& disc, const TensorField& A,
                               double shift, const SolveSettings& settings,
                               double sign_tol);

// Same pencil framework for the second-order comparison operator
// -div grad + h + shift (expected ESLEES for smooth h).
EsleesReport classify_second_order(const ManifoldDiscretization& disc, const ScalarField& h,
                                   double shift, const SolveSettings& settings,
                                   double sign_tol);

struct TheoremCheck {
    bool hypothesis_ok = false;
    bool conclusion_ok = false;
    EsleesReport report;
};

// For negative semi-definite T: builds A = T - lambda2 * g^{-1}, asserts the
// pointwise hypothesis, then checks the dichotomy — lowest eigenvalue <= 0
// (within 1e-8) with a sign-changing certificate, mean-zero whenever the
// lowest eigenvalue is strictly negative. Throws HypothesisError if the
// hypothesis fails numerically.
TheoremCheck verify_theorem(const ManifoldDiscretization& disc, const TensorField& T,
                            const SolveSettings& settings, double sign_tol);

// True iff for every lambda in the list the classification category is
// unchanged, eigenvalues shift by exactly lambda (1e-9 relative) and
// certificates agree up to sign.
bool verify_shift_invariance(const ManifoldDiscretization& disc, const TensorField& A,
                             const std::vector<double>& lambdas,
                             const SolveSettings& settings);

// Evaluates holder_gap on seeded random vectors (the constant vector is trial
// zero) and returns the worst gap normalized by max(1, u^T B u, u^T M u).
double verify_holder(const ManifoldDiscretization& disc, int trials, std::uint64_t seed);

}  // namespace eslees
