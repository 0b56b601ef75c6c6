#include "eslees/classify.hpp"

#include <cmath>
#include <random>

#include "eslees/detail/pencil.hpp"
#include "eslees/errors.hpp"

namespace eslees {

const char* to_string(SignPattern s) {
    switch (s) {
        case SignPattern::Positive: return "positive";
        case SignPattern::Negative: return "negative";
        case SignPattern::SignChanging: return "sign_changing";
        case SignPattern::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

const char* to_string(EsleesVerdict v) {
    switch (v) {
        case EsleesVerdict::ESLEES: return "ESLEES";
        case EsleesVerdict::NotEsleesMultiplicity: return "not_ESLEES_multiplicity";
        case EsleesVerdict::NotEsleesSignChange: return "not_ESLEES_sign_change";
        case EsleesVerdict::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

SignPattern sign_pattern(const Eigen::VectorXd& u, double sign_tol) {
    if (!(sign_tol > 0.0 && sign_tol < 1.0))
        throw ConfigurationError("sign_tol must lie in (0, 1)");
    if (u.size() == 0) throw DegenerateInputError("sign_pattern: empty vector");
    const double sup = u.cwiseAbs().maxCoeff();
    if (!(sup > 0.0)) throw DegenerateInputError("sign_pattern: zero vector");
    const double lo = u.minCoeff(), hi = u.maxCoeff();
    const double thresh = sign_tol * sup;
    const bool has_pos = hi > thresh;
    const bool has_neg = lo < -thresh;
    if (has_pos && !has_neg && lo >= -thresh) return SignPattern::Positive;
    if (has_neg && !has_pos && hi <= thresh) return SignPattern::Negative;
    if (has_pos && has_neg) return SignPattern::SignChanging;
    return SignPattern::Indeterminate;
}

namespace {

// Flips the vector so its largest-magnitude entry is positive; ties break to
// the lowest index. Keeps certificates comparable across runs and shifts.
void canonicalize_sign(Eigen::VectorXd& v) {
    const double sup = v.cwiseAbs().maxCoeff();
    if (!(sup > 0.0)) return;
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) >= sup * (1.0 - 1e-12)) {
            if (v[i] < 0.0) v = -v;
            return;
        }
    }
}

// Deterministic representative of the lowest cluster: the M-projection of a
// seeded probe vector onto the cluster span, orthogonalized against the
// constant direction whenever the cluster contains it. Projecting a fixed
// probe makes the representative independent of how the eigensolver happened
// to rotate a degenerate basis.
Eigen::VectorXd cluster_certificate(const ManifoldDiscretization& disc,
                                    const Eigen::MatrixXd& M, const Eigen::MatrixXd& U0,
                                    const SolveSettings& settings) {
    const int n = static_cast<int>(U0.rows());
    Eigen::VectorXd c_hat = disc.constant_vector();
    c_hat /= std::sqrt(c_hat.dot(M * c_hat));

    const Eigen::VectorXd const_in_cluster = U0.transpose() * (M * c_hat);
    const bool contains_const = const_in_cluster.norm() > 0.5;

    if (U0.cols() == 1 && !contains_const) return U0.col(0);

    std::mt19937_64 rng(settings.seed * 0x9e3779b97f4a7c15ULL + 0xda3e39cb94b95bdbULL);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Eigen::VectorXd probe(n);
        for (int i = 0; i < n; ++i) probe[i] = uni(rng);
        Eigen::VectorXd w = U0 * (U0.transpose() * (M * probe));
        if (contains_const && U0.cols() > 1) w -= (c_hat.dot(M * w)) * c_hat;
        const double norm = std::sqrt(std::max(0.0, w.dot(M * w)));
        if (norm > 1e-8) return w / norm;
    }
    throw NumericalFailureError("could not extract a certificate from the lowest cluster");
}

EsleesReport classify_core(const ManifoldDiscretization& disc, const OperatorMatrices& mats,
                           const HypothesisCheck& hypothesis, const SolveSettings& settings,
                           double sign_tol) {
    auto [all_values, all_vectors] =
        detail::dense_eig(mats.pencil(), mats.M, mats.mass_is_diagonal);
    const int n = static_cast<int>(all_values.size());

    const auto clusters = cluster_eigenvalues(all_values, settings.gap_rel_tol);
    const auto& lowest = clusters.front();

    // The cluster decision is ambiguous if it flips under a decade change of
    // the gap threshold, or if no gap separates the lowest cluster at all.
    const std::size_t dim_lo =
        cluster_eigenvalues(all_values, settings.gap_rel_tol / 10.0).front().size();
    const std::size_t dim_hi =
        cluster_eigenvalues(all_values, settings.gap_rel_tol * 10.0).front().size();
    const bool ambiguous =
        dim_lo != lowest.size() || dim_hi != lowest.size() || static_cast<int>(lowest.size()) == n;

    EsleesReport report;
    report.hypothesis = hypothesis;
    report.lowest_eigenvalue = all_values[0];
    report.lowest_cluster_dim = static_cast<int>(lowest.size());

    const int window = detail::cluster_aligned_count(
        all_values, std::min(n, std::max(8, report.lowest_cluster_dim + 1)),
        settings.gap_rel_tol);
    report.eigenvalues = all_values.head(window);
    report.clusters = cluster_eigenvalues(report.eigenvalues, settings.gap_rel_tol);

    const Eigen::MatrixXd U0 = all_vectors.leftCols(report.lowest_cluster_dim);
    Eigen::VectorXd cert = cluster_certificate(disc, mats.M, U0, settings);
    canonicalize_sign(cert);
    report.certificate = cert;

    const Eigen::VectorXd samples = disc.function_samples(cert);
    report.sign_pattern = sign_pattern(samples, sign_tol);
    report.certificate_min = samples.minCoeff();
    report.certificate_max = samples.maxCoeff();

    const Eigen::VectorXd one = disc.constant_vector();
    report.mean_value = one.dot(mats.M * cert) / disc.volume();

    if (ambiguous) {
        report.verdict = EsleesVerdict::Indeterminate;
    } else if (report.lowest_cluster_dim > 1) {
        report.verdict = EsleesVerdict::NotEsleesMultiplicity;
    } else if (report.sign_pattern == SignPattern::Positive ||
               report.sign_pattern == SignPattern::Negative) {
        report.verdict = EsleesVerdict::ESLEES;
    } else if (report.sign_pattern == SignPattern::SignChanging) {
        report.verdict = EsleesVerdict::NotEsleesSignChange;
    } else {
        report.verdict = EsleesVerdict::Indeterminate;
    }
    return report;
}

}  // namespace

EsleesReport classify_operator(const ManifoldDiscretization& disc, const TensorField& A,
                               double shift, const SolveSettings& settings,
                               double sign_tol) {
    HypothesisCheck hyp;
    hyp.lambda2 = second_laplace_eigenvalue(disc, settings);
    hyp.max_ratio = pointwise_max_ratio(disc, A);
    hyp.satisfied = hyp.max_ratio <= -hyp.lambda2 + 1e-10;
    return classify_core(disc, assemble(disc, A, shift), hyp, settings, sign_tol);
}

EsleesReport classify_second_order(const ManifoldDiscretization& disc, const ScalarField& h,
                                   double shift, const SolveSettings& settings,
                                   double sign_tol) {
    HypothesisCheck hyp;
    hyp.lambda2 = second_laplace_eigenvalue(disc, settings);
    hyp.max_ratio = 1.0;  // the tensor slot holds g^{-1} itself
    hyp.satisfied = false;
    return classify_core(disc, assemble_second_order(disc, h, shift), hyp, settings, sign_tol);
}

TheoremCheck verify_theorem(const ManifoldDiscretization& disc, const TensorField& T,
                            const SolveSettings& settings, double sign_tol) {
    if (!is_negative_semidefinite(disc, T, 1e-10))
        throw HypothesisError("T is not negative semi-definite (tolerance 1e-10)");

    const double lambda2 = second_laplace_eigenvalue(disc, settings);
    const TensorField A = shifted_nsd(disc, T, lambda2);
    const double max_ratio = pointwise_max_ratio(disc, A);
    if (!(max_ratio <= -lambda2 + 1e-10))
        throw HypothesisError("pointwise ratio bound failed: max ratio " +
                              std::to_string(max_ratio) + " > -lambda2 = " +
                              std::to_string(-lambda2));

    HypothesisCheck hyp{lambda2, max_ratio, true};
    TheoremCheck check;
    check.hypothesis_ok = true;
    check.report = classify_core(disc, assemble(disc, A, 0.0), hyp, settings, sign_tol);

    const double mu1 = check.report.lowest_eigenvalue;
    bool ok = mu1 <= 1e-8 && check.report.sign_pattern == SignPattern::SignChanging;
    if (mu1 < -1e-8) {
        // Strictly negative lowest eigenvalue: the certificate must have mean
        // zero (M-orthogonality to the constants, which sit at eigenvalue 0).
        const Eigen::VectorXd one = disc.constant_vector();
        const Eigen::MatrixXd M = mass_matrix(disc);
        const double inner = std::abs(one.dot(M * check.report.certificate));
        const double bound = 1e-8 * std::sqrt(one.dot(M * one)) *
                             std::sqrt(check.report.certificate.dot(M * check.report.certificate));
        ok = ok && inner <= bound;
    }
    check.conclusion_ok = ok;
    return check;
}

bool verify_shift_invariance(const ManifoldDiscretization& disc, const TensorField& A,
                             const std::vector<double>& lambdas,
                             const SolveSettings& settings) {
    const double sign_tol = 1e-6;
    const EsleesReport base = classify_operator(disc, A, 0.0, settings, sign_tol);
    if (base.verdict == EsleesVerdict::Indeterminate) return false;
    const bool base_eslees = base.verdict == EsleesVerdict::ESLEES;

    for (double lambda : lambdas) {
        const EsleesReport shifted = classify_operator(disc, A, lambda, settings, sign_tol);
        if (shifted.verdict == EsleesVerdict::Indeterminate) return false;
        if ((shifted.verdict == EsleesVerdict::ESLEES) != base_eslees) return false;

        const int k = static_cast<int>(std::min(base.eigenvalues.size(), shifted.eigenvalues.size()));
        for (int i = 0; i < k; ++i) {
            const double expected = base.eigenvalues[i] + lambda;
            if (std::abs(shifted.eigenvalues[i] - expected) >
                1e-9 * std::max(1.0, std::abs(expected)))
                return false;
        }
        const double agree = std::min((shifted.certificate - base.certificate).norm(),
                                      (shifted.certificate + base.certificate).norm());
        if (agree > 1e-8 * std::max(1.0, base.certificate.norm())) return false;
    }
    return true;
}

double verify_holder(const ManifoldDiscretization& disc, int trials, std::uint64_t seed) {
    if (trials < 1) throw ConfigurationError("verify_holder needs trials >= 1");
    const OperatorMatrices mats = assemble(disc, scaled_inverse_metric(disc, 0.0), 0.0);
    std::mt19937_64 rng(seed * 0xd1342543de82ef95ULL + 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    double worst = std::numeric_limits<double>::infinity();
    Eigen::VectorXd u = disc.constant_vector();  // trial 0 hits the equality case
    for (int t = 0; t < trials; ++t) {
        if (t > 0)
            for (int i = 0; i < u.size(); ++i) u[i] = uni(rng);
        const double gap = holder_gap(mats, u);
        const double scale = std::max({1.0, u.dot(mats.B * u), u.dot(mats.M * u)});
        worst = std::min(worst, gap / scale);
    }
    return worst;
}

}  // namespace eslees
