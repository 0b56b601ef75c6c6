#include "eslees/tensorfield.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "eslees/errors.hpp"

namespace eslees {

namespace {

void check_domain(const ManifoldDiscretization& disc, const std::vector<Eigen::MatrixXd>& values,
                  const char* what) {
    if (static_cast<int>(values.size()) != disc.n_points())
        throw DomainMismatchError(std::string(what) + ": field has " +
                                  std::to_string(values.size()) + " samples, discretization has " +
                                  std::to_string(disc.n_points()) + " points");
    for (const auto& m : values) {
        if (m.rows() != disc.dim || m.cols() != disc.dim)
            throw DomainMismatchError(std::string(what) + ": sample dimension mismatch");
    }
}

// Largest eigenvalue of the pencil (A, Ginv) with Ginv SPD: Cholesky-reduce
// to a 1x1 or 2x2 symmetric matrix and use the closed form.
double max_pencil_eigenvalue(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Ginv) {
    Eigen::LLT<Eigen::MatrixXd> llt(Ginv);
    if (llt.info() != Eigen::Success)
        throw MetricError("inverse metric sample is not positive definite");
    const Eigen::MatrixXd L = llt.matrixL();
    Eigen::MatrixXd C = L.triangularView<Eigen::Lower>().solve(A);
    C = L.triangularView<Eigen::Lower>().solve(C.transpose().eval());
    if (A.rows() == 1) return C(0, 0);
    const double a = C(0, 0), c = C(1, 1);
    const double b = 0.5 * (C(0, 1) + C(1, 0));
    const double mid = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), b);
    return mid + rad;
}

// Sum of seeded plane waves: sum_t a_t cos(k_t . u + psi_t). The wave vectors
// have integer entries bounded by `smoothness`; on periodic backends u holds
// angles, so every term is periodic and smooth.
struct TrigSeries {
    std::vector<Eigen::Vector3d> wave;
    std::vector<double> amplitude;
    std::vector<double> phase;

    template <typename Rng>
    TrigSeries(Rng& rng, int n_terms, int smoothness, int u_dim) {
        std::uniform_int_distribution<int> freq(-smoothness, smoothness);
        std::uniform_real_distribution<double> amp(-1.0, 1.0);
        std::uniform_real_distribution<double> ph(0.0, 2.0 * 3.14159265358979323846);
        double total = 0.0;
        for (int t = 0; t < n_terms; ++t) {
            Eigen::Vector3d k = Eigen::Vector3d::Zero();
            for (int d = 0; d < u_dim; ++d) k[d] = freq(rng);
            wave.push_back(k);
            amplitude.push_back(amp(rng));
            phase.push_back(ph(rng));
            total += std::abs(amplitude.back());
        }
        if (total > 0.0)
            for (double& a : amplitude) a /= total;
    }

    double operator()(const Eigen::Vector3d& u) const {
        double v = 0.0;
        for (std::size_t t = 0; t < wave.size(); ++t)
            v += amplitude[t] * std::cos(wave[t].dot(u) + phase[t]);
        return v;
    }
};

// Evaluation coordinates for the trigonometric generators: intrinsic angles
// on periodic backends, normalized ambient position on sphere and mesh.
Eigen::Vector3d trig_coordinates(const ManifoldDiscretization& disc, int q, double scale) {
    switch (disc.kind) {
        case ManifoldKind::Circle:
            return Eigen::Vector3d(disc.params[q][0], 0.0, 0.0);
        case ManifoldKind::FlatTorus:
            return Eigen::Vector3d(disc.params[q][0], disc.params[q][1], 0.0);
        case ManifoldKind::Sphere:
        case ManifoldKind::TriangleMesh:
            return disc.positions[q] / scale;
    }
    return Eigen::Vector3d::Zero();
}

double ambient_scale(const ManifoldDiscretization& disc) {
    double scale = 0.0;
    for (const auto& p : disc.positions) scale = std::max(scale, p.norm());
    return scale > 0.0 ? scale : 1.0;
}

// Ambient orthonormal tangent frame at quadrature point q (2-column matrix);
// only meaningful for the sphere and mesh backends.
Eigen::Matrix<double, 3, 2> tangent_frame(const ManifoldDiscretization& disc, int q) {
    if (disc.kind == ManifoldKind::TriangleMesh) return disc.mesh_frames[q];
    const double theta = disc.params[q][0], phi = disc.params[q][1];
    Eigen::Matrix<double, 3, 2> frame;
    frame.col(0) = Eigen::Vector3d(std::cos(theta) * std::cos(phi),
                                   std::cos(theta) * std::sin(phi), -std::sin(theta));
    frame.col(1) = Eigen::Vector3d(-std::sin(phi), std::cos(phi), 0.0);
    return frame;
}

}  // namespace

TensorField scaled_inverse_metric(const ManifoldDiscretization& disc, double c) {
    TensorField field;
    field.values_at.reserve(disc.n_points());
    for (int q = 0; q < disc.n_points(); ++q)
        field.values_at.push_back(c * disc.inverse_metric[q]);
    std::ostringstream os;
    os << "scaled_inverse_metric(c=" << c << ")";
    field.label = os.str();
    return field;
}

TensorField shifted_nsd(const ManifoldDiscretization& disc, const TensorField& T,
                        double lambda2) {
    if (!(lambda2 > 0.0)) throw ConfigurationError("shifted_nsd requires lambda2 > 0");
    check_domain(disc, T.values_at, "shifted_nsd");
    TensorField field;
    field.values_at.reserve(disc.n_points());
    for (int q = 0; q < disc.n_points(); ++q)
        field.values_at.push_back(T.values_at[q] - lambda2 * disc.inverse_metric[q]);
    std::ostringstream os;
    os << T.label << " - " << lambda2 << "*g^-1";
    field.label = os.str();
    return field;
}

double pointwise_max_ratio(const ManifoldDiscretization& disc, const TensorField& A) {
    check_domain(disc, A.values_at, "pointwise_max_ratio");
    double worst = -std::numeric_limits<double>::infinity();
    for (int q = 0; q < disc.n_points(); ++q)
        worst = std::max(worst, max_pencil_eigenvalue(A.values_at[q], disc.inverse_metric[q]));
    return worst;
}

bool is_negative_semidefinite(const ManifoldDiscretization& disc, const TensorField& T,
                              double tol) {
    if (tol < 0.0) throw ConfigurationError("NSD tolerance must be nonnegative");
    check_domain(disc, T.values_at, "is_negative_semidefinite");
    for (int q = 0; q < disc.n_points(); ++q) {
        if (max_pencil_eigenvalue(T.values_at[q], disc.inverse_metric[q]) > tol) return false;
    }
    return true;
}

TensorField random_nsd_field(const ManifoldDiscretization& disc, std::uint64_t seed,
                             int smoothness) {
    if (smoothness < 1) throw ConfigurationError("smoothness must be a positive integer");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    const int n_terms = smoothness + 2;

    // G is generated entrywise; the field is T = -G^T G, negative
    // semi-definite by construction. On sphere and mesh backends G lives in
    // ambient coordinates and -G^T G is projected onto the tangent frame.
    const bool ambient = disc.kind == ManifoldKind::Sphere || disc.kind == ManifoldKind::TriangleMesh;
    const int gdim = ambient ? 3 : disc.dim;
    const int u_dim = (disc.kind == ManifoldKind::Circle) ? 1 : (disc.kind == ManifoldKind::FlatTorus ? 2 : 3);

    std::vector<TrigSeries> entries;
    entries.reserve(gdim * gdim);
    for (int i = 0; i < gdim * gdim; ++i) entries.emplace_back(rng, n_terms, smoothness, u_dim);

    const double scale = ambient ? ambient_scale(disc) : 1.0;
    TensorField field;
    field.values_at.reserve(disc.n_points());
    for (int q = 0; q < disc.n_points(); ++q) {
        const Eigen::Vector3d u = trig_coordinates(disc, q, scale);
        Eigen::MatrixXd G(gdim, gdim);
        for (int i = 0; i < gdim; ++i)
            for (int j = 0; j < gdim; ++j) G(i, j) = entries[i * gdim + j](u);
        Eigen::MatrixXd T = -(G.transpose() * G);
        if (ambient) {
            const auto frame = tangent_frame(disc, q);
            T = (frame.transpose() * T * frame).eval();
        }
        field.values_at.push_back(0.5 * (T + T.transpose()));
    }
    std::ostringstream os;
    os << "random_nsd(seed=" << seed << ",smoothness=" << smoothness << ")";
    field.label = os.str();
    return field;
}

TensorField tabulated_field(const ManifoldDiscretization& disc,
                            std::vector<Eigen::MatrixXd> values, std::string label) {
    check_domain(disc, values, "tabulated_field");
    for (const auto& m : values) {
        if (((m - m.transpose()).array().abs() > 1e-14).any())
            throw ConfigurationError("tabulated tensor sample is not symmetric");
    }
    TensorField field;
    field.values_at = std::move(values);
    field.label = std::move(label);
    return field;
}

ScalarField random_smooth_scalar(const ManifoldDiscretization& disc, std::uint64_t seed,
                                 int smoothness, double amplitude) {
    if (smoothness < 1) throw ConfigurationError("smoothness must be a positive integer");
    std::mt19937_64 rng(seed * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);
    const int u_dim = (disc.kind == ManifoldKind::Circle) ? 1 : (disc.kind == ManifoldKind::FlatTorus ? 2 : 3);
    const bool ambient = disc.kind == ManifoldKind::Sphere || disc.kind == ManifoldKind::TriangleMesh;
    const TrigSeries series(rng, smoothness + 2, smoothness, u_dim);
    const double scale = ambient ? ambient_scale(disc) : 1.0;

    ScalarField field;
    field.values_at.resize(disc.n_points());
    for (int q = 0; q < disc.n_points(); ++q)
        field.values_at[q] = amplitude * series(trig_coordinates(disc, q, scale));
    std::ostringstream os;
    os << "random_smooth(seed=" << seed << ",smoothness=" << smoothness << ",amp=" << amplitude
       << ")";
    field.label = os.str();
    return field;
}

}  // namespace eslees
