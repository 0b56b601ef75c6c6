#include "eslees/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

#include "eslees/detail/pencil.hpp"
#include "eslees/errors.hpp"

namespace eslees {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes and weights on [-1, 1] via Newton iteration.
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& w) {
    nodes.resize(n);
    w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre P_n(x) and derivative by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double wi = 2.0 / ((1.0 - x * x) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
}

// Fully normalized associated Legendre values Pbar(l, m) at x = cos(theta)
// and their theta-derivatives, for 0 <= m <= l <= lmax. Normalization is such
// that the complex harmonics Pbar(l,m) e^{i m phi} have unit L^2 norm on S^2.
struct LegendreTable {
    int lmax;
    Eigen::MatrixXd value;   // (lmax+1) x (lmax+1), lower triangle
    Eigen::MatrixXd dtheta;

    LegendreTable(int lmax, double x, double sin_theta) : lmax(lmax) {
        value.setZero(lmax + 1, lmax + 1);
        dtheta.setZero(lmax + 1, lmax + 1);
        value(0, 0) = std::sqrt(1.0 / (4.0 * kPi));
        for (int m = 1; m <= lmax; ++m)
            value(m, m) = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * sin_theta * value(m - 1, m - 1);
        for (int m = 0; m < lmax; ++m)
            value(m + 1, m) = std::sqrt(2.0 * m + 3.0) * x * value(m, m);
        for (int m = 0; m <= lmax; ++m) {
            for (int l = m + 2; l <= lmax; ++l) {
                const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
                const double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                                           (4.0 * double(l - 1) * (l - 1) - 1.0));
                value(l, m) = a * (x * value(l - 1, m) - b * value(l - 2, m));
            }
        }
        // dPbar/dtheta = (l x Pbar(l,m) - d(l,m) Pbar(l-1,m)) / sin(theta),
        // valid away from the poles (quadrature nodes are interior).
        for (int m = 0; m <= lmax; ++m) {
            for (int l = m; l <= lmax; ++l) {
                const double low = (l - 1 >= m) ? value(l - 1, m) : 0.0;
                const double d =
                    std::sqrt((2.0 * l + 1.0) * (double(l) * l - double(m) * m) / (2.0 * l - 1.0));
                dtheta(l, m) = (l * x * value(l, m) - d * low) / sin_theta;
            }
        }
    }
};

Eigen::MatrixXd identity_metric(int dim) { return Eigen::MatrixXd::Identity(dim, dim); }

}  // namespace

const char* to_string(ManifoldKind kind) {
    switch (kind) {
        case ManifoldKind::Circle: return "circle";
        case ManifoldKind::FlatTorus: return "flat_torus";
        case ManifoldKind::Sphere: return "sphere";
        case ManifoldKind::TriangleMesh: return "triangle_mesh";
    }
    return "unknown";
}

Eigen::VectorXd ManifoldDiscretization::constant_vector() const {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n_dof);
    if (kind == ManifoldKind::TriangleMesh) {
        c.setOnes();
    } else {
        // Basis function 0 is 1/sqrt(volume) for every spectral backend.
        c[0] = std::sqrt(volume());
    }
    return c;
}

Eigen::VectorXd ManifoldDiscretization::function_samples(const Eigen::VectorXd& coeffs) const {
    if (coeffs.size() != n_dof)
        throw DimensionError("coefficient vector does not match n_dof");
    if (kind == ManifoldKind::TriangleMesh) return coeffs;  // nodal values
    return basis_values * coeffs;
}

ManifoldDiscretization build_circle(int num_modes, double radius) {
    if (num_modes < 2)
        throw ConfigurationError(
            "circle needs num_modes >= 2 (second eigenvalue modes plus a buffer mode)");
    if (radius <= 0.0) throw ConfigurationError("circle radius must be positive");

    ManifoldDiscretization disc;
    disc.kind = ManifoldKind::Circle;
    disc.dim = 1;
    disc.n_dof = 2 * num_modes + 1;
    {
        std::ostringstream os;
        os << "circle(modes=" << num_modes << ",r=" << radius << ")";
        disc.description = os.str();
    }

    const int nq = 4 * num_modes;
    disc.weights = Eigen::VectorXd::Constant(nq, 2.0 * kPi * radius / nq);
    disc.positions.resize(nq);
    disc.params.resize(nq);
    disc.inverse_metric.assign(nq, identity_metric(1));
    disc.basis_values.resize(nq, disc.n_dof);
    disc.basis_gradients[0].resize(nq, disc.n_dof);

    const double inv_sqrt_vol = 1.0 / std::sqrt(2.0 * kPi * radius);
    const double inv_sqrt_half = 1.0 / std::sqrt(kPi * radius);
    for (int q = 0; q < nq; ++q) {
        const double theta = 2.0 * kPi * q / nq;
        disc.params[q] = Eigen::Vector2d(theta, 0.0);
        disc.positions[q] = Eigen::Vector3d(radius * std::cos(theta), radius * std::sin(theta), 0.0);
        disc.basis_values(q, 0) = inv_sqrt_vol;
        disc.basis_gradients[0](q, 0) = 0.0;
        for (int k = 1; k <= num_modes; ++k) {
            const double c = std::cos(k * theta), s = std::sin(k * theta);
            disc.basis_values(q, 2 * k - 1) = c * inv_sqrt_half;
            disc.basis_values(q, 2 * k) = s * inv_sqrt_half;
            // d/ds = (1/r) d/dtheta
            disc.basis_gradients[0](q, 2 * k - 1) = -k * s * inv_sqrt_half / radius;
            disc.basis_gradients[0](q, 2 * k) = k * c * inv_sqrt_half / radius;
        }
    }

    std::vector<SpectrumEntry> spectrum;
    spectrum.push_back({0.0, 1});
    for (int k = 1; k <= num_modes; ++k)
        spectrum.push_back({double(k) * k / (radius * radius), 2});
    disc.analytic_spectrum = std::move(spectrum);
    return disc;
}

ManifoldDiscretization build_flat_torus(int modes1, int modes2, double period1,
                                        double period2) {
    if (modes1 < 2 || modes2 < 2)
        throw ConfigurationError("flat torus needs modes1, modes2 >= 2");
    if (period1 <= 0.0 || period2 <= 0.0)
        throw ConfigurationError("flat torus periods must be positive");

    ManifoldDiscretization disc;
    disc.kind = ManifoldKind::FlatTorus;
    disc.dim = 2;
    disc.n_dof = (2 * modes1 + 1) * (2 * modes2 + 1);
    {
        std::ostringstream os;
        os << "flat_torus(modes=" << modes1 << "x" << modes2 << ",L=" << period1 << "x"
           << period2 << ")";
        disc.description = os.str();
    }

    const double area = period1 * period2;
    const double f1 = 2.0 * kPi / period1, f2 = 2.0 * kPi / period2;

    // Half-lattice selection: each selected (k1, k2) yields a cos and a sin
    // basis function, covering the +/-k pair. Sorted by frequency.
    struct Mode {
        double omega;
        int k1, k2;
    };
    std::vector<Mode> selected;
    for (int k1 = 0; k1 <= modes1; ++k1) {
        for (int k2 = -modes2; k2 <= modes2; ++k2) {
            if (k1 == 0 && k2 <= 0) continue;
            const double om = k1 * f1 * k1 * f1 + k2 * f2 * k2 * f2;
            selected.push_back({om, k1, k2});
        }
    }
    std::sort(selected.begin(), selected.end(), [](const Mode& a, const Mode& b) {
        return std::tie(a.omega, a.k1, a.k2) < std::tie(b.omega, b.k1, b.k2);
    });

    const int n1 = 4 * modes1, n2 = 4 * modes2;
    const int nq = n1 * n2;
    disc.weights = Eigen::VectorXd::Constant(nq, area / nq);
    disc.positions.resize(nq);
    disc.params.resize(nq);
    disc.inverse_metric.assign(nq, identity_metric(2));
    disc.basis_values.resize(nq, disc.n_dof);
    disc.basis_gradients[0].resize(nq, disc.n_dof);
    disc.basis_gradients[1].resize(nq, disc.n_dof);

    const double c0 = 1.0 / std::sqrt(area);
    const double c1 = std::sqrt(2.0 / area);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            const int q = i * n2 + j;
            const double x = period1 * i / n1, y = period2 * j / n2;
            disc.positions[q] = Eigen::Vector3d(x, y, 0.0);
            disc.params[q] = Eigen::Vector2d(f1 * x, f2 * y);
            disc.basis_values(q, 0) = c0;
            disc.basis_gradients[0](q, 0) = 0.0;
            disc.basis_gradients[1](q, 0) = 0.0;
            for (std::size_t s = 0; s < selected.size(); ++s) {
                const double kx = selected[s].k1 * f1, ky = selected[s].k2 * f2;
                const double phase = kx * x + ky * y;
                const double cv = std::cos(phase), sv = std::sin(phase);
                const int col_c = 1 + 2 * static_cast<int>(s);
                disc.basis_values(q, col_c) = c1 * cv;
                disc.basis_values(q, col_c + 1) = c1 * sv;
                disc.basis_gradients[0](q, col_c) = -c1 * sv * kx;
                disc.basis_gradients[1](q, col_c) = -c1 * sv * ky;
                disc.basis_gradients[0](q, col_c + 1) = c1 * cv * kx;
                disc.basis_gradients[1](q, col_c + 1) = c1 * cv * ky;
            }
        }
    }

    // Multiplicities count lattice points of equal frequency within the box.
    std::vector<double> omegas;
    for (int k1 = -modes1; k1 <= modes1; ++k1)
        for (int k2 = -modes2; k2 <= modes2; ++k2)
            omegas.push_back(k1 * f1 * k1 * f1 + k2 * f2 * k2 * f2);
    std::sort(omegas.begin(), omegas.end());
    std::vector<SpectrumEntry> spectrum;
    for (double om : omegas) {
        if (!spectrum.empty() &&
            std::abs(om - spectrum.back().eigenvalue) <= 1e-9 * std::max(1.0, om)) {
            spectrum.back().multiplicity += 1;
        } else {
            spectrum.push_back({om, 1});
        }
    }
    disc.analytic_spectrum = std::move(spectrum);
    return disc;
}

ManifoldDiscretization build_sphere(int max_degree, double radius) {
    if (max_degree < 2) throw ConfigurationError("sphere needs max_degree >= 2");
    if (radius <= 0.0) throw ConfigurationError("sphere radius must be positive");

    ManifoldDiscretization disc;
    disc.kind = ManifoldKind::Sphere;
    disc.dim = 2;
    disc.n_dof = (max_degree + 1) * (max_degree + 1);
    {
        std::ostringstream os;
        os << "sphere(degree=" << max_degree << ",r=" << radius << ")";
        disc.description = os.str();
    }

    const int n_th = 2 * (max_degree + 1);
    const int n_ph = 4 * (max_degree + 1);
    Eigen::VectorXd gl_x, gl_w;
    gauss_legendre(n_th, gl_x, gl_w);

    const int nq = n_th * n_ph;
    disc.weights.resize(nq);
    disc.positions.resize(nq);
    disc.params.resize(nq);
    disc.inverse_metric.assign(nq, identity_metric(2));
    disc.basis_values.resize(nq, disc.n_dof);
    disc.basis_gradients[0].resize(nq, disc.n_dof);
    disc.basis_gradients[1].resize(nq, disc.n_dof);

    const double r2 = radius * radius;
    const double sqrt2 = std::sqrt(2.0);
    for (int i = 0; i < n_th; ++i) {
        const double x = gl_x[i];
        const double sin_th = std::sqrt(1.0 - x * x);
        const double theta = std::acos(x);
        const LegendreTable tab(max_degree, x, sin_th);
        for (int j = 0; j < n_ph; ++j) {
            const int q = i * n_ph + j;
            const double phi = 2.0 * kPi * j / n_ph;
            disc.weights[q] = r2 * gl_w[i] * (2.0 * kPi / n_ph);
            disc.params[q] = Eigen::Vector2d(theta, phi);
            disc.positions[q] =
                radius * Eigen::Vector3d(sin_th * std::cos(phi), sin_th * std::sin(phi), x);
            int col = 0;
            for (int l = 0; l <= max_degree; ++l) {
                // m = 0
                disc.basis_values(q, col) = tab.value(l, 0) / radius;
                disc.basis_gradients[0](q, col) = tab.dtheta(l, 0) / r2;
                disc.basis_gradients[1](q, col) = 0.0;
                ++col;
                for (int m = 1; m <= l; ++m) {
                    const double pv = sqrt2 * tab.value(l, m);
                    const double pd = sqrt2 * tab.dtheta(l, m);
                    const double c = std::cos(m * phi), s = std::sin(m * phi);
                    disc.basis_values(q, col) = pv * c / radius;
                    disc.basis_gradients[0](q, col) = pd * c / r2;
                    disc.basis_gradients[1](q, col) = -m * pv * s / (r2 * sin_th);
                    ++col;
                    disc.basis_values(q, col) = pv * s / radius;
                    disc.basis_gradients[0](q, col) = pd * s / r2;
                    disc.basis_gradients[1](q, col) = m * pv * c / (r2 * sin_th);
                    ++col;
                }
            }
        }
    }

    std::vector<SpectrumEntry> spectrum;
    for (int l = 0; l <= max_degree; ++l)
        spectrum.push_back({l * (l + 1.0) / r2, 2 * l + 1});
    disc.analytic_spectrum = std::move(spectrum);
    return disc;
}

namespace {

// Pulls whitespace-delimited tokens, treating '#' as a to-end-of-line comment.
class OffTokenizer {
public:
    explicit OffTokenizer(std::istream& in) : in_(in) {}

    bool next(std::string& tok) {
        while (true) {
            if (!(in_ >> tok)) return false;
            if (tok[0] == '#') {
                std::string rest;
                std::getline(in_, rest);
                continue;
            }
            // A token may have a trailing comment glued on (rare but legal).
            const auto pos = tok.find('#');
            if (pos != std::string::npos) {
                tok.erase(pos);
                std::string rest;
                std::getline(in_, rest);
                if (tok.empty()) continue;
            }
            return true;
        }
    }

    long long next_int(const char* what) {
        std::string tok;
        if (!next(tok)) throw FormatError(std::string("OFF: unexpected end of input reading ") + what);
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw FormatError(std::string("OFF: expected integer for ") + what + ", got '" + tok + "'");
        }
    }

    double next_double(const char* what) {
        std::string tok;
        if (!next(tok)) throw FormatError(std::string("OFF: unexpected end of input reading ") + what);
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw FormatError(std::string("OFF: expected number for ") + what + ", got '" + tok + "'");
        }
    }

private:
    std::istream& in_;
};

}  // namespace

ManifoldDiscretization load_mesh(std::istream& source) {
    OffTokenizer tok(source);
    std::string header;
    if (!tok.next(header)) throw FormatError("OFF: empty input");
    if (header != "OFF") throw FormatError("OFF: missing 'OFF' header, got '" + header + "'");

    const long long nv = tok.next_int("vertex count");
    const long long nf = tok.next_int("face count");
    (void)tok.next_int("edge count");
    if (nv < 3 || nf < 1) throw FormatError("OFF: implausible vertex/face counts");

    Eigen::MatrixXd vertices(nv, 3);
    for (long long v = 0; v < nv; ++v)
        for (int d = 0; d < 3; ++d) vertices(v, d) = tok.next_double("vertex coordinate");

    std::vector<std::array<int, 3>> faces;
    faces.reserve(nf);
    for (long long f = 0; f < nf; ++f) {
        const long long arity = tok.next_int("face vertex count");
        if (arity != 3) throw FormatError("OFF: only triangle faces are supported");
        std::array<int, 3> face{};
        for (int d = 0; d < 3; ++d) {
            const long long idx = tok.next_int("face vertex index");
            if (idx < 0 || idx >= nv) throw FormatError("OFF: face vertex index out of range");
            face[d] = static_cast<int>(idx);
        }
        if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2])
            throw FormatError("OFF: face repeats a vertex");
        faces.push_back(face);
    }

    // Closed surface: every edge shared by exactly two triangles.
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& f : faces) {
        for (int e = 0; e < 3; ++e) {
            const int a = f[e], b = f[(e + 1) % 3];
            edge_count[{std::min(a, b), std::max(a, b)}] += 1;
        }
    }
    for (const auto& [edge, count] : edge_count) {
        if (count == 1)
            throw NotClosedError("mesh has a boundary edge (" + std::to_string(edge.first) + "," +
                                 std::to_string(edge.second) + ")");
        if (count > 2)
            throw NonManifoldError("edge (" + std::to_string(edge.first) + "," +
                                   std::to_string(edge.second) + ") is shared by " +
                                   std::to_string(count) + " triangles");
    }

    const int n_faces = static_cast<int>(faces.size());
    Eigen::VectorXd areas(n_faces);
    std::vector<Eigen::Matrix<double, 3, 2>> frames(n_faces);
    std::vector<Eigen::Matrix<double, 2, 3>> gradients(n_faces);
    std::vector<Eigen::Vector3d> barycenters(n_faces);

    for (int t = 0; t < n_faces; ++t) {
        const Eigen::Vector3d p0 = vertices.row(faces[t][0]);
        const Eigen::Vector3d p1 = vertices.row(faces[t][1]);
        const Eigen::Vector3d p2 = vertices.row(faces[t][2]);
        const Eigen::Vector3d e1 = p1 - p0, e2 = p2 - p0;
        const Eigen::Vector3d cr = e1.cross(e2);
        areas[t] = 0.5 * cr.norm();
        barycenters[t] = (p0 + p1 + p2) / 3.0;
    }
    const double mean_area = areas.mean();
    for (int t = 0; t < n_faces; ++t) {
        if (!(areas[t] > 1e-14 * mean_area))
            throw DegenerateElementError("triangle " + std::to_string(t) + " has area " +
                                         std::to_string(areas[t]));
    }

    for (int t = 0; t < n_faces; ++t) {
        const Eigen::Vector3d p0 = vertices.row(faces[t][0]);
        const Eigen::Vector3d p1 = vertices.row(faces[t][1]);
        const Eigen::Vector3d p2 = vertices.row(faces[t][2]);
        const Eigen::Vector3d e1 = p1 - p0, e2 = p2 - p0;
        // Orthonormal frame from the first edge; the induced metric is then
        // the 2x2 identity and tensors are evaluated by ambient projection.
        const Eigen::Vector3d u = e1.normalized();
        const Eigen::Vector3d n = e1.cross(e2).normalized();
        const Eigen::Vector3d v = n.cross(u);
        frames[t].col(0) = u;
        frames[t].col(1) = v;
        const Eigen::Vector2d a(0.0, 0.0);
        const Eigen::Vector2d b(e1.norm(), 0.0);
        const Eigen::Vector2d c(e2.dot(u), e2.dot(v));
        Eigen::Matrix2d D;
        D.row(0) = (b - a).transpose();
        D.row(1) = (c - a).transpose();
        const Eigen::Matrix2d Dinv = D.inverse();
        const Eigen::Vector2d gb = Dinv * Eigen::Vector2d(1.0, 0.0);
        const Eigen::Vector2d gc = Dinv * Eigen::Vector2d(0.0, 1.0);
        gradients[t].col(0) = -gb - gc;
        gradients[t].col(1) = gb;
        gradients[t].col(2) = gc;
    }

    ManifoldDiscretization disc;
    disc.kind = ManifoldKind::TriangleMesh;
    disc.dim = 2;
    disc.n_dof = static_cast<int>(nv);
    disc.description = "triangle_mesh(v=" + std::to_string(nv) + ",f=" + std::to_string(n_faces) + ")";
    disc.weights = areas;
    disc.positions = std::move(barycenters);
    disc.params.assign(n_faces, Eigen::Vector2d::Zero());
    disc.inverse_metric.assign(n_faces, identity_metric(2));
    disc.lumped_mass = true;
    disc.lumped_mass_diag = Eigen::VectorXd::Zero(nv);
    for (int t = 0; t < n_faces; ++t)
        for (int d = 0; d < 3; ++d) disc.lumped_mass_diag[faces[t][d]] += areas[t] / 3.0;
    disc.mesh_vertices = std::move(vertices);
    disc.mesh_faces = std::move(faces);
    disc.mesh_gradients = std::move(gradients);
    disc.mesh_frames = std::move(frames);
    return disc;
}

ManifoldDiscretization load_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open mesh file: " + path);
    return load_mesh(in);
}

Eigen::MatrixXd mass_matrix(const ManifoldDiscretization& disc) {
    if (disc.kind == ManifoldKind::TriangleMesh) {
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(disc.n_dof, disc.n_dof);
        M.diagonal() = disc.lumped_mass_diag;
        return M;
    }
    Eigen::MatrixXd M = disc.basis_values.transpose() * disc.weights.asDiagonal() *
                        disc.basis_values;
    return 0.5 * (M + M.transpose());
}

Eigen::MatrixXd stiffness_matrix(const ManifoldDiscretization& disc) {
    const int n = disc.n_dof;
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    if (disc.kind == ManifoldKind::TriangleMesh) {
        for (std::size_t t = 0; t < disc.mesh_faces.size(); ++t) {
            const auto& f = disc.mesh_faces[t];
            const auto& G = disc.mesh_gradients[t];
            const Eigen::Matrix3d local =
                disc.weights[t] * G.transpose() * disc.inverse_metric[t] * G;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) K(f[a], f[b]) += local(a, b);
        }
    } else {
        for (int a = 0; a < disc.dim; ++a) {
            for (int b = 0; b < disc.dim; ++b) {
                Eigen::VectorXd wab(disc.n_points());
                for (int q = 0; q < disc.n_points(); ++q)
                    wab[q] = disc.weights[q] * disc.inverse_metric[q](a, b);
                K.noalias() += disc.basis_gradients[a].transpose() * wab.asDiagonal() *
                               disc.basis_gradients[b];
            }
        }
    }
    return 0.5 * (K + K.transpose()).eval();
}

SpectrumResult laplace_eigenpairs(const ManifoldDiscretization& disc, int count,
                                  const SolveSettings& settings) {
    if (count < 1 || count > disc.n_dof)
        throw DimensionError("eigenpair count must lie in [1, n_dof]");
    return detail::solve_pencil_dense(stiffness_matrix(disc), mass_matrix(disc), count,
                                      settings, disc.lumped_mass);
}

double second_laplace_eigenvalue(const ManifoldDiscretization& disc,
                                 const SolveSettings& settings) {
    const SpectrumResult sr = laplace_eigenpairs(disc, std::min(2, disc.n_dof), settings);
    if (sr.clusters.size() < 2)
        throw NumericalFailureError("could not separate the second Laplace eigenvalue");
    if (std::abs(sr.eigenvalues[0]) > 1e-7 * std::max(1.0, std::abs(sr.eigenvalues[sr.count() - 1])))
        throw NumericalFailureError("lowest Laplace eigenvalue is not zero; manifold not closed?");
    if (sr.clusters.front().size() != 1)
        throw NumericalFailureError("zero eigenvalue is not simple; manifold appears disconnected");
    return sr.eigenvalues[sr.clusters[1].front()];
}

}  // namespace eslees
