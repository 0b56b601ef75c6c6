#pragma once

#include <Eigen/Dense>
#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eslees/spectrum.hpp"

namespace eslees {

enum class ManifoldKind { Circle, FlatTorus, Sphere, TriangleMesh };

const char* to_string(ManifoldKind kind);

struct SpectrumEntry {
    double eigenvalue;  // of -div grad
    int multiplicity;
};

// A closed Riemannian manifold reduced to n_dof Galerkin degrees of freedom.
//
// Quadrature point q carries a positive weight (volume measure), an ambient
// position, intrinsic parameters (angles; meshes use positions instead), and
// the inverse metric in the local gradient frame. All built-in backends use
// orthonormal local frames, so their inverse metric samples are identity
// matrices; the struct is deliberately open so tests can build synthetic
// discretizations with non-trivial metrics.
struct ManifoldDiscretization {
    ManifoldKind kind = ManifoldKind::Circle;
    int dim = 1;    // manifold dimension (1 or 2)
    int n_dof = 0;
    std::string description;

    Eigen::VectorXd weights;                     // n_points, strictly positive
    std::vector<Eigen::Vector3d> positions;      // ambient coordinates
    std::vector<Eigen::Vector2d> params;         // intrinsic angles (spectral kinds)
    std::vector<Eigen::MatrixXd> inverse_metric; // dim x dim SPD per point

    // Present only for spectral kinds (Circle, FlatTorus, Sphere).
    std::optional<std::vector<SpectrumEntry>> analytic_spectrum;

    // Spectral kinds: dense tables of basis values and the frame components of
    // basis gradients at the quadrature points. Empty for meshes.
    Eigen::MatrixXd basis_values;                    // n_points x n_dof
    std::array<Eigen::MatrixXd, 2> basis_gradients;  // per frame direction

    // Mesh backend (piecewise-linear elements, one quadrature point per
    // triangle, lumped diagonal mass).
    bool lumped_mass = false;
    Eigen::VectorXd lumped_mass_diag;                   // n_dof
    Eigen::MatrixXd mesh_vertices;                      // V x 3
    std::vector<std::array<int, 3>> mesh_faces;         // vertex ids per triangle
    std::vector<Eigen::Matrix<double, 2, 3>> mesh_gradients;  // local-frame corner gradients
    std::vector<Eigen::Matrix<double, 3, 2>> mesh_frames;     // ambient (u, v) frame per triangle

    int n_points() const { return static_cast<int>(weights.size()); }
    double volume() const { return weights.sum(); }

    // Coefficient vector representing the constant function 1.
    Eigen::VectorXd constant_vector() const;

    // Pointwise samples of the function with the given coefficients: values at
    // quadrature points for spectral kinds, vertex values for meshes.
    Eigen::VectorXd function_samples(const Eigen::VectorXd& coeffs) const;
};

// S^1 of the given radius with the real Fourier basis
// {1, cos k theta, sin k theta : 1 <= k <= num_modes}. Requires num_modes >= 2.
ManifoldDiscretization build_circle(int num_modes, double radius);

// Flat torus (R / period1 Z) x (R / period2 Z) with the product real Fourier
// basis truncated to |k_i| <= modes_i. Requires modes1, modes2 >= 2.
ManifoldDiscretization build_flat_torus(int modes1, int modes2, double period1,
                                        double period2);

// Round sphere of the given radius with the real spherical-harmonic basis up
// to degree max_degree. Requires max_degree >= 2.
ManifoldDiscretization build_sphere(int max_degree, double radius);

// Closed triangulated surface from an OFF stream: piecewise-linear elements,
// cotangent stiffness, lumped mass, one quadrature point per triangle.
ManifoldDiscretization load_mesh(std::istream& source);
ManifoldDiscretization load_mesh_file(const std::string& path);

// L^2 Gram matrix of the basis (diagonal for lumped-mass meshes).
Eigen::MatrixXd mass_matrix(const ManifoldDiscretization& disc);

// Dirichlet form: quadrature sum of g^{-1}(d phi_i, d phi_j).
Eigen::MatrixXd stiffness_matrix(const ManifoldDiscretization& disc);

// Lowest `count` eigenpairs of -div grad (pencil K u = lambda M u), ascending
// and M-orthonormal, widened so that no multiplicity cluster is split.
SpectrumResult laplace_eigenpairs(const ManifoldDiscretization& disc, int count,
                                  const SolveSettings& settings = {});

// Second lowest distinct eigenvalue of -div grad (the first nonzero one on a
// connected manifold).
double second_laplace_eigenvalue(const ManifoldDiscretization& disc,
                                 const SolveSettings& settings = {});

}  // namespace eslees
