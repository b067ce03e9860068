#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <memory>
#include <vector>

#include "floatbeam/geometry.hpp"
#include "floatbeam/mesh.hpp"

namespace floatbeam {

// Assembled P1 Laplace operator on all mesh nodes, with the free-surface
// nodes singled out as the Dirichlet set and the complement pre-factorized.
// Immutable after construction; concurrent solves against the shared
// factorization are fine.
class LaplaceSystem {
public:
    LaplaceSystem(Eigen::SparseMatrix<double> stiffness, const Mesh& mesh,
                  double solver_tol);

    const Eigen::SparseMatrix<double>& stiffness() const { return stiffness_; }
    // Free-surface nodes (the Dirichlet set of the Kirchhoff problems),
    // sorted by x.
    const std::vector<int>& dirichlet_set() const { return surface_; }
    int num_nodes() const { return static_cast<int>(stiffness_.rows()); }
    int num_surface() const { return static_cast<int>(surface_.size()); }

    // Solves A_II x = rhs on the non-surface nodes, with iterative
    // refinement down to the configured relative residual.
    Eigen::VectorXd solve_interior(const Eigen::VectorXd& rhs_interior) const;

    // Scatters an interior vector and surface values into a full nodal field.
    Eigen::VectorXd compose(const Eigen::VectorXd& interior_values,
                            const Eigen::VectorXd& surface_values) const;
    Eigen::VectorXd restrict_interior(const Eigen::VectorXd& full) const;
    Eigen::VectorXd restrict_surface(const Eigen::VectorXd& full) const;

    // Harmonic extension of surface data: Dirichlet on the free surface,
    // natural (zero-flux) everywhere else.
    Eigen::VectorXd lift(const Eigen::VectorXd& surface_values) const;

    double solver_tol() const { return solver_tol_; }

private:
    Eigen::SparseMatrix<double> stiffness_;
    std::vector<int> surface_;
    std::vector<int> interior_;
    std::vector<int> role_;  // >=0: position in interior_, -1-k: position k in surface_
    Eigen::SparseMatrix<double> a_ii_;
    Eigen::SparseMatrix<double> a_is_;  // interior rows, surface cols
    std::shared_ptr<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>> ldlt_;
    double solver_tol_;
};

// Radiation potentials for unit surge, heave and pitch velocity: harmonic,
// zero Dirichlet trace on the free surface, prescribed normal velocity
// nu = [n1, n2, ((x,y)-r_G)^perp . n] on the wetted hull, zero flux on the
// seabed and walls. Normals point out of the fluid.
struct KirchhoffSet {
    Eigen::MatrixXd phi;           // num_nodes x 3 nodal fields
    Eigen::MatrixXd load;          // num_nodes x 3 weak Neumann data
    Eigen::MatrixXd surface_flux;  // num_surface x 3, weak d(phi_i)/dy on the surface
};

// Discrete Dirichlet-to-Neumann operator on the free-surface nodes together
// with the surface mass matrix. lambda_weak is the Steklov-Poincare Schur
// complement of the stiffness matrix, so the lift and the DtN share one
// bilinear form and the discrete Green identity holds to solver precision.
struct DtNOperator {
    Eigen::MatrixXd lambda_weak;
    Eigen::SparseMatrix<double> surface_mass;
};

// Assembles the P1 stiffness matrix (symmetric PSD, constants in the kernel)
// and factorizes the interior block. Throws AssemblyError on a degenerate
// triangle.
LaplaceSystem assemble_laplace(const Mesh& mesh, double solver_tol = 1e-12);

KirchhoffSet solve_kirchhoff(const LaplaceSystem& sys, const Mesh& mesh,
                             const FluidGeometry& geom);

DtNOperator dtn_schur(const LaplaceSystem& sys, const Mesh& mesh);

// Weak normal-derivative functional of a solved field on the free surface
// (outward normal = +y there): (A*field - load) restricted to surface nodes.
Eigen::VectorXd consistent_flux(const LaplaceSystem& sys,
                                const Eigen::VectorXd& field,
                                const Eigen::VectorXd& load);
Eigen::VectorXd consistent_flux(const LaplaceSystem& sys,
                                const Eigen::VectorXd& field);

}  // namespace floatbeam
