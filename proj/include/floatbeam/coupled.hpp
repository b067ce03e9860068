#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <vector>

#include "floatbeam/beam.hpp"
#include "floatbeam/hydro.hpp"
#include "floatbeam/laplace.hpp"

namespace floatbeam {

// Monolithic semi-discrete system M_g x'' + G_g x' + K_g x = B f(t) on the
// DOF layout x = [v (surface); q (3); w_int (2n)].
//
// The surface equation is scaled by rho_f/g so the assembled quadratic form
// (x' M_g x' + x K_g x)/2 is the physical energy. The hydrodynamic pressure
// enters through the single coupling matrix C on both off-diagonal blocks of
// G_g, making G_g skew-symmetric exactly and the semi-discrete energy balance
// an identity of the matrices.
struct CoupledSystem {
    int n_surface = 0;
    int n_beam_interior = 0;  // 2 * n_elements
    double rho_f = 0.0;
    double g = 0.0;

    Eigen::MatrixXd M_g;
    Eigen::MatrixXd G_g;
    Eigen::MatrixXd K_g;
    Eigen::MatrixXd B;  // total x 5 load map: (F_ext1..3, F_tip, M_tip)

    // Retained blocks for the term-by-term energy evaluation.
    Eigen::SparseMatrix<double> surface_mass;
    Eigen::MatrixXd lambda_weak;
    Eigen::Matrix3d M_T;
    Eigen::Matrix3d K;
    Eigen::MatrixXd M_b_bare;  // beam mass without the tip point-mass
    Eigen::MatrixXd K_b;
    Eigen::MatrixXd T;  // clamp constraint map, (2n+2) x (3+2n)
    double tip_m = 0.0;
    double tip_J = 0.0;

    int total_dofs() const { return n_surface + 3 + n_beam_interior; }
    int v_offset() const { return 0; }
    int q_offset() const { return n_surface; }
    int w_offset() const { return n_surface + 3; }
    int tip_deflection_index() const { return total_dofs() - 2; }
    int tip_rotation_index() const { return total_dofs() - 1; }

    // Full beam DOF vector (2n+2) from a monolithic state vector.
    Eigen::VectorXd beam_full_dofs(const Eigen::VectorXd& x) const;
};

// Assembles the monolithic system from the component operators, all built on
// the same configuration. `beam` must be the bare model (tip mass is applied
// here so both the augmented and bare mass matrices are retained).
CoupledSystem assemble_monolithic(const DtNOperator& dtn,
                                  const HydroOperators& hydro,
                                  const BeamModel& beam,
                                  const Eigen::MatrixXd& clamp_T, double rho_f,
                                  double g);

// First-order state-space action z = [x; x'] -> [x'; -M^-1(K x + G x')] with
// the energy (semi-)inner product <z1,z2> = x1 K x2 + x1' M x2'. The product
// is degenerate exactly on the constant-fluid gauge mode.
class FirstOrderForm {
public:
    explicit FirstOrderForm(const CoupledSystem& sys);

    Eigen::VectorXd apply(const Eigen::VectorXd& z) const;
    double energy_product(const Eigen::VectorXd& z1,
                          const Eigen::VectorXd& z2) const;
    const CoupledSystem& system() const { return *sys_; }

    // Dense first-order operator, for spectra at moderate sizes.
    Eigen::MatrixXd dense_operator() const;

private:
    const CoupledSystem* sys_;
    Eigen::LLT<Eigen::MatrixXd> m_llt_;
};

struct EigenMode {
    std::complex<double> lambda;
    Eigen::VectorXcd x;     // position part of the eigenvector
    Eigen::VectorXcd xdot;  // velocity part
    double frac_fluid = 0.0;
    double frac_platform = 0.0;
    double frac_beam = 0.0;
    double residual = 0.0;  // ||A z - lambda z|| / ||z||
};

// All eigenvalues of the dense first-order operator (diagnostic sizes only).
std::vector<std::complex<double>> spectrum_eigenvalues(const CoupledSystem& sys);

// k lowest-frequency oscillatory modes (Im lambda > 0, one per conjugate
// pair). Near-zero eigenvalues — the constant-fluid gauge mode — are
// deflated with the relative threshold zero_tol * max |Im lambda|.
// Throws ConvergenceError if an accepted mode has residual above 1e-8.
std::vector<EigenMode> spectrum(const CoupledSystem& sys, int k,
                                double zero_tol = 1e-6);

}  // namespace floatbeam
