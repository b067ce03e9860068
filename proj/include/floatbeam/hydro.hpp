#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "floatbeam/geometry.hpp"
#include "floatbeam/laplace.hpp"

namespace floatbeam {

// Rigid platform data, per unit length out of plane (2D model).
struct PlatformParams {
    double mass_mp = 0.0;        // kg/m
    double inertia_Ip = 0.0;     // kg m^2/m, about the mass centre
    double y_G = 0.0;            // m
    double rho_f = 1000.0;       // kg/m^3
    double gravity_g = 9.81;     // m/s^2
    double mooring_surge_k = 0.0;  // N/m^2, surge mooring stiffness
};

// Rigid-body operators of the platform in surge/heave/pitch coordinates.
//
// Sign conventions: boundary normals point out of the fluid, so the net
// surface flux identity reads C * 1 = -[int_{Gw} nu_i dG] = (0, -2a, 0)
// for the rectangular hull.
struct HydroOperators {
    Eigen::Matrix3d M_p;  // diag(m_p, m_p, I_p)
    Eigen::Matrix3d K;    // mooring + hydrostatic restoring
    Eigen::Matrix3d M_a;  // added mass, symmetric PSD by construction
    Eigen::Matrix3d M_T;  // M_p + M_a
    Eigen::MatrixXd C;    // 3 x num_surface coupling matrix
};

// Added mass through the energy form rho_f * phi_i' A phi_j; entries for
// i <= j are mirrored so the result is symmetric exactly.
Eigen::Matrix3d added_mass(const KirchhoffSet& kirchhoff,
                           const LaplaceSystem& sys, double rho_f);

// Surface-integral evaluation rho_f * int_{Gw} nu_i phi_j dG, kept as a
// cross-check of the energy form.
Eigen::Matrix3d added_mass_surface_form(const KirchhoffSet& kirchhoff,
                                        double rho_f);

// Linearized restoring matrix of the rectangular hull about equilibrium:
// diag(k_moor, rho g 2a, rho g ((2a)^3/12 + A_sub (y_B - y_G))).
// Throws StabilityError if any diagonal entry is <= 0. When
// supported_mass is given, a mismatch with the displaced mass is reported
// through the optional warning string (floating equilibrium check).
Eigen::Matrix3d hydrostatic_stiffness(const FluidGeometry& geom,
                                      const PlatformParams& params,
                                      std::optional<double> supported_mass = {},
                                      std::string* warning = nullptr);

Eigen::Matrix3d platform_mass(const PlatformParams& params);

// Rows are the consistent free-surface fluxes of the Kirchhoff potentials;
// the same matrix couples the fluid equation to the platform velocity and,
// transposed, the platform equation to the surface velocity.
Eigen::MatrixXd coupling_matrix(const KirchhoffSet& kirchhoff);

HydroOperators assemble_hydro(const FluidGeometry& geom,
                              const PlatformParams& params,
                              const LaplaceSystem& sys,
                              const KirchhoffSet& kirchhoff,
                              std::optional<double> supported_mass = {},
                              std::string* warning = nullptr);

}  // namespace floatbeam
