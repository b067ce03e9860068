#include "floatbeam/hydro.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <sstream>

#include "floatbeam/errors.hpp"

namespace floatbeam {

Eigen::Matrix3d added_mass(const KirchhoffSet& kirchhoff,
                           const LaplaceSystem& sys, double rho_f) {
    Eigen::Matrix3d ma;
    for (int i = 0; i < 3; ++i) {
        const Eigen::VectorXd a_phi_i = sys.stiffness() * kirchhoff.phi.col(i);
        for (int j = i; j < 3; ++j) {
            const double v = rho_f * a_phi_i.dot(kirchhoff.phi.col(j));
            ma(i, j) = v;
            ma(j, i) = v;
        }
    }
    return ma;
}

Eigen::Matrix3d added_mass_surface_form(const KirchhoffSet& kirchhoff,
                                        double rho_f) {
    // int_{Gw} nu_i phi_j dG = load_i . phi_j, exact for the P1 trace.
    return rho_f * (kirchhoff.load.transpose() * kirchhoff.phi);
}

Eigen::Matrix3d platform_mass(const PlatformParams& params) {
    if (!(params.mass_mp > 0.0))
        throw StabilityError("platform mass must be positive");
    if (!(params.inertia_Ip > 0.0))
        throw StabilityError("platform inertia must be positive");
    Eigen::Matrix3d mp = Eigen::Matrix3d::Zero();
    mp(0, 0) = params.mass_mp;
    mp(1, 1) = params.mass_mp;
    mp(2, 2) = params.inertia_Ip;
    return mp;
}

Eigen::Matrix3d hydrostatic_stiffness(const FluidGeometry& geom,
                                      const PlatformParams& params,
                                      std::optional<double> supported_mass,
                                      std::string* warning) {
    const double rho_g = params.rho_f * params.gravity_g;
    const double width = geom.waterplane_width();
    const double a_sub = geom.submerged_area();
    const double y_b = -0.5 * geom.hull_draft_d;  // centre of buoyancy

    Eigen::Matrix3d k = Eigen::Matrix3d::Zero();
    k(0, 0) = params.mooring_surge_k;
    k(1, 1) = rho_g * width;
    // 2D metacentric restoring: waterplane inertia plus buoyancy lever.
    k(2, 2) = rho_g * (width * width * width / 12.0 +
                       a_sub * (y_b - params.y_G));

    for (int i = 0; i < 3; ++i) {
        if (!(k(i, i) > 0.0)) {
            static const char* dof[] = {"surge", "heave", "pitch"};
            std::ostringstream msg;
            msg << "hydrostatic stiffness not positive definite: " << dof[i]
                << " entry " << k(i, i) << " <= 0";
            throw StabilityError(msg.str());
        }
    }

    if (supported_mass && warning) {
        const double displaced = params.rho_f * a_sub;
        const double rel =
            std::abs(displaced - *supported_mass) / std::max(displaced, 1e-300);
        if (rel > 1e-6) {
            std::ostringstream msg;
            msg << "floating equilibrium off: displaced mass " << displaced
                << " kg/m vs supported mass " << *supported_mass << " kg/m";
            *warning = msg.str();
        }
    }
    return k;
}

Eigen::MatrixXd coupling_matrix(const KirchhoffSet& kirchhoff) {
    return kirchhoff.surface_flux.transpose();
}

HydroOperators assemble_hydro(const FluidGeometry& geom,
                              const PlatformParams& params,
                              const LaplaceSystem& sys,
                              const KirchhoffSet& kirchhoff,
                              std::optional<double> supported_mass,
                              std::string* warning) {
    HydroOperators ops;
    ops.M_p = platform_mass(params);
    ops.K = hydrostatic_stiffness(geom, params, supported_mass, warning);
    ops.M_a = added_mass(kirchhoff, sys, params.rho_f);
    ops.M_T = ops.M_p + ops.M_a;
    ops.C = coupling_matrix(kirchhoff);

    Eigen::LLT<Eigen::Matrix3d> llt(ops.M_T);
    if (llt.info() != Eigen::Success)
        throw SolveError("total platform mass matrix is not positive definite");
    return ops;
}

}  // namespace floatbeam
