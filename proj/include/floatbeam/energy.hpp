#pragma once

#include <Eigen/Dense>
#include <vector>

#include "floatbeam/coupled.hpp"

namespace floatbeam {

// Eight-term physical energy split, per unit length (J/m). The sum of the
// terms equals the monolithic quadratic form (x' M_g x' + x K_g x)/2.
struct EnergyReport {
    double fluid_kinetic = 0.0;      // rho_f/(2g) ||v_t||^2
    double fluid_potential = 0.0;    // rho_f/2 v' Lambda v
    double platform_kinetic = 0.0;   // <M_T q', q'>/2
    double platform_potential = 0.0; // <K q, q>/2
    double beam_kinetic = 0.0;       // ||sqrt(rho) w_t||^2 / 2
    double beam_potential = 0.0;     // ||sqrt(EI) w_yy||^2 / 2
    double tip_translational = 0.0;  // m |w_t(y_L)|^2 / 2
    double tip_rotational = 0.0;     // J |w_yt(y_L)|^2 / 2
    double total = 0.0;
    double work_to_date = 0.0;  // filled along a trajectory
    double residual = 0.0;      // total - E(0) - work_to_date
};

EnergyReport energy(const CoupledSystem& sys, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& xdot);

struct SimRecord {
    double t = 0.0;
    Eigen::Vector3d q = Eigen::Vector3d::Zero();
    Eigen::Vector3d qdot = Eigen::Vector3d::Zero();
    double w_tip = 0.0;    // absolute tip deflection
    double wth_tip = 0.0;  // absolute tip rotation
    double v_probe = 0.0;  // surface trace at the probe node
    EnergyReport energy;
};

struct BalanceSeries {
    std::vector<double> residual;  // E_k - E_0 - W_k per record
    double max_abs = 0.0;
};

// Recomputes the balance residual series from a recorded history.
BalanceSeries balance_residual(const std::vector<SimRecord>& history);

}  // namespace floatbeam
