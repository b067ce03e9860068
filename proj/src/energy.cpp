#include "floatbeam/energy.hpp"

#include "floatbeam/errors.hpp"

namespace floatbeam {

EnergyReport energy(const CoupledSystem& sys, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& xdot) {
    const int total = sys.total_dofs();
    if (x.size() != total || xdot.size() != total)
        throw DimensionError("energy: state size mismatch");

    const int ns = sys.n_surface;
    EnergyReport r;

    const Eigen::VectorXd v = x.head(ns);
    const Eigen::VectorXd vd = xdot.head(ns);
    r.fluid_kinetic = 0.5 * (sys.rho_f / sys.g) * vd.dot(sys.surface_mass * vd);
    r.fluid_potential = 0.5 * sys.rho_f * v.dot(sys.lambda_weak * v);

    const Eigen::Vector3d q = x.segment<3>(sys.q_offset());
    const Eigen::Vector3d qd = xdot.segment<3>(sys.q_offset());
    r.platform_kinetic = 0.5 * qd.dot(sys.M_T * qd);
    r.platform_potential = 0.5 * q.dot(sys.K * q);

    const Eigen::VectorXd w = sys.beam_full_dofs(x);
    const Eigen::VectorXd wd = sys.beam_full_dofs(xdot);
    r.beam_kinetic = 0.5 * wd.dot(sys.M_b_bare * wd);
    r.beam_potential = 0.5 * w.dot(sys.K_b * w);
    r.tip_translational = 0.5 * sys.tip_m * wd[wd.size() - 2] * wd[wd.size() - 2];
    r.tip_rotational = 0.5 * sys.tip_J * wd[wd.size() - 1] * wd[wd.size() - 1];

    r.total = r.fluid_kinetic + r.fluid_potential + r.platform_kinetic +
              r.platform_potential + r.beam_kinetic + r.beam_potential +
              r.tip_translational + r.tip_rotational;
    return r;
}

BalanceSeries balance_residual(const std::vector<SimRecord>& history) {
    if (history.size() < 2)
        throw DimensionError("balance_residual needs at least two records");
    BalanceSeries out;
    out.residual.reserve(history.size());
    const double e0 = history.front().energy.total;
    for (const auto& rec : history) {
        const double res = rec.energy.total - e0 - rec.energy.work_to_date;
        out.residual.push_back(res);
        out.max_abs = std::max(out.max_abs, std::abs(res));
    }
    return out;
}

}  // namespace floatbeam
