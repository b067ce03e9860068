#include "floatbeam/coupled.hpp"

#include <algorithm>
#include <cmath>

#include "floatbeam/errors.hpp"

namespace floatbeam {

Eigen::VectorXd CoupledSystem::beam_full_dofs(const Eigen::VectorXd& x) const {
    if (x.size() != total_dofs())
        throw DimensionError("beam_full_dofs: state size mismatch");
    Eigen::VectorXd u(3 + n_beam_interior);
    u.head<3>() = x.segment<3>(q_offset());
    u.tail(n_beam_interior) = x.tail(n_beam_interior);
    return T * u;
}

CoupledSystem assemble_monolithic(const DtNOperator& dtn,
                                  const HydroOperators& hydro,
                                  const BeamModel& beam,
                                  const Eigen::MatrixXd& clamp_T, double rho_f,
                                  double g) {
    const int ns = static_cast<int>(dtn.lambda_weak.rows());
    if (hydro.C.cols() != ns || dtn.surface_mass.rows() != ns)
        throw DimensionError("assemble_monolithic: surface block sizes disagree");
    const int beam_dofs = beam.num_dofs();
    const int n_int = beam_dofs - 2;
    if (clamp_T.rows() != beam_dofs || clamp_T.cols() != 3 + n_int)
        throw DimensionError("assemble_monolithic: clamp map shape mismatch");
    if (beam.tip_applied)
        throw DimensionError(
            "assemble_monolithic expects the bare beam model; the tip mass is "
            "applied internally");

    CoupledSystem sys;
    sys.n_surface = ns;
    sys.n_beam_interior = n_int;
    sys.rho_f = rho_f;
    sys.g = g;
    sys.surface_mass = dtn.surface_mass;
    sys.lambda_weak = dtn.lambda_weak;
    sys.M_T = hydro.M_T;
    sys.K = hydro.K;
    sys.M_b_bare = beam.M_b;
    sys.K_b = beam.K_b;
    sys.T = clamp_T;
    sys.tip_m = beam.params.tip_mass_m;
    sys.tip_J = beam.params.tip_inertia_J;

    const BeamModel beam_aug =
        apply_tip_mass(beam, beam.params.tip_mass_m, beam.params.tip_inertia_J);

    const int n_struct = 3 + n_int;
    const int total = ns + n_struct;

    Eigen::MatrixXd m_struct = clamp_T.transpose() * beam_aug.M_b * clamp_T;
    m_struct.topLeftCorner<3, 3>() += hydro.M_T;
    Eigen::MatrixXd k_struct = clamp_T.transpose() * beam.K_b * clamp_T;
    k_struct.topLeftCorner<3, 3>() += hydro.K;

    sys.M_g = Eigen::MatrixXd::Zero(total, total);
    sys.M_g.topLeftCorner(ns, ns) = (rho_f / g) * Eigen::MatrixXd(dtn.surface_mass);
    sys.M_g.bottomRightCorner(n_struct, n_struct) = m_struct;
    sys.M_g = 0.5 * (sys.M_g + sys.M_g.transpose()).eval();

    sys.K_g = Eigen::MatrixXd::Zero(total, total);
    sys.K_g.topLeftCorner(ns, ns) = rho_f * dtn.lambda_weak;
    sys.K_g.bottomRightCorner(n_struct, n_struct) = k_struct;
    sys.K_g = 0.5 * (sys.K_g + sys.K_g.transpose()).eval();

    // One C on both sides: skewness holds exactly, so the semi-discrete
    // energy balance does too.
    sys.G_g = Eigen::MatrixXd::Zero(total, total);
    sys.G_g.block(0, ns, ns, 3) = rho_f * hydro.C.transpose();
    sys.G_g.block(ns, 0, 3, ns) = -rho_f * hydro.C;

    sys.B = Eigen::MatrixXd::Zero(total, 5);
    sys.B(sys.q_offset() + 0, 0) = 1.0;
    sys.B(sys.q_offset() + 1, 1) = 1.0;
    sys.B(sys.q_offset() + 2, 2) = 1.0;
    sys.B(sys.tip_deflection_index(), 3) = 1.0;
    sys.B(sys.tip_rotation_index(), 4) = 1.0;
    return sys;
}

FirstOrderForm::FirstOrderForm(const CoupledSystem& sys) : sys_(&sys) {
    m_llt_.compute(sys.M_g);
    if (m_llt_.info() != Eigen::Success)
        throw SolveError("monolithic mass matrix is not positive definite");
}

Eigen::VectorXd FirstOrderForm::apply(const Eigen::VectorXd& z) const {
    const int n = sys_->total_dofs();
    if (z.size() != 2 * n)
        throw DimensionError("first-order state has wrong size");
    const Eigen::VectorXd x = z.head(n);
    const Eigen::VectorXd u = z.tail(n);
    Eigen::VectorXd out(2 * n);
    out.head(n) = u;
    out.tail(n) = m_llt_.solve(-(sys_->K_g * x) - sys_->G_g * u);
    return out;
}

double FirstOrderForm::energy_product(const Eigen::VectorXd& z1,
                                      const Eigen::VectorXd& z2) const {
    const int n = sys_->total_dofs();
    if (z1.size() != 2 * n || z2.size() != 2 * n)
        throw DimensionError("first-order state has wrong size");
    const double pot = z1.head(n).dot(sys_->K_g * z2.head(n));
    const double kin = z1.tail(n).dot(sys_->M_g * z2.tail(n));
    return pot + kin;
}

Eigen::MatrixXd FirstOrderForm::dense_operator() const {
    const int n = sys_->total_dofs();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    a.topRightCorner(n, n).setIdentity();
    a.bottomLeftCorner(n, n) = -m_llt_.solve(sys_->K_g);
    a.bottomRightCorner(n, n) = -m_llt_.solve(sys_->G_g);
    return a;
}

std::vector<std::complex<double>> spectrum_eigenvalues(
    const CoupledSystem& sys) {
    const FirstOrderForm form(sys);
    Eigen::EigenSolver<Eigen::MatrixXd> es(form.dense_operator(), false);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("eigenvalue iteration failed");
    std::vector<std::complex<double>> vals(es.eigenvalues().data(),
                                           es.eigenvalues().data() +
                                               es.eigenvalues().size());
    return vals;
}

namespace {

double hermitian_form(const Eigen::VectorXcd& y, const Eigen::MatrixXd& q) {
    return std::real(y.dot(q * y));  // Eigen's dot conjugates the left factor
}

}  // namespace

std::vector<EigenMode> spectrum(const CoupledSystem& sys, int k,
                                double zero_tol) {
    const FirstOrderForm form(sys);
    const Eigen::MatrixXd a = form.dense_operator();
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("eigenvalue iteration failed");

    const int n = sys.total_dofs();
    const auto& vals = es.eigenvalues();
    double max_im = 0.0;
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        max_im = std::max(max_im, std::abs(vals[i].imag()));
    const double zero_cut = zero_tol * max_im;

    std::vector<int> order;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals[i].imag() <= 0.0) continue;        // keep one of each pair
        if (std::abs(vals[i]) <= zero_cut) continue;  // gauge mode
        order.push_back(static_cast<int>(i));
    }
    std::sort(order.begin(), order.end(), [&](int p, int q) {
        return vals[p].imag() < vals[q].imag();
    });
    if (static_cast<int>(order.size()) > k) order.resize(k);

    const int ns = sys.n_surface;
    std::vector<EigenMode> modes;
    modes.reserve(order.size());
    for (int idx : order) {
        EigenMode m;
        m.lambda = vals[idx];
        const Eigen::VectorXcd z = es.eigenvectors().col(idx);
        m.x = z.head(n);
        m.xdot = z.tail(n);
        m.residual = (a * z - vals[idx] * z).norm() / z.norm();
        if (m.residual > 1e-8)
            throw ConvergenceError("eigenpair residual above 1e-8");

        // Energy split of the mode across the physical subsystems.
        const double e_fluid =
            (sys.rho_f / sys.g) *
                hermitian_form(m.xdot.head(ns),
                               Eigen::MatrixXd(sys.surface_mass)) +
            sys.rho_f * hermitian_form(m.x.head(ns), sys.lambda_weak);
        const Eigen::VectorXcd q = m.x.segment<3>(sys.q_offset());
        const Eigen::VectorXcd qd = m.xdot.segment<3>(sys.q_offset());
        const double e_plat = hermitian_form(qd, sys.M_T) + hermitian_form(q, sys.K);
        // Beam part including the tip: full-DOF reconstruction.
        Eigen::VectorXcd u_struct(3 + sys.n_beam_interior),
            ud_struct(3 + sys.n_beam_interior);
        u_struct << q, m.x.tail(sys.n_beam_interior);
        ud_struct << qd, m.xdot.tail(sys.n_beam_interior);
        const Eigen::VectorXcd w = sys.T * u_struct;
        const Eigen::VectorXcd wd = sys.T * ud_struct;
        double e_beam = hermitian_form(wd, sys.M_b_bare) +
                        hermitian_form(w, sys.K_b);
        e_beam += sys.tip_m * std::norm(wd[wd.size() - 2]) +
                  sys.tip_J * std::norm(wd[wd.size() - 1]);
        const double e_tot = e_fluid + e_plat + e_beam;
        if (e_tot > 0.0) {
            m.frac_fluid = e_fluid / e_tot;
            m.frac_platform = e_plat / e_tot;
            m.frac_beam = e_beam / e_tot;
        }
        modes.push_back(std::move(m));
    }
    return modes;
}

}  // namespace floatbeam
