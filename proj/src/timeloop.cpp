#include "floatbeam/timeloop.hpp"

#include <algorithm>
#include <cmath>

#include "floatbeam/errors.hpp"

namespace floatbeam {

double Signal::operator()(double t) const {
    switch (kind) {
        case Kind::Zero:
            return 0.0;
        case Kind::Sinusoid:
            return amplitude * std::sin(omega * t + phase);
        case Kind::Ramp:
            return rate * std::min(t, t_end);
        case Kind::Table: {
            if (t <= table.front().first) return table.front().second;
            if (t >= table.back().first) return table.back().second;
            auto hi = std::upper_bound(
                table.begin(), table.end(), t,
                [](double v, const auto& p) { return v < p.first; });
            auto lo = hi - 1;
            const double s = (t - lo->first) / (hi->first - lo->first);
            return lo->second + s * (hi->second - lo->second);
        }
    }
    return 0.0;
}

Signal Signal::zero() { return Signal{}; }

Signal Signal::sinusoid(double amplitude, double omega, double phase) {
    Signal s;
    s.kind = Kind::Sinusoid;
    s.amplitude = amplitude;
    s.omega = omega;
    s.phase = phase;
    return s;
}

Signal Signal::ramp(double rate, double t_end) {
    Signal s;
    s.kind = Kind::Ramp;
    s.rate = rate;
    s.t_end = t_end;
    return s;
}

Signal Signal::from_table(std::vector<std::pair<double, double>> points) {
    if (points.empty()) throw ConfigError("forcing table is empty");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i].first > points[i - 1].first))
            throw ConfigError("forcing table times must be strictly increasing");
    Signal s;
    s.kind = Kind::Table;
    s.table = std::move(points);
    return s;
}

Eigen::Matrix<double, 5, 1> ForcingSpec::eval(double t) const {
    Eigen::Matrix<double, 5, 1> f;
    f << f_ext[0](t), f_ext[1](t), f_ext[2](t), f_tip(t), m_tip(t);
    return f;
}

bool ForcingSpec::is_zero() const {
    return f_ext[0].is_zero() && f_ext[1].is_zero() && f_ext[2].is_zero() &&
           f_tip.is_zero() && m_tip.is_zero();
}

InitialData InitialData::zero(const CoupledSystem& sys) {
    InitialData d;
    d.v0 = Eigen::VectorXd::Zero(sys.n_surface);
    d.v1 = Eigen::VectorXd::Zero(sys.n_surface);
    d.w0 = Eigen::VectorXd::Zero(sys.n_beam_interior);
    d.w1 = Eigen::VectorXd::Zero(sys.n_beam_interior);
    return d;
}

SimState InitialData::to_state(const CoupledSystem& sys) const {
    if (v0.size() != sys.n_surface || v1.size() != sys.n_surface ||
        w0.size() != sys.n_beam_interior || w1.size() != sys.n_beam_interior)
        throw DimensionError("initial data block sizes do not match the system");
    SimState s;
    s.x.resize(sys.total_dofs());
    s.xdot.resize(sys.total_dofs());
    s.x << v0, q0, w0;
    s.xdot << v1, q1, w1;
    return s;
}

InitialData InitialData::from_full(const CoupledSystem& sys,
                                   const Eigen::VectorXd& v0,
                                   const Eigen::VectorXd& v1,
                                   const Eigen::Vector3d& q0,
                                   const Eigen::Vector3d& q1,
                                   const Eigen::VectorXd& w0_full,
                                   const Eigen::VectorXd& w1_full) {
    const int nfull = sys.n_beam_interior + 2;
    if (w0_full.size() != nfull || w1_full.size() != nfull)
        throw DimensionError("from_full: beam DOF vector size mismatch");

    // The first T column block encodes r(y0) and r'(y0).
    const double lever = sys.T(0, 2);
    const auto check = [&](const Eigen::VectorXd& w, const Eigen::Vector3d& q,
                           const char* what) {
        const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
        const double defl = std::abs(w[0] - (q[0] + lever * q[2]));
        const double rot = std::abs(w[1] - q[2]);
        if (defl > 1e-9 * scale || rot > 1e-9 * scale)
            throw CompatibilityError(
                std::string("initial ") + what +
                " violates the clamp compatibility conditions");
    };
    check(w0_full, q0, "position");
    check(w1_full, q1, "velocity");

    InitialData d;
    d.v0 = v0;
    d.v1 = v1;
    d.q0 = q0;
    d.q1 = q1;
    d.w0 = w0_full.tail(sys.n_beam_interior);
    d.w1 = w1_full.tail(sys.n_beam_interior);
    return d;
}

MidpointStepper::MidpointStepper(const CoupledSystem& sys, double dt)
    : sys_(&sys), dt_(dt) {
    if (dt == 0.0) throw SolveError("time step must be nonzero");
    s_ = sys.M_g + (0.5 * dt) * sys.G_g + (0.25 * dt * dt) * sys.K_g;
    s_lu_.compute(s_);
}

void MidpointStepper::step(SimState& state, const ForcingSpec& forcing) const {
    const Eigen::Matrix<double, 5, 1> f_mid =
        forcing.eval(state.t + 0.5 * dt_);
    const Eigen::VectorXd bf = sys_->B * f_mid;
    const Eigen::VectorXd rhs = sys_->M_g * state.xdot -
                                (0.5 * dt_) * (sys_->K_g * state.x) +
                                (0.5 * dt_) * bf;
    Eigen::VectorXd u_mid = s_lu_.solve(rhs);
    u_mid += s_lu_.solve(rhs - s_ * u_mid);  // one refinement pass

    state.x += dt_ * u_mid;
    state.xdot = 2.0 * u_mid - state.xdot;
    state.work += dt_ * f_mid.dot(sys_->B.transpose() * u_mid);
    state.t += dt_;
    state.step_index += 1;

    if (!state.x.allFinite() || !state.xdot.allFinite())
        throw NaNError("non-finite state after step " +
                       std::to_string(state.step_index));
}

SimRecord make_record(const CoupledSystem& sys, const SimState& state,
                      int probe_surface_index, double e0) {
    SimRecord rec;
    rec.t = state.t;
    rec.q = state.x.segment<3>(sys.q_offset());
    rec.qdot = state.xdot.segment<3>(sys.q_offset());
    rec.w_tip = state.x[sys.tip_deflection_index()];
    rec.wth_tip = state.x[sys.tip_rotation_index()];
    rec.v_probe = state.x[probe_surface_index];
    rec.energy = energy(sys, state.x, state.xdot);
    rec.energy.work_to_date = state.work;
    rec.energy.residual = rec.energy.total - e0 - state.work;
    return rec;
}

std::vector<SimRecord> simulate(const CoupledSystem& sys,
                                const InitialData& init,
                                const ForcingSpec& forcing,
                                const SimulateOptions& opts) {
    if (!(opts.dt > 0.0)) throw ConfigError("simulate: dt must be positive");
    if (!(opts.T > 0.0)) throw ConfigError("simulate: T must be positive");
    if (opts.output_every < 1)
        throw ConfigError("simulate: output_every must be >= 1");
    if (opts.probe_surface_index < 0 ||
        opts.probe_surface_index >= sys.n_surface)
        throw ConfigError("simulate: probe index out of range");

    const long n_steps =
        static_cast<long>(std::llround(std::ceil(opts.T / opts.dt - 1e-9)));
    SimState state = init.to_state(sys);
    const double e0 = energy(sys, state.x, state.xdot).total;

    MidpointStepper stepper(sys, opts.dt);
    std::vector<SimRecord> records;
    records.reserve(static_cast<std::size_t>(n_steps / opts.output_every) + 2);
    records.push_back(make_record(sys, state, opts.probe_surface_index, e0));
    for (long k = 0; k < n_steps; ++k) {
        stepper.step(state, forcing);
        if (state.step_index % opts.output_every == 0 || k + 1 == n_steps)
            records.push_back(
                make_record(sys, state, opts.probe_surface_index, e0));
    }
    return records;
}

}  // namespace floatbeam
