#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "floatbeam/coupled.hpp"
#include "floatbeam/energy.hpp"

namespace floatbeam {

// Scalar forcing channel.
struct Signal {
    enum class Kind { Zero, Sinusoid, Ramp, Table };
    Kind kind = Kind::Zero;
    double amplitude = 0.0, omega = 0.0, phase = 0.0;  // A sin(omega t + phase)
    double rate = 0.0, t_end = 0.0;                    // rate * min(t, t_end)
    std::vector<std::pair<double, double>> table;      // (t, f), linear interp

    double operator()(double t) const;
    bool is_zero() const { return kind == Kind::Zero; }

    static Signal zero();
    static Signal sinusoid(double amplitude, double omega, double phase = 0.0);
    static Signal ramp(double rate, double t_end);
    // Throws ConfigError unless times are strictly increasing.
    static Signal from_table(std::vector<std::pair<double, double>> points);
};

struct ForcingSpec {
    Signal f_ext[3];
    Signal f_tip;
    Signal m_tip;

    Eigen::Matrix<double, 5, 1> eval(double t) const;
    bool is_zero() const;
};

struct SimState {
    double t = 0.0;
    Eigen::VectorXd x;
    Eigen::VectorXd xdot;
    long step_index = 0;
    double work = 0.0;  // accumulated midpoint-quadrature work of the forcing
};

// Initial data in reduced coordinates; the clamp compatibility conditions
// hold by construction.
struct InitialData {
    Eigen::VectorXd v0, v1;      // surface trace and its velocity
    Eigen::Vector3d q0 = Eigen::Vector3d::Zero();
    Eigen::Vector3d q1 = Eigen::Vector3d::Zero();
    Eigen::VectorXd w0, w1;      // interior beam DOFs (absolute)

    static InitialData zero(const CoupledSystem& sys);
    SimState to_state(const CoupledSystem& sys) const;

    // Accepts full beam DOF vectors and checks the clamp compatibility
    // conditions to 1e-9; throws CompatibilityError otherwise.
    static InitialData from_full(const CoupledSystem& sys,
                                 const Eigen::VectorXd& v0,
                                 const Eigen::VectorXd& v1,
                                 const Eigen::Vector3d& q0,
                                 const Eigen::Vector3d& q1,
                                 const Eigen::VectorXd& w0_full,
                                 const Eigen::VectorXd& w1_full);
};

// One-step implicit midpoint integrator for M x'' + G x' + K x = B f(t).
// The scheme treats the forcing at the interval midpoint and conserves the
// quadratic energy exactly (to solver roundoff) when f = 0. Negative dt
// steps backwards; the scheme is symmetric, so a forward/backward round
// trip returns the initial state.
class MidpointStepper {
public:
    MidpointStepper(const CoupledSystem& sys, double dt);

    double dt() const { return dt_; }
    // Advances the state in place and accumulates the midpoint work
    // increment dt * f(t_mid) . B' u_mid. Throws NaNError if the state
    // leaves the finite range.
    void step(SimState& state, const ForcingSpec& forcing) const;

private:
    const CoupledSystem* sys_;
    double dt_;
    Eigen::MatrixXd s_;  // M + dt/2 G + dt^2/4 K
    Eigen::PartialPivLU<Eigen::MatrixXd> s_lu_;
};

struct SimulateOptions {
    double dt = 0.0;
    double T = 0.0;
    int output_every = 1;
    int probe_surface_index = 0;
};

// Runs the trajectory and returns records at step 0, every output_every
// steps, and the final step. Deterministic for identical inputs.
std::vector<SimRecord> simulate(const CoupledSystem& sys,
                                const InitialData& init,
                                const ForcingSpec& forcing,
                                const SimulateOptions& opts);

// Record assembled from a state (probe index from opts; work/residual from
// the running tallies).
SimRecord make_record(const CoupledSystem& sys, const SimState& state,
                      int probe_surface_index, double e0);

}  // namespace floatbeam
