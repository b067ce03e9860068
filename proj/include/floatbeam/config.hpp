#pragma once

#include <Eigen/Dense>
#include <string>

#include "floatbeam/beam.hpp"
#include "floatbeam/geometry.hpp"
#include "floatbeam/hydro.hpp"
#include "floatbeam/timeloop.hpp"

namespace floatbeam {

// Parsed run configuration. Ingestion is strict: unknown sections or keys
// are rejected, missing required keys are reported by name. Two formats are
// accepted: block INI (key = value under [section]) and JSON with the same
// section/key layout.
struct RunConfig {
    // [geometry]
    double depth_h = 0.0;
    double tank_halflength_Lx = 0.0;
    double hull_halfbeam_a = 0.0;
    double hull_draft_d = 0.0;
    double y_G = 0.0;
    double mesh_target_size = 0.0;

    // [platform]
    double mass_mp = 0.0;
    double inertia_Ip = 0.0;
    double rho_f = 0.0;
    double gravity_g = 0.0;
    double mooring_surge_k = 0.0;

    // [beam]
    double beam_y0 = 0.0;
    double beam_length = 0.0;
    BeamCoefficient beam_rho = BeamCoefficient::constant(1.0);
    BeamCoefficient beam_EI = BeamCoefficient::constant(1.0);
    double tip_mass_m = 0.0;
    double tip_inertia_J = 0.0;
    int n_elements = 0;

    // [forcing] (channels default to zero)
    ForcingSpec forcing;

    // [initial] (defaults to the zero state)
    Eigen::Vector3d q0 = Eigen::Vector3d::Zero();
    Eigen::Vector3d q1 = Eigen::Vector3d::Zero();
    int v0_mode = 1;
    double v0_amp = 0.0;
    int v1_mode = 1;
    double v1_amp = 0.0;
    double w0_tip = 0.0;
    double w1_tip = 0.0;

    // [numerics]
    double dt = 0.0;
    double T = 0.0;
    int output_every = 1;
    double solver_tol = 1e-12;
    double probe_x = 0.0;  // defaults to the middle of the right surface
    unsigned long seed = 20260810;

    // [output]
    std::string out_dir = "out";
    std::string prefix = "run";

    FluidGeometry geometry() const;
    PlatformParams platform() const;
    BeamParams beam() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace floatbeam
