#pragma once

#include <string>

#include "floatbeam/config.hpp"

namespace floatbeam::testing {

// Small tank + short tower: fast to assemble, still exercises every block.
inline RunConfig small_config() {
    RunConfig cfg;
    cfg.depth_h = 2.0;
    cfg.tank_halflength_Lx = 8.0;
    cfg.hull_halfbeam_a = 1.0;
    cfg.hull_draft_d = 0.5;
    cfg.y_G = -0.25;
    cfg.mesh_target_size = 0.25;

    cfg.mass_mp = 800.0;
    cfg.inertia_Ip = 600.0;
    cfg.rho_f = 1000.0;
    cfg.gravity_g = 9.81;
    cfg.mooring_surge_k = 200.0;

    cfg.beam_y0 = 0.25;
    cfg.beam_length = 3.0;
    cfg.beam_rho = BeamCoefficient::constant(50.0);
    cfg.beam_EI = BeamCoefficient::constant(4.0e6);
    cfg.tip_mass_m = 50.0;
    cfg.tip_inertia_J = 20.0;
    cfg.n_elements = 8;

    cfg.dt = 0.005;
    cfg.T = 1.0;
    cfg.output_every = 5;
    cfg.solver_tol = 1e-12;
    cfg.probe_x = 4.0;
    cfg.seed = 777;
    return cfg;
}

inline std::string config_dir() { return FLOATBEAM_CONFIG_DIR; }
inline std::string default_config_path() {
    return std::string(FLOATBEAM_CONFIG_DIR) + "/default.ini";
}
inline std::string cli_path() { return FLOATBEAM_CLI_PATH; }

}  // namespace floatbeam::testing
