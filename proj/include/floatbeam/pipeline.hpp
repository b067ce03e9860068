#pragma once

#include <string>

#include "floatbeam/config.hpp"
#include "floatbeam/coupled.hpp"
#include "floatbeam/mesh.hpp"
#include "floatbeam/timeloop.hpp"

namespace floatbeam {

// Everything assembled from one configuration, in dependency order.
struct SystemBundle {
    FluidGeometry geom;
    Mesh mesh;
    LaplaceSystem laplace;
    KirchhoffSet kirchhoff;
    DtNOperator dtn;
    HydroOperators hydro;
    BeamModel beam;  // bare (tip mass lives inside `coupled`)
    Eigen::MatrixXd clamp_T;
    CoupledSystem coupled;
    int probe_index = 0;
    std::string equilibrium_warning;  // empty when floating equilibrium holds
};

SystemBundle build_system(const RunConfig& cfg);

// Parametric initial state: surface cosine mode (wavenumber mode*pi/(2Lx)),
// rigid motion from q0/q1, and a clamped-cantilever elastic deflection shape
// scaled to the given tip values. All in reduced coordinates, so the clamp
// compatibility holds by construction.
struct InitialShape {
    Eigen::Vector3d q0 = Eigen::Vector3d::Zero();
    Eigen::Vector3d q1 = Eigen::Vector3d::Zero();
    int v0_mode = 1;
    double v0_amp = 0.0;
    int v1_mode = 1;
    double v1_amp = 0.0;
    double w0_tip = 0.0;
    double w1_tip = 0.0;
};

InitialData make_initial(const SystemBundle& bundle, const InitialShape& shape);

// Initial state from the [initial] block of the configuration.
InitialData initial_from_config(const RunConfig& cfg, const SystemBundle& bundle);

}  // namespace floatbeam
