#include "floatbeam/pipeline.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "floatbeam/errors.hpp"

namespace floatbeam {

SystemBundle build_system(const RunConfig& cfg) {
    FluidGeometry geom = cfg.geometry();
    Mesh mesh = generate_mesh(geom);
    LaplaceSystem laplace = assemble_laplace(mesh, cfg.solver_tol);
    KirchhoffSet kirchhoff = solve_kirchhoff(laplace, mesh, geom);
    DtNOperator dtn = dtn_schur(laplace, mesh);

    BeamParams beam_params = cfg.beam();
    BeamModel beam = assemble_beam(beam_params);

    // Supported mass for the floating-equilibrium warning: platform + beam
    // + tip (the translation quadratic form of M_b is exactly int rho dy).
    Eigen::VectorXd translation = Eigen::VectorXd::Zero(beam.num_dofs());
    for (int i = 0; i < beam.num_dofs(); i += 2) translation[i] = 1.0;
    const double beam_mass = translation.dot(beam.M_b * translation);
    const double supported = cfg.mass_mp + beam_mass + cfg.tip_mass_m;

    std::string warning;
    HydroOperators hydro = assemble_hydro(geom, cfg.platform(), laplace,
                                          kirchhoff, supported, &warning);

    Eigen::MatrixXd clamp_T = clamp_transform(beam_params, cfg.y_G);
    CoupledSystem coupled = assemble_monolithic(dtn, hydro, beam, clamp_T,
                                                cfg.rho_f, cfg.gravity_g);

    // Probe: nearest free-surface node to the configured x.
    int probe = 0;
    double best = std::numeric_limits<double>::max();
    for (int k = 0; k < mesh.num_surface_nodes(); ++k) {
        const double d =
            std::abs(mesh.nodes[mesh.surface_node_index[k]][0] - cfg.probe_x);
        if (d < best) {
            best = d;
            probe = k;
        }
    }

    return SystemBundle{std::move(geom),     std::move(mesh),
                        std::move(laplace),  std::move(kirchhoff),
                        std::move(dtn),      std::move(hydro),
                        std::move(beam),     std::move(clamp_T),
                        std::move(coupled),  probe,
                        std::move(warning)};
}

InitialData make_initial(const SystemBundle& bundle, const InitialShape& shape) {
    const CoupledSystem& sys = bundle.coupled;
    InitialData init = InitialData::zero(sys);
    init.q0 = shape.q0;
    init.q1 = shape.q1;

    const double lx = bundle.geom.tank_halflength_Lx;
    const double y_g = bundle.geom.y_G;
    const auto surface_mode = [&](int mode, double amp, Eigen::VectorXd& v) {
        if (amp == 0.0) return;
        const double k = mode * std::numbers::pi / (2.0 * lx);
        for (int j = 0; j < sys.n_surface; ++j) {
            const double x = bundle.mesh.nodes[bundle.mesh.surface_node_index[j]][0];
            v[j] = amp * std::cos(k * (x + lx));
        }
    };
    surface_mode(shape.v0_mode, shape.v0_amp, init.v0);
    surface_mode(shape.v1_mode, shape.v1_amp, init.v1);

    // Elastic part: clamped cantilever shape s(y0)=s'(y0)=0, s(y_L)=1,
    // s'(y_L)=0, superposed on the rigid motion dragged by q.
    const BeamParams& bp = bundle.beam.params;
    const auto beam_dofs = [&](const Eigen::Vector3d& q, double tip_amp,
                               Eigen::VectorXd& w) {
        for (int node = 1; node <= bp.n_elements; ++node) {
            const double y = bundle.beam.node_y[node];
            const double xi = (y - bp.y0) / bp.L;
            const double s = xi * xi * (3.0 - 2.0 * xi);
            const double ds = 6.0 * xi * (1.0 - xi) / bp.L;
            const double rigid = q[0] + (y - y_g) * q[2];
            w[2 * (node - 1)] = rigid + tip_amp * s;
            w[2 * (node - 1) + 1] = q[2] + tip_amp * ds;
        }
    };
    beam_dofs(shape.q0, shape.w0_tip, init.w0);
    beam_dofs(shape.q1, shape.w1_tip, init.w1);
    return init;
}

InitialData initial_from_config(const RunConfig& cfg,
                                const SystemBundle& bundle) {
    InitialShape shape;
    shape.q0 = cfg.q0;
    shape.q1 = cfg.q1;
    shape.v0_mode = cfg.v0_mode;
    shape.v0_amp = cfg.v0_amp;
    shape.v1_mode = cfg.v1_mode;
    shape.v1_amp = cfg.v1_amp;
    shape.w0_tip = cfg.w0_tip;
    shape.w1_tip = cfg.w1_tip;
    return make_initial(bundle, shape);
}

}  // namespace floatbeam
