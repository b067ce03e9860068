#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>

#include "floatbeam/config.hpp"
#include "floatbeam/errors.hpp"
#include "floatbeam/mesh_io.hpp"
#include "floatbeam/output.hpp"
#include "floatbeam/pipeline.hpp"
#include "floatbeam/verify.hpp"

namespace fs = std::filesystem;
using floatbeam::RunConfig;
using json = nlohmann::ordered_json;

namespace {

struct CliState {
    std::string config_path;
    std::string out_override;
    bool quiet = false;
};

RunConfig load_config(const CliState& cli) {
    RunConfig cfg = floatbeam::parse_config_file(cli.config_path);
    if (!cli.out_override.empty()) cfg.out_dir = cli.out_override;
    return cfg;
}

fs::path out_file(const RunConfig& cfg, const std::string& suffix) {
    fs::create_directories(cfg.out_dir);
    return fs::path(cfg.out_dir) / (cfg.prefix + suffix);
}

void note(const CliState& cli, const std::string& msg) {
    if (!cli.quiet) std::cout << msg << "\n";
}

json matrix3_to_json(const Eigen::Matrix3d& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i)
        rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
    return rows;
}

int cmd_mesh(const CliState& cli) {
    const RunConfig cfg = load_config(cli);
    const auto geom = cfg.geometry();
    const auto mesh = floatbeam::generate_mesh(geom);
    const fs::path mesh_path = out_file(cfg, "_mesh.txt");
    floatbeam::write_mesh_file(mesh_path.string(), mesh);

    double min_angle = std::numbers::pi;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        for (int k = 0; k < 3; ++k) {
            const auto& p = mesh.nodes[tri[k]];
            const auto& q = mesh.nodes[tri[(k + 1) % 3]];
            const auto& r = mesh.nodes[tri[(k + 2) % 3]];
            const double ux = q[0] - p[0], uy = q[1] - p[1];
            const double vx = r[0] - p[0], vy = r[1] - p[1];
            const double ang = std::acos(
                (ux * vx + uy * vy) /
                (std::hypot(ux, uy) * std::hypot(vx, vy)));
            min_angle = std::min(min_angle, ang);
        }
    }
    double max_edge = 0.0;
    for (const auto& tri : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            const auto& p = mesh.nodes[tri[k]];
            const auto& q = mesh.nodes[tri[(k + 1) % 3]];
            max_edge = std::max(max_edge, std::hypot(q[0] - p[0], q[1] - p[1]));
        }
    }

    json report;
    report["nodes"] = mesh.num_nodes();
    report["triangles"] = mesh.num_triangles();
    report["surface_nodes"] = mesh.num_surface_nodes();
    report["min_angle_deg"] = min_angle * 180.0 / std::numbers::pi;
    report["max_edge"] = max_edge;
    report["max_edge_over_target"] = max_edge / geom.mesh_target_size;
    json tagged;
    using floatbeam::BoundaryTag;
    for (BoundaryTag tag : {BoundaryTag::FreeSurface, BoundaryTag::Wetted,
                            BoundaryTag::Seabed, BoundaryTag::Wall}) {
        tagged[floatbeam::boundary_tag_name(tag)] = mesh.tagged_length(tag);
    }
    report["tagged_length"] = tagged;

    const fs::path report_path = out_file(cfg, "_mesh_quality.json");
    std::ofstream os(report_path, std::ios::binary);
    os << report.dump(2) << "\n";
    note(cli, "wrote " + mesh_path.string() + " and " + report_path.string());
    return 0;
}

int cmd_operators(const CliState& cli, bool dump_matrices) {
    const RunConfig cfg = load_config(cli);
    const auto bundle = floatbeam::build_system(cfg);

    json summary;
    summary["M_p"] = matrix3_to_json(bundle.hydro.M_p);
    summary["M_a"] = matrix3_to_json(bundle.hydro.M_a);
    summary["M_T"] = matrix3_to_json(bundle.hydro.M_T);
    summary["K"] = matrix3_to_json(bundle.hydro.K);
    summary["C_row_norms"] = {bundle.hydro.C.row(0).norm(),
                              bundle.hydro.C.row(1).norm(),
                              bundle.hydro.C.row(2).norm()};

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(
        bundle.dtn.lambda_weak, Eigen::MatrixXd(bundle.dtn.surface_mass));
    json dtn_evs = json::array();
    const int n_report = std::min<int>(6, bundle.coupled.n_surface);
    for (int n = 0; n < n_report; ++n) dtn_evs.push_back(es.eigenvalues()[n]);
    summary["dtn_eigenvalues"] = dtn_evs;

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> mt(bundle.hydro.M_T);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> mg(bundle.coupled.M_g);
    json cond;
    cond["M_T"] = mt.eigenvalues()[2] / mt.eigenvalues()[0];
    cond["M_g"] = mg.eigenvalues()[mg.eigenvalues().size() - 1] /
                  mg.eigenvalues()[0];
    summary["condition_numbers"] = cond;

    json mesh_info;
    mesh_info["nodes"] = bundle.mesh.num_nodes();
    mesh_info["triangles"] = bundle.mesh.num_triangles();
    mesh_info["surface_nodes"] = bundle.mesh.num_surface_nodes();
    summary["mesh"] = mesh_info;
    if (!bundle.equilibrium_warning.empty())
        summary["equilibrium_warning"] = bundle.equilibrium_warning;

    const fs::path path = out_file(cfg, "_operators.json");
    std::ofstream os(path, std::ios::binary);
    os << summary.dump(2) << "\n";

    if (dump_matrices) {
        std::ofstream lam(out_file(cfg, "_lambda.mtx"), std::ios::binary);
        floatbeam::write_matrix_market(lam, bundle.dtn.lambda_weak);
        std::ofstream mass(out_file(cfg, "_surface_mass.mtx"), std::ios::binary);
        floatbeam::write_matrix_market(mass, bundle.dtn.surface_mass);
    }
    if (!bundle.equilibrium_warning.empty())
        note(cli, "warning: " + bundle.equilibrium_warning);
    note(cli, "wrote " + path.string());
    return 0;
}

int cmd_simulate(const CliState& cli) {
    const RunConfig cfg = load_config(cli);
    const auto bundle = floatbeam::build_system(cfg);
    if (!bundle.equilibrium_warning.empty())
        note(cli, "warning: " + bundle.equilibrium_warning);

    floatbeam::SimulateOptions opts;
    opts.dt = cfg.dt;
    opts.T = cfg.T;
    opts.output_every = cfg.output_every;
    opts.probe_surface_index = bundle.probe_index;
    const auto records =
        floatbeam::simulate(bundle.coupled,
                            floatbeam::initial_from_config(cfg, bundle),
                            cfg.forcing, opts);

    const fs::path path = out_file(cfg, "_timeseries.csv");
    std::ofstream os(path, std::ios::binary);
    floatbeam::write_timeseries_csv(os, records);
    note(cli, "wrote " + path.string() + " (" +
                  std::to_string(records.size()) + " records)");
    return 0;
}

int cmd_modes(const CliState& cli, int k) {
    const RunConfig cfg = load_config(cli);
    const auto bundle = floatbeam::build_system(cfg);
    const auto modes = floatbeam::spectrum(bundle.coupled, k);

    const fs::path path = out_file(cfg, "_modes.csv");
    std::ofstream os(path, std::ios::binary);
    floatbeam::write_modes_csv(os, modes);
    note(cli, "wrote " + path.string() + " (" + std::to_string(modes.size()) +
                  " modes)");
    return 0;
}

int cmd_verify(const CliState& cli, bool flip_coupling) {
    const RunConfig cfg = load_config(cli);
    floatbeam::VerifyOptions opts;
    opts.flip_coupling_sign = flip_coupling;
    const auto results = floatbeam::run_verification(cfg, opts);
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name
                  << ": " << r.detail << "\n";
    }
    return floatbeam::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("FLOATBEAM_THREADS")) {
        const int n = std::atoi(threads);
        if (n > 0) Eigen::setNbThreads(n);
    }

    CLI::App app{"floatbeam: coupled tank-platform-beam simulator"};
    app.require_subcommand(1);

    CliState cli;
    app.add_option("--config", cli.config_path, "configuration file (INI or JSON)")
        ->required();
    app.add_option("--out", cli.out_override, "output directory override");
    app.add_flag("--quiet", cli.quiet, "suppress progress notes");

    auto* mesh_cmd = app.add_subcommand("mesh", "generate and export the tagged mesh");
    auto* ops_cmd = app.add_subcommand("operators", "assemble and summarize the operators");
    bool dump_matrices = false;
    ops_cmd->add_flag("--dump-matrices", dump_matrices,
                      "also write Lambda and the surface mass in MatrixMarket form");
    auto* sim_cmd = app.add_subcommand("simulate", "run the time integration");
    auto* modes_cmd = app.add_subcommand("modes", "export the low-frequency spectrum");
    int k_modes = 10;
    modes_cmd->add_option("-k,--modes", k_modes, "number of modes to export");
    auto* verify_cmd = app.add_subcommand("verify", "run the property suite");
    bool flip_coupling = false;
    verify_cmd
        ->add_flag("--inject-c-sign-flip", flip_coupling,
                   "test hook: flip the platform coupling sign")
        ->group("");  // hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (mesh_cmd->parsed()) return cmd_mesh(cli);
        if (ops_cmd->parsed()) return cmd_operators(cli, dump_matrices);
        if (sim_cmd->parsed()) return cmd_simulate(cli);
        if (modes_cmd->parsed()) return cmd_modes(cli, k_modes);
        if (verify_cmd->parsed()) return cmd_verify(cli, flip_coupling);
    } catch (const floatbeam::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const floatbeam::GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return 2;
    } catch (const floatbeam::MeshError& e) {
        std::cerr << "mesh error: " << e.what() << "\n";
        return 2;
    } catch (const floatbeam::StabilityError& e) {
        std::cerr << "stability error: " << e.what() << "\n";
        return 2;
    } catch (const floatbeam::CompatibilityError& e) {
        std::cerr << "compatibility error: " << e.what() << "\n";
        return 2;
    } catch (const floatbeam::DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return 2;
    } catch (const floatbeam::Error& e) {
        // SolveError, NaNError, ConvergenceError, AssemblyError
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
