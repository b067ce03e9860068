#include "floatbeam/laplace.hpp"

#include <cmath>

#include "floatbeam/errors.hpp"

namespace floatbeam {

LaplaceSystem::LaplaceSystem(Eigen::SparseMatrix<double> stiffness,
                             const Mesh& mesh, double solver_tol)
    : stiffness_(std::move(stiffness)), solver_tol_(solver_tol) {
    const int n = num_nodes();
    surface_ = mesh.surface_node_index;
    role_.assign(n, 0);
    for (std::size_t k = 0; k < surface_.size(); ++k)
        role_[surface_[k]] = -1 - static_cast<int>(k);
    interior_.reserve(n - surface_.size());
    for (int i = 0; i < n; ++i) {
        if (role_[i] >= 0) {
            role_[i] = static_cast<int>(interior_.size());
            interior_.push_back(i);
        }
    }

    const int ni = static_cast<int>(interior_.size());
    const int ns = static_cast<int>(surface_.size());
    std::vector<Eigen::Triplet<double>> tii, tis;
    for (int col = 0; col < stiffness_.outerSize(); ++col) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(stiffness_, col); it;
             ++it) {
            const int r = role_[it.row()];
            const int c = role_[it.col()];
            if (r >= 0 && c >= 0) tii.emplace_back(r, c, it.value());
            else if (r >= 0 && c < 0) tis.emplace_back(r, -1 - c, it.value());
        }
    }
    a_ii_.resize(ni, ni);
    a_ii_.setFromTriplets(tii.begin(), tii.end());
    a_is_.resize(ni, ns);
    a_is_.setFromTriplets(tis.begin(), tis.end());

    ldlt_ = std::make_shared<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>();
    ldlt_->compute(a_ii_);
    if (ldlt_->info() != Eigen::Success)
        throw SolveError("factorization of the interior Laplace block failed");
}

Eigen::VectorXd LaplaceSystem::solve_interior(
    const Eigen::VectorXd& rhs_interior) const {
    Eigen::VectorXd x = ldlt_->solve(rhs_interior);
    const double rhs_norm = rhs_interior.norm();
    if (rhs_norm == 0.0) return Eigen::VectorXd::Zero(rhs_interior.size());
    for (int iter = 0; iter < 3; ++iter) {
        Eigen::VectorXd r = rhs_interior - a_ii_ * x;
        if (r.norm() <= solver_tol_ * rhs_norm) break;
        x += ldlt_->solve(r);
    }
    return x;
}

Eigen::VectorXd LaplaceSystem::compose(
    const Eigen::VectorXd& interior_values,
    const Eigen::VectorXd& surface_values) const {
    Eigen::VectorXd full(num_nodes());
    for (std::size_t k = 0; k < interior_.size(); ++k)
        full[interior_[k]] = interior_values[static_cast<Eigen::Index>(k)];
    for (std::size_t k = 0; k < surface_.size(); ++k)
        full[surface_[k]] = surface_values[static_cast<Eigen::Index>(k)];
    return full;
}

Eigen::VectorXd LaplaceSystem::restrict_interior(
    const Eigen::VectorXd& full) const {
    Eigen::VectorXd out(interior_.size());
    for (std::size_t k = 0; k < interior_.size(); ++k)
        out[static_cast<Eigen::Index>(k)] = full[interior_[k]];
    return out;
}

Eigen::VectorXd LaplaceSystem::restrict_surface(
    const Eigen::VectorXd& full) const {
    Eigen::VectorXd out(surface_.size());
    for (std::size_t k = 0; k < surface_.size(); ++k)
        out[static_cast<Eigen::Index>(k)] = full[surface_[k]];
    return out;
}

Eigen::VectorXd LaplaceSystem::lift(
    const Eigen::VectorXd& surface_values) const {
    if (surface_values.size() != num_surface())
        throw DimensionError("lift: surface vector size mismatch");
    Eigen::VectorXd rhs = -(a_is_ * surface_values);
    Eigen::VectorXd xi = solve_interior(rhs);
    return compose(xi, surface_values);
}

LaplaceSystem assemble_laplace(const Mesh& mesh, double solver_tol) {
    const int n = mesh.num_nodes();
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(mesh.num_triangles()) * 9);

    const double area_floor =
        1e-12 * mesh.target_size * mesh.target_size;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        const auto& p0 = mesh.nodes[tri[0]];
        const auto& p1 = mesh.nodes[tri[1]];
        const auto& p2 = mesh.nodes[tri[2]];
        const double area = mesh.triangle_area(t);
        if (!(area > area_floor))
            throw AssemblyError("degenerate triangle " + std::to_string(t));
        // P1 gradients: grad(lambda_k) = perp(opposite edge) / (2 area).
        const double bx[3] = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
        const double by[3] = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};
        const double scale = 1.0 / (4.0 * area);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const double v = scale * (bx[i] * bx[j] + by[i] * by[j]);
                trips.emplace_back(tri[i], tri[j], v);
            }
        }
    }
    Eigen::SparseMatrix<double> a(n, n);
    a.setFromTriplets(trips.begin(), trips.end());
    return LaplaceSystem(std::move(a), mesh, solver_tol);
}

namespace {

// Weak Neumann loads int_e f psi over one straight boundary edge, with f
// linear along the edge (endpoint values fa, fb).
void add_edge_load(Eigen::VectorXd& load, int na, int nb, double len, double fa,
                   double fb) {
    load[na] += len * (2.0 * fa + fb) / 6.0;
    load[nb] += len * (fa + 2.0 * fb) / 6.0;
}

}  // namespace

KirchhoffSet solve_kirchhoff(const LaplaceSystem& sys, const Mesh& mesh,
                             const FluidGeometry& geom) {
    const int n = sys.num_nodes();
    const int ns = sys.num_surface();
    KirchhoffSet set;
    set.load = Eigen::MatrixXd::Zero(n, 3);
    set.phi = Eigen::MatrixXd::Zero(n, 3);
    set.surface_flux = Eigen::MatrixXd::Zero(ns, 3);

    Eigen::VectorXd load_surge = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd load_heave = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd load_pitch = Eigen::VectorXd::Zero(n);
    for (const auto& e : mesh.boundary_edges) {
        if (e.tag != BoundaryTag::Wetted) continue;
        const auto nrm = mesh.outward_normal(e);
        const double len = mesh.edge_length(e);
        const auto& pa = mesh.nodes[e.a];
        const auto& pb = mesh.nodes[e.b];
        // nu_3 = ((x,y) - r_G)^perp . n with r_G = (0, y_G) and
        // (u,v)^perp = (-v, u).
        const auto nu3 = [&](const std::array<double, 2>& p) {
            return -(p[1] - geom.y_G) * nrm[0] + p[0] * nrm[1];
        };
        add_edge_load(load_surge, e.a, e.b, len, nrm[0], nrm[0]);
        add_edge_load(load_heave, e.a, e.b, len, nrm[1], nrm[1]);
        add_edge_load(load_pitch, e.a, e.b, len, nu3(pa), nu3(pb));
    }
    set.load.col(0) = load_surge;
    set.load.col(1) = load_heave;
    set.load.col(2) = load_pitch;

    for (int i = 0; i < 3; ++i) {
        const Eigen::VectorXd rhs = sys.restrict_interior(set.load.col(i));
        const Eigen::VectorXd xi = sys.solve_interior(rhs);
        set.phi.col(i) = sys.compose(xi, Eigen::VectorXd::Zero(ns));
        set.surface_flux.col(i) =
            consistent_flux(sys, set.phi.col(i), set.load.col(i));
    }
    return set;
}

DtNOperator dtn_schur(const LaplaceSystem& sys, const Mesh& mesh) {
    const int ns = sys.num_surface();
    DtNOperator op;
    op.lambda_weak.resize(ns, ns);

    // Column j of the Schur complement is the surface residual of the lift
    // of the j-th surface basis vector.
    Eigen::VectorXd ej = Eigen::VectorXd::Zero(ns);
    for (int j = 0; j < ns; ++j) {
        ej[j] = 1.0;
        const Eigen::VectorXd lifted = sys.lift(ej);
        op.lambda_weak.col(j) =
            sys.restrict_surface(sys.stiffness() * lifted);
        ej[j] = 0.0;
    }
    // The two-sided product is symmetric only up to roundoff; make it exact.
    op.lambda_weak = 0.5 * (op.lambda_weak + op.lambda_weak.transpose()).eval();

    // Surface mass: 1D P1 mass over the free-surface edges, restricted to
    // the surface unknowns (rows at contact points are dropped).
    std::vector<int> pos(sys.num_nodes(), -1);
    const auto& surf = sys.dirichlet_set();
    for (std::size_t k = 0; k < surf.size(); ++k)
        pos[surf[k]] = static_cast<int>(k);
    std::vector<Eigen::Triplet<double>> trips;
    for (const auto& e : mesh.boundary_edges) {
        if (e.tag != BoundaryTag::FreeSurface) continue;
        const double len = mesh.edge_length(e);
        const int pa = pos[e.a];
        const int pb = pos[e.b];
        if (pa >= 0) trips.emplace_back(pa, pa, len / 3.0);
        if (pb >= 0) trips.emplace_back(pb, pb, len / 3.0);
        if (pa >= 0 && pb >= 0) {
            trips.emplace_back(pa, pb, len / 6.0);
            trips.emplace_back(pb, pa, len / 6.0);
        }
    }
    op.surface_mass.resize(ns, ns);
    op.surface_mass.setFromTriplets(trips.begin(), trips.end());
    return op;
}

Eigen::VectorXd consistent_flux(const LaplaceSystem& sys,
                                const Eigen::VectorXd& field,
                                const Eigen::VectorXd& load) {
    if (field.size() != sys.num_nodes() || load.size() != sys.num_nodes())
        throw DimensionError("consistent_flux: field size mismatch");
    const Eigen::VectorXd residual = sys.stiffness() * field - load;
    return sys.restrict_surface(residual);
}

Eigen::VectorXd consistent_flux(const LaplaceSystem& sys,
                                const Eigen::VectorXd& field) {
    return consistent_flux(sys, field, Eigen::VectorXd::Zero(sys.num_nodes()));
}

}  // namespace floatbeam
