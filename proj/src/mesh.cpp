#include "floatbeam/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "floatbeam/errors.hpp"

namespace floatbeam {

namespace {

// Subdivides [x0, x1] so every piece is at most `coarse` long, and at most
// `coarse`/2 long within 1.5*coarse of a refined endpoint. Deterministic
// bisection; returns interior + boundary points in ascending order.
std::vector<double> subdivide(double x0, double x1, double coarse,
                              bool refine_left, bool refine_right) {
    std::vector<double> pts = {x0, x1};
    const double band = 1.5 * coarse;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<double> next;
        next.push_back(pts.front());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double a = pts[i];
            const double b = pts[i + 1];
            const double mid = 0.5 * (a + b);
            double local = coarse;
            if ((refine_left && mid - x0 <= band) ||
                (refine_right && x1 - mid <= band))
                local = 0.5 * coarse;
            if (b - a > local * (1.0 + 1e-12)) {
                next.push_back(mid);
                changed = true;
            }
            next.push_back(b);
        }
        pts.swap(next);
    }
    return pts;
}

void append_interior(std::vector<double>& dst, const std::vector<double>& seg) {
    // seg includes both endpoints; dst already holds seg.front().
    for (std::size_t i = 1; i < seg.size(); ++i) dst.push_back(seg[i]);
}

struct GridLines {
    std::vector<double> xs;
    std::vector<double> ys;
};

GridLines build_grid_lines(const FluidGeometry& g) {
    const double s = g.mesh_target_size;
    const double a = g.hull_halfbeam_a;
    const double Lx = g.tank_halflength_Lx;
    const double d = g.hull_draft_d;
    const double h = g.depth_h;

    // x lines: build the non-negative half, then mirror, so x -> -x maps the
    // grid onto itself exactly.
    std::vector<double> xpos = {0.0};
    if (g.has_hull()) {
        append_interior(xpos, subdivide(0.0, a, s, false, true));
        append_interior(xpos, subdivide(a, Lx, s, true, false));
    } else {
        append_interior(xpos, subdivide(0.0, Lx, s, false, false));
    }
    std::vector<double> xs;
    for (auto it = xpos.rbegin(); it != xpos.rend(); ++it)
        if (*it > 0.0) xs.push_back(-*it);
    for (double x : xpos) xs.push_back(x);

    std::vector<double> ys = {-h};
    if (g.has_hull()) {
        append_interior(ys, subdivide(-h, -d, s, false, true));
        append_interior(ys, subdivide(-d, 0.0, s, true, true));
    } else {
        append_interior(ys, subdivide(-h, 0.0, s, false, false));
    }
    return {std::move(xs), std::move(ys)};
}

}  // namespace

const char* boundary_tag_name(BoundaryTag tag) {
    switch (tag) {
        case BoundaryTag::FreeSurface: return "FreeSurface";
        case BoundaryTag::Wetted: return "Wetted";
        case BoundaryTag::Seabed: return "Seabed";
        case BoundaryTag::Wall: return "Wall";
    }
    return "?";
}

double Mesh::triangle_area(int t) const {
    const auto& tri = triangles[t];
    const auto& p0 = nodes[tri[0]];
    const auto& p1 = nodes[tri[1]];
    const auto& p2 = nodes[tri[2]];
    return 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) -
                  (p2[0] - p0[0]) * (p1[1] - p0[1]));
}

double Mesh::edge_length(const BoundaryEdge& e) const {
    const auto& pa = nodes[e.a];
    const auto& pb = nodes[e.b];
    return std::hypot(pb[0] - pa[0], pb[1] - pa[1]);
}

double Mesh::tagged_length(BoundaryTag tag) const {
    double len = 0.0;
    for (const auto& e : boundary_edges)
        if (e.tag == tag) len += edge_length(e);
    return len;
}

std::array<double, 2> Mesh::outward_normal(const BoundaryEdge& e) const {
    const auto& pa = nodes[e.a];
    const auto& pb = nodes[e.b];
    const double dx = pb[0] - pa[0];
    const double dy = pb[1] - pa[1];
    const double len = std::hypot(dx, dy);
    std::array<double, 2> n = {dy / len, -dx / len};
    // Flip if it points toward the interior vertex of the adjacent triangle.
    const auto& po = nodes[e.opposite];
    const double side = (po[0] - pa[0]) * n[0] + (po[1] - pa[1]) * n[1];
    if (side > 0.0) {
        n[0] = -n[0];
        n[1] = -n[1];
    }
    return n;
}

Mesh generate_mesh(const FluidGeometry& geom) {
    const GridLines grid = build_grid_lines(geom);
    const int nx = static_cast<int>(grid.xs.size());
    const int ny = static_cast<int>(grid.ys.size());
    const double a = geom.hull_halfbeam_a;
    const double d = geom.hull_draft_d;
    const double h = geom.depth_h;
    const double Lx = geom.tank_halflength_Lx;
    const double tol = 1e-9 * std::max(Lx, h);

    const auto inside_hull = [&](double x, double y) {
        return geom.has_hull() && std::abs(x) < a - tol && y > -d + tol;
    };

    Mesh mesh;
    mesh.target_size = geom.mesh_target_size;

    // Grid nodes, skipping the hull interior.
    std::vector<int> node_id(static_cast<std::size_t>(nx) * ny, -1);
    const auto gidx = [nx](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double x = grid.xs[i];
            const double y = grid.ys[j];
            if (inside_hull(x, y)) continue;
            node_id[gidx(i, j)] = mesh.num_nodes();
            mesh.nodes.push_back({x, y});
        }
    }

    // Quads split into two triangles; the diagonal mirrors with the cell.
    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            const double xc = 0.5 * (grid.xs[i] + grid.xs[i + 1]);
            const double yc = 0.5 * (grid.ys[j] + grid.ys[j + 1]);
            if (inside_hull(xc, yc)) continue;
            const int sw = node_id[gidx(i, j)];
            const int se = node_id[gidx(i + 1, j)];
            const int ne = node_id[gidx(i + 1, j + 1)];
            const int nw = node_id[gidx(i, j + 1)];
            if (sw < 0 || se < 0 || ne < 0 || nw < 0)
                throw MeshError("grid cell references a removed node");
            if (xc > 0.0) {
                mesh.triangles.push_back({sw, se, ne});
                mesh.triangles.push_back({sw, ne, nw});
            } else {
                mesh.triangles.push_back({sw, se, nw});
                mesh.triangles.push_back({se, ne, nw});
            }
        }
    }

    for (int t = 0; t < mesh.num_triangles(); ++t) {
        if (mesh.triangle_area(t) <=
            1e-12 * geom.mesh_target_size * geom.mesh_target_size)
            throw MeshError("degenerate triangle in generated mesh");
    }

    // Boundary edges are those appearing in exactly one triangle.
    std::map<std::pair<int, int>, std::pair<int, int>> edge_use;  // edge -> (count, opposite)
    for (const auto& tri : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            int u = tri[k];
            int v = tri[(k + 1) % 3];
            int w = tri[(k + 2) % 3];
            if (u > v) std::swap(u, v);
            auto [it, fresh] = edge_use.try_emplace({u, v}, 0, w);
            it->second.first += 1;
            if (!fresh) it->second.second = -1;
        }
    }

    const auto classify = [&](double x0, double y0, double x1,
                              double y1) -> BoundaryTag {
        const double xm = 0.5 * (x0 + x1);
        const double ym = 0.5 * (y0 + y1);
        if (std::abs(ym + h) < tol) return BoundaryTag::Seabed;
        if (std::abs(std::abs(xm) - Lx) < tol) return BoundaryTag::Wall;
        if (std::abs(ym) < tol) {
            if (geom.has_hull() && std::abs(xm) < a - tol)
                throw MeshError("boundary edge on the hull waterplane");
            return BoundaryTag::FreeSurface;
        }
        if (geom.has_hull()) {
            const bool on_bottom = std::abs(ym + d) < tol && std::abs(xm) < a + tol;
            const bool on_side =
                std::abs(std::abs(xm) - a) < tol && ym > -d - tol && ym < tol;
            if (on_bottom || on_side) return BoundaryTag::Wetted;
        }
        throw MeshError("untagged boundary edge");
    };

    for (const auto& [edge, use] : edge_use) {
        if (use.first != 1) continue;
        const auto& pa = mesh.nodes[edge.first];
        const auto& pb = mesh.nodes[edge.second];
        BoundaryEdge be;
        be.a = edge.first;
        be.b = edge.second;
        be.opposite = use.second;
        be.tag = classify(pa[0], pa[1], pb[0], pb[1]);
        mesh.boundary_edges.push_back(be);
    }

    // Free-surface unknowns: nodes on y = 0 excluding the hull contact
    // points, which belong to the wetted surface.
    for (int n = 0; n < mesh.num_nodes(); ++n) {
        const double x = mesh.nodes[n][0];
        const double y = mesh.nodes[n][1];
        if (std::abs(y) > tol) continue;
        if (geom.has_hull() && std::abs(x) < a + tol) continue;
        mesh.surface_node_index.push_back(n);
    }
    std::sort(mesh.surface_node_index.begin(), mesh.surface_node_index.end(),
              [&](int p, int q) { return mesh.nodes[p][0] < mesh.nodes[q][0]; });
    if (mesh.surface_node_index.empty())
        throw MeshError("mesh has no free-surface nodes");

    return mesh;
}

}  // namespace floatbeam
