#include "floatbeam/geometry.hpp"

#include "floatbeam/errors.hpp"

namespace floatbeam {

FluidGeometry build_geometry(double depth_h, double tank_halflength_Lx,
                             double hull_halfbeam_a, double hull_draft_d,
                             double y_G, double mesh_target_size) {
    if (!(depth_h > 0.0))
        throw GeometryError("depth must be positive");
    if (!(tank_halflength_Lx > 0.0))
        throw GeometryError("tank half-length must be positive");
    if (!(mesh_target_size > 0.0))
        throw GeometryError("mesh target size must be positive");
    if (hull_halfbeam_a < 0.0)
        throw GeometryError("hull half-beam must be non-negative");
    if (hull_draft_d < 0.0)
        throw GeometryError("hull draft must be non-negative");

    const bool no_hull = (hull_halfbeam_a == 0.0 && hull_draft_d == 0.0);
    if (!no_hull) {
        // A floating hull must pierce the surface and stay strictly inside
        // the tank and strictly above the seabed.
        if (hull_halfbeam_a == 0.0 || hull_draft_d == 0.0)
            throw GeometryError(
                "hull needs positive half-beam and draft (or both zero for the "
                "no-hull tank)");
        if (hull_draft_d >= depth_h)
            throw GeometryError("draft exceeds depth");
        if (hull_halfbeam_a >= tank_halflength_Lx)
            throw GeometryError("hull touches wall");
    }

    FluidGeometry g;
    g.depth_h = depth_h;
    g.tank_halflength_Lx = tank_halflength_Lx;
    g.hull_halfbeam_a = hull_halfbeam_a;
    g.hull_draft_d = hull_draft_d;
    g.y_G = y_G;
    g.mesh_target_size = mesh_target_size;
    return g;
}

}  // namespace floatbeam
