#pragma once

#include <string>

namespace floatbeam {

// Cross-section of the fluid tank with a rectangular hull floating at x = 0.
// The free surface lies on y = 0, the flat seabed on y = -depth_h, rigid walls
// on x = +-tank_halflength_Lx. The hull occupies |x| <= hull_halfbeam_a,
// -hull_draft_d <= y <= 0. All lengths in metres, per unit length out of plane.
//
// hull_halfbeam_a = hull_draft_d = 0 selects the degenerate no-hull tank whose
// free surface spans the whole top; it is used by the dispersion diagnostics.
struct FluidGeometry {
    double depth_h = 0.0;
    double tank_halflength_Lx = 0.0;
    double hull_halfbeam_a = 0.0;
    double hull_draft_d = 0.0;
    double y_G = 0.0;  // vertical coordinate of the platform mass centre
    double mesh_target_size = 0.0;

    bool has_hull() const { return hull_halfbeam_a > 0.0; }

    // Measure of the free surface (both sides of the hull, or full top).
    double free_surface_length() const {
        return 2.0 * (tank_halflength_Lx - hull_halfbeam_a);
    }
    // Hull bottom plus both vertical sides.
    double wetted_length() const {
        return 2.0 * hull_halfbeam_a + 2.0 * hull_draft_d;
    }
    double waterplane_width() const { return 2.0 * hull_halfbeam_a; }
    double submerged_area() const { return 2.0 * hull_halfbeam_a * hull_draft_d; }
};

// Validates the raw values and returns a FluidGeometry.
// Throws GeometryError naming the violated constraint.
FluidGeometry build_geometry(double depth_h, double tank_halflength_Lx,
                             double hull_halfbeam_a, double hull_draft_d,
                             double y_G, double mesh_target_size);

}  // namespace floatbeam
