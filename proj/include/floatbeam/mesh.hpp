#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "floatbeam/geometry.hpp"

namespace floatbeam {

enum class BoundaryTag : std::uint8_t {
    FreeSurface = 0,  // y = 0, outside the hull footprint
    Wetted = 1,       // hull bottom and vertical hull sides
    Seabed = 2,       // y = -h
    Wall = 3,         // x = +-Lx
};

const char* boundary_tag_name(BoundaryTag tag);

struct BoundaryEdge {
    int a = -1;
    int b = -1;
    BoundaryTag tag = BoundaryTag::FreeSurface;
    int opposite = -1;  // third vertex of the unique adjacent triangle
};

// Tagged conforming triangulation of the fluid cross-section.
//
// The triangulation is a tensor grid split into triangles; diagonals mirror
// under x -> -x so the mesh is exactly symmetric, which the reflection
// properties of the radiation potentials rely on. Grid spacing halves near
// the hull corners (+-a, 0) and (+-a, -d).
//
// surface_node_index lists the nodes carrying free-surface unknowns, sorted
// by x. The hull contact points (+-a, 0) are assigned to the wetted surface
// and excluded; the wall-top corners (+-Lx, 0) are included (the walls carry
// a natural condition, so pinning the surface trace there would be wrong).
struct Mesh {
    std::vector<std::array<double, 2>> nodes;
    std::vector<std::array<int, 3>> triangles;  // positively oriented
    std::vector<BoundaryEdge> boundary_edges;
    std::vector<int> surface_node_index;

    double target_size = 0.0;

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }
    int num_surface_nodes() const { return static_cast<int>(surface_node_index.size()); }

    double triangle_area(int t) const;
    double edge_length(const BoundaryEdge& e) const;
    // Sum of edge lengths carrying the given tag.
    double tagged_length(BoundaryTag tag) const;
    // Unit normal of a boundary edge pointing out of the fluid.
    std::array<double, 2> outward_normal(const BoundaryEdge& e) const;
};

// Generates the tagged triangulation for a validated geometry.
// Throws MeshError if the construction leaves an untagged boundary edge or
// produces a degenerate triangle.
Mesh generate_mesh(const FluidGeometry& geom);

}  // namespace floatbeam
