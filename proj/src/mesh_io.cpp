#include "floatbeam/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "floatbeam/errors.hpp"

namespace floatbeam {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

BoundaryTag tag_from_name(const std::string& name) {
    if (name == "FreeSurface") return BoundaryTag::FreeSurface;
    if (name == "Wetted") return BoundaryTag::Wetted;
    if (name == "Seabed") return BoundaryTag::Seabed;
    if (name == "Wall") return BoundaryTag::Wall;
    throw MeshError("unknown boundary tag '" + name + "' in mesh file");
}

void expect(std::istream& is, const char* keyword) {
    std::string word;
    if (!(is >> word) || word != keyword)
        throw MeshError(std::string("mesh file: expected '") + keyword + "'");
}

}  // namespace

void write_mesh(std::ostream& os, const Mesh& mesh) {
    os << "floatbeam-mesh 1\n";
    os << "target_size " << fmt17(mesh.target_size) << "\n";
    os << "nodes " << mesh.num_nodes() << "\n";
    for (const auto& p : mesh.nodes)
        os << fmt17(p[0]) << " " << fmt17(p[1]) << "\n";
    os << "triangles " << mesh.num_triangles() << "\n";
    for (const auto& t : mesh.triangles)
        os << t[0] << " " << t[1] << " " << t[2] << "\n";
    os << "edges " << mesh.boundary_edges.size() << "\n";
    for (const auto& e : mesh.boundary_edges)
        os << e.a << " " << e.b << " " << boundary_tag_name(e.tag) << " "
           << e.opposite << "\n";
    os << "surface " << mesh.num_surface_nodes() << "\n";
    for (int id : mesh.surface_node_index) os << id << "\n";
}

void write_mesh_file(const std::string& path, const Mesh& mesh) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw MeshError("cannot open '" + path + "' for writing");
    write_mesh(os, mesh);
}

Mesh read_mesh(std::istream& is) {
    std::string magic;
    int version = 0;
    if (!(is >> magic >> version) || magic != "floatbeam-mesh" || version != 1)
        throw MeshError("not a floatbeam-mesh version 1 file");

    Mesh mesh;
    expect(is, "target_size");
    if (!(is >> mesh.target_size)) throw MeshError("mesh file: bad target_size");

    expect(is, "nodes");
    int n = 0;
    if (!(is >> n) || n < 0) throw MeshError("mesh file: bad node count");
    mesh.nodes.resize(n);
    for (auto& p : mesh.nodes)
        if (!(is >> p[0] >> p[1])) throw MeshError("mesh file: bad node line");

    expect(is, "triangles");
    int m = 0;
    if (!(is >> m) || m < 0) throw MeshError("mesh file: bad triangle count");
    mesh.triangles.resize(m);
    for (auto& t : mesh.triangles) {
        if (!(is >> t[0] >> t[1] >> t[2]))
            throw MeshError("mesh file: bad triangle line");
        for (int v : t)
            if (v < 0 || v >= n) throw MeshError("mesh file: triangle index out of range");
    }

    expect(is, "edges");
    int k = 0;
    if (!(is >> k) || k < 0) throw MeshError("mesh file: bad edge count");
    mesh.boundary_edges.resize(k);
    for (auto& e : mesh.boundary_edges) {
        std::string tag;
        if (!(is >> e.a >> e.b >> tag >> e.opposite))
            throw MeshError("mesh file: bad edge line");
        e.tag = tag_from_name(tag);
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n || e.opposite < 0 ||
            e.opposite >= n)
            throw MeshError("mesh file: edge index out of range");
    }

    expect(is, "surface");
    int s = 0;
    if (!(is >> s) || s < 0) throw MeshError("mesh file: bad surface count");
    mesh.surface_node_index.resize(s);
    for (int& id : mesh.surface_node_index) {
        if (!(is >> id)) throw MeshError("mesh file: bad surface line");
        if (id < 0 || id >= n) throw MeshError("mesh file: surface index out of range");
    }
    return mesh;
}

Mesh read_mesh_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw MeshError("cannot open mesh file '" + path + "'");
    return read_mesh(is);
}

}  // namespace floatbeam
