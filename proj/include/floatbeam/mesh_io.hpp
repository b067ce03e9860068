#pragma once

#include <iosfwd>
#include <string>

#include "floatbeam/mesh.hpp"

namespace floatbeam {

// Plain-text mesh format:
//
//   floatbeam-mesh 1
//   target_size <s>
//   nodes <N>
//   <x> <y>                      one line per node, ids implicit 0..N-1
//   triangles <M>
//   <a> <b> <c>
//   edges <K>
//   <a> <b> <tag> <opposite>     tag is the BoundaryTag name
//   surface <S>
//   <node id>                    one per line, sorted by x
//
// Floats are written with 17 significant digits so write/read round-trips
// bit-exactly.
void write_mesh(std::ostream& os, const Mesh& mesh);
void write_mesh_file(const std::string& path, const Mesh& mesh);

Mesh read_mesh(std::istream& is);
Mesh read_mesh_file(const std::string& path);

}  // namespace floatbeam
