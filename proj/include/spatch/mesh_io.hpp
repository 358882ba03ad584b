#pragma once

#include <iosfwd>
#include <string>

#include "spatch/tessellation.hpp"

namespace spatch {

enum class MeshFormat { Obj, Ply };

// Picks the format from a file extension (.obj / .ply, case-insensitive).
MeshFormat format_from_path(const std::string& path);

// Wavefront OBJ: one v and one vn record per vertex in index order, faces
// as 1-based f i//i j//j k//k. Numbers use 17 significant digits, so the
// output is byte-deterministic and parses back to the same doubles.
void export_obj(const TriangleMesh& mesh, std::ostream& out);

// ASCII PLY with double vertex/normal properties and int index lists.
void export_ply(const TriangleMesh& mesh, std::ostream& out);

void export_mesh(const TriangleMesh& mesh, MeshFormat format,
                 std::ostream& out);

}  // namespace spatch
