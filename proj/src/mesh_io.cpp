#include "spatch/mesh_io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "spatch/errors.hpp"

namespace spatch {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("mesh export: write failure");
}

}  // namespace

MeshFormat format_from_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == "obj") return MeshFormat::Obj;
  if (ext == "ply") return MeshFormat::Ply;
  throw Error("unsupported mesh extension \"" + ext + "\" (use .obj or .ply)");
}

void export_obj(const TriangleMesh& mesh, std::ostream& out) {
  for (const Vec3& v : mesh.vertices)
    out << "v " << fmt17(v.x) << ' ' << fmt17(v.y) << ' ' << fmt17(v.z) << '\n';
  for (const Vec3& n : mesh.normals)
    out << "vn " << fmt17(n.x) << ' ' << fmt17(n.y) << ' ' << fmt17(n.z)
        << '\n';
  for (const auto& t : mesh.triangles) {
    out << 'f';
    for (int k = 0; k < 3; ++k) out << ' ' << t[k] + 1 << "//" << t[k] + 1;
    out << '\n';
  }
  check_stream(out);
}

void export_ply(const TriangleMesh& mesh, std::ostream& out) {
  out << "ply\n"
         "format ascii 1.0\n"
         "element vertex "
      << mesh.vertices.size()
      << "\n"
         "property double x\n"
         "property double y\n"
         "property double z\n"
         "property double nx\n"
         "property double ny\n"
         "property double nz\n"
         "element face "
      << mesh.triangles.size()
      << "\n"
         "property list uchar int vertex_indices\n"
         "end_header\n";
  for (size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Vec3& v = mesh.vertices[i];
    const Vec3& n = mesh.normals[i];
    out << fmt17(v.x) << ' ' << fmt17(v.y) << ' ' << fmt17(v.z) << ' '
        << fmt17(n.x) << ' ' << fmt17(n.y) << ' ' << fmt17(n.z) << '\n';
  }
  for (const auto& t : mesh.triangles)
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  check_stream(out);
}

void export_mesh(const TriangleMesh& mesh, MeshFormat format,
                 std::ostream& out) {
  if (format == MeshFormat::Obj)
    export_obj(mesh, out);
  else
    export_ply(mesh, out);
}

}  // namespace spatch
