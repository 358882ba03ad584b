#include <doctest.h>

#include <sstream>

#include "spatch/mesh_io.hpp"
#include "test_helpers.hpp"

using namespace spatch;
using namespace spatch::testing;

namespace {

struct ParsedObj {
  int vertices = 0, normals = 0, faces = 0;
  std::vector<std::array<int, 3>> face_indices;
};

// Minimal generic OBJ reader: line-oriented v/vn/f records.
ParsedObj read_obj(const std::string& text) {
  ParsedObj out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") ++out.vertices;
    if (tag == "vn") ++out.normals;
    if (tag == "f") {
      ++out.faces;
      std::array<int, 3> idx{};
      for (int k = 0; k < 3; ++k) {
        std::string ref;
        ls >> ref;
        idx[k] = std::stoi(ref.substr(0, ref.find('/')));
      }
      out.face_indices.push_back(idx);
    }
  }
  return out;
}

TriangleMesh unit_flat_mesh(int cells) {
  return tessellate(
      construct_spatch(flat_z0_boundary(), ConstructionPolicy::Strict).patch,
      cells, TessellationPattern::DiagMain);
}

}  // namespace

TEST_SUITE("mesh_io") {

TEST_CASE("format from extension") {
  CHECK(format_from_path("mesh.obj") == MeshFormat::Obj);
  CHECK(format_from_path("a/b/MESH.OBJ") == MeshFormat::Obj);
  CHECK(format_from_path("out.ply") == MeshFormat::Ply);
  CHECK_THROWS_AS(format_from_path("mesh.stl"), Error);
  CHECK_THROWS_AS(format_from_path("noext"), Error);
}

TEST_CASE("one-cell OBJ line counts") {
  const TriangleMesh mesh = unit_flat_mesh(1);
  std::ostringstream out;
  export_obj(mesh, out);
  const ParsedObj parsed = read_obj(out.str());
  CHECK(parsed.vertices == 4);
  CHECK(parsed.normals == 4);
  CHECK(parsed.faces == 2);
}

TEST_CASE("OBJ round-trip preserves counts and 1-based indices") {
  const TriangleMesh mesh = unit_flat_mesh(4);
  std::ostringstream out;
  export_obj(mesh, out);
  const ParsedObj parsed = read_obj(out.str());
  CHECK(parsed.vertices == static_cast<int>(mesh.vertices.size()));
  CHECK(parsed.normals == static_cast<int>(mesh.normals.size()));
  CHECK(parsed.faces == static_cast<int>(mesh.triangles.size()));
  for (const auto& f : parsed.face_indices)
    for (int k = 0; k < 3; ++k) {
      CHECK(f[k] >= 1);
      CHECK(f[k] <= parsed.vertices);
    }
}

TEST_CASE("exports are byte-deterministic") {
  std::mt19937 g(139);
  const auto sp =
      construct_spatch(random_boundary(g), ConstructionPolicy::Project);
  const TriangleMesh mesh =
      tessellate(sp.patch, 5, TessellationPattern::Alternating);
  std::ostringstream a, b;
  export_obj(mesh, a);
  export_obj(mesh, b);
  CHECK(a.str() == b.str());
  std::ostringstream pa, pb;
  export_ply(mesh, pa);
  export_ply(mesh, pb);
  CHECK(pa.str() == pb.str());
}

TEST_CASE("OBJ vertex text parses back to the same doubles") {
  std::mt19937 g(149);
  const auto sp =
      construct_spatch(random_boundary(g), ConstructionPolicy::Project);
  const TriangleMesh mesh = tessellate(sp.patch, 3, TessellationPattern::DiagMain);
  std::ostringstream out;
  export_obj(mesh, out);
  std::istringstream in(out.str());
  std::string tag;
  size_t i = 0;
  double x, y, z;
  while (in >> tag) {
    if (tag != "v") break;
    in >> x >> y >> z;
    REQUIRE(i < mesh.vertices.size());
    CHECK(x == mesh.vertices[i].x);
    CHECK(y == mesh.vertices[i].y);
    CHECK(z == mesh.vertices[i].z);
    ++i;
  }
  CHECK(i == mesh.vertices.size());
}

TEST_CASE("PLY header and body counts") {
  const TriangleMesh mesh = unit_flat_mesh(2);
  std::ostringstream out;
  export_ply(mesh, out);
  const std::string text = out.str();
  CHECK(text.find("element vertex 9") != std::string::npos);
  CHECK(text.find("element face 8") != std::string::npos);
  CHECK(text.rfind("ply\nformat ascii 1.0\n", 0) == 0);

  // Count body lines after the header.
  const size_t header_end = text.find("end_header\n") + 11;
  int lines = 0;
  for (size_t pos = header_end; pos < text.size(); ++pos)
    if (text[pos] == '\n') ++lines;
  CHECK(lines == 9 + 8);
}

}  // TEST_SUITE
