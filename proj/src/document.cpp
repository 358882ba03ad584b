#include "spatch/document.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace spatch {

using json = nlohmann::ordered_json;

bool operator==(const PatchSpec& a, const PatchSpec& b) {
  return a.id == b.id && a.policy == b.policy &&
         a.boundary.corners == b.boundary.corners &&
         a.boundary.tangents_u == b.boundary.tangents_u &&
         a.boundary.tangents_v == b.boundary.tangents_v;
}

bool operator==(const AdjacencySpec& a, const AdjacencySpec& b) {
  return a.a == b.a && a.b == b.b && a.edge_a == b.edge_a &&
         a.edge_b == b.edge_b && a.reversed == b.reversed;
}

bool operator==(const PatchDocument& a, const PatchDocument& b) {
  return a.version == b.version && a.patches == b.patches &&
         a.adjacencies == b.adjacencies;
}

namespace {

PatchEdge edge_from_name(const std::string& name, const std::string& ctx) {
  if (name == "u0") return PatchEdge::U0;
  if (name == "u1") return PatchEdge::U1;
  if (name == "v0") return PatchEdge::V0;
  if (name == "v1") return PatchEdge::V1;
  throw ParseError("unknown edge \"" + name + "\" (expected u0/u1/v0/v1)", ctx);
}

Vec3 point_from_json(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError("expected a 3-element number array", ctx);
  for (const auto& v : j)
    if (!v.is_number()) throw ParseError("expected a number", ctx);
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::array<Vec3, 4> points4_from_json(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("expected exactly 4 points, got " +
                         (j.is_array() ? std::to_string(j.size()) : "non-array"),
                     ctx);
  std::array<Vec3, 4> out;
  for (int k = 0; k < 4; ++k)
    out[k] = point_from_json(j[k], ctx + "[" + std::to_string(k) + "]");
  return out;
}

void check_fields(const json& obj, const std::set<std::string>& known,
                  const std::string& ctx, ParseMode mode,
                  std::vector<std::string>* warnings) {
  for (const auto& [key, value] : obj.items()) {
    if (known.count(key)) continue;
    const std::string msg = "unknown field \"" + key + "\" in " + ctx;
    if (mode == ParseMode::Strict) throw ParseError(msg, ctx);
    if (warnings) warnings->push_back(msg);
  }
}

// Shortest round-trip decimal, as the JSON serializer produces it.
std::string number(double v) { return json(v).dump(); }

std::string point_text(const Vec3& p) {
  return "[" + number(p.x) + ", " + number(p.y) + ", " + number(p.z) + "]";
}

std::string points4_text(const std::array<Vec3, 4>& pts) {
  std::string out = "[";
  for (int k = 0; k < 4; ++k) out += (k ? ", " : "") + point_text(pts[k]);
  return out + "]";
}

}  // namespace

PatchDocument parse_document(std::string_view text, ParseMode mode,
                             std::vector<std::string>* warnings) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "document");
  }
  if (!root.is_object()) throw ParseError("document must be an object", "document");
  check_fields(root, {"version", "patches", "adjacencies"}, "document", mode,
               warnings);

  PatchDocument doc;
  if (!root.contains("version") || !root["version"].is_number_integer())
    throw ParseError("missing integer \"version\" field", "document");
  doc.version = root["version"].get<int>();
  if (doc.version != kDocumentVersion)
    throw ParseError("unsupported document version " +
                         std::to_string(doc.version) + " (expected " +
                         std::to_string(kDocumentVersion) + ")",
                     "version");

  if (!root.contains("patches") || !root["patches"].is_array())
    throw ParseError("missing \"patches\" array", "document");

  std::set<std::string> seen_ids;
  int index = 0;
  for (const json& jp : root["patches"]) {
    std::string ctx = "patches[" + std::to_string(index) + "]";
    if (!jp.is_object()) throw ParseError("patch must be an object", ctx);
    if (!jp.contains("id") || !jp["id"].is_string())
      throw ParseError("patch needs a string \"id\"", ctx);
    PatchSpec spec;
    spec.id = jp["id"].get<std::string>();
    ctx += " (id \"" + spec.id + "\")";
    if (!seen_ids.insert(spec.id).second)
      throw ParseError("duplicate patch id \"" + spec.id + "\"", ctx);
    check_fields(jp, {"id", "corners", "tangents_u", "tangents_v", "policy"},
                 ctx, mode, warnings);
    for (const char* field : {"corners", "tangents_u", "tangents_v"})
      if (!jp.contains(field))
        throw ParseError(std::string("missing \"") + field + "\"", ctx);
    spec.boundary.corners = points4_from_json(jp["corners"], ctx + ".corners");
    spec.boundary.tangents_u =
        points4_from_json(jp["tangents_u"], ctx + ".tangents_u");
    spec.boundary.tangents_v =
        points4_from_json(jp["tangents_v"], ctx + ".tangents_v");
    if (jp.contains("policy")) {
      const std::string policy = jp["policy"].get<std::string>();
      if (policy == "strict")
        spec.policy = ConstructionPolicy::Strict;
      else if (policy == "project")
        spec.policy = ConstructionPolicy::Project;
      else
        throw ParseError("unknown policy \"" + policy +
                             "\" (expected strict/project)",
                         ctx);
    }
    doc.patches.push_back(std::move(spec));
    ++index;
  }

  if (root.contains("adjacencies")) {
    if (!root["adjacencies"].is_array())
      throw ParseError("\"adjacencies\" must be an array", "document");
    index = 0;
    for (const json& ja : root["adjacencies"]) {
      const std::string ctx = "adjacencies[" + std::to_string(index) + "]";
      if (!ja.is_object()) throw ParseError("adjacency must be an object", ctx);
      check_fields(ja, {"a", "edge_a", "b", "edge_b", "orientation"}, ctx, mode,
                   warnings);
      for (const char* field : {"a", "edge_a", "b", "edge_b"})
        if (!ja.contains(field) || !ja[field].is_string())
          throw ParseError(std::string("missing string \"") + field + "\"", ctx);
      AdjacencySpec adj;
      adj.a = ja["a"].get<std::string>();
      adj.b = ja["b"].get<std::string>();
      adj.edge_a = edge_from_name(ja["edge_a"].get<std::string>(), ctx);
      adj.edge_b = edge_from_name(ja["edge_b"].get<std::string>(), ctx);
      if (ja.contains("orientation")) {
        const std::string o = ja["orientation"].get<std::string>();
        if (o == "same")
          adj.reversed = false;
        else if (o == "reversed")
          adj.reversed = true;
        else
          throw ParseError("unknown orientation \"" + o +
                               "\" (expected same/reversed)",
                           ctx);
      }
      for (const std::string& ref : {adj.a, adj.b})
        if (!seen_ids.count(ref))
          throw ParseError("adjacency references unknown patch \"" + ref + "\"",
                           ctx);
      doc.adjacencies.push_back(std::move(adj));
      ++index;
    }
  }
  return doc;
}

std::string serialize_document(const PatchDocument& doc) {
  // Hand-formatted so each point stays on one line; numbers are the JSON
  // serializer's shortest round-trip form.
  std::string out = "{\n  \"version\": " + std::to_string(doc.version) +
                    ",\n  \"patches\": [";
  for (size_t i = 0; i < doc.patches.size(); ++i) {
    const PatchSpec& spec = doc.patches[i];
    out += i ? ",\n    {" : "\n    {";
    out += "\n      \"id\": " + json(spec.id).dump() + ",";
    out += "\n      \"corners\": " + points4_text(spec.boundary.corners) + ",";
    out += "\n      \"tangents_u\": " + points4_text(spec.boundary.tangents_u) +
           ",";
    out += "\n      \"tangents_v\": " + points4_text(spec.boundary.tangents_v) +
           ",";
    out += std::string("\n      \"policy\": ") +
           (spec.policy == ConstructionPolicy::Strict ? "\"strict\""
                                                      : "\"project\"");
    out += "\n    }";
  }
  out += doc.patches.empty() ? "]" : "\n  ]";
  if (!doc.adjacencies.empty()) {
    out += ",\n  \"adjacencies\": [";
    for (size_t i = 0; i < doc.adjacencies.size(); ++i) {
      const AdjacencySpec& adj = doc.adjacencies[i];
      out += i ? ",\n    {" : "\n    {";
      out += "\"a\": " + json(adj.a).dump() + ", \"edge_a\": \"" +
             edge_name(adj.edge_a) + "\", \"b\": " + json(adj.b).dump() +
             ", \"edge_b\": \"" + edge_name(adj.edge_b) +
             "\", \"orientation\": \"" + (adj.reversed ? "reversed" : "same") +
             "\"}";
    }
    out += "\n  ]";
  }
  out += "\n}\n";
  return out;
}

PatchComplex build_complex(const PatchDocument& doc) {
  PatchComplex complex;
  std::map<std::string, int> index_of;
  for (const PatchSpec& spec : doc.patches) {
    index_of[spec.id] = static_cast<int>(complex.patches.size());
    complex.patches.push_back(construct_spatch(spec.boundary, spec.policy));
    complex.ids.push_back(spec.id);
  }
  for (const AdjacencySpec& adj : doc.adjacencies)
    complex.adjacencies.push_back({index_of.at(adj.a), adj.edge_a,
                                   index_of.at(adj.b), adj.edge_b,
                                   adj.reversed});
  return complex;
}

PatchDocument half_cube_document() {
  const PatchComplex complex = half_cube_demo();
  PatchDocument doc;
  auto face_spec = [](std::string id, Vec3 origin, Vec3 u_dir, Vec3 v_dir) {
    PatchSpec spec;
    spec.id = std::move(id);
    for (int k = 0; k < 4; ++k) {
      const double cu = k >= 2 ? 1.0 : 0.0;
      const double cv = k % 2 ? 1.0 : 0.0;
      spec.boundary.corners[k] = origin + cu * u_dir + cv * v_dir;
      spec.boundary.tangents_u[k] = u_dir;
      spec.boundary.tangents_v[k] = v_dir;
    }
    spec.policy = ConstructionPolicy::Strict;
    return spec;
  };
  doc.patches.push_back(face_spec("bottom", {0, 0, 0}, {1, 0, 0}, {0, 1, 0}));
  doc.patches.push_back(face_spec("side_x", {0, 0, 0}, {0, 1, 0}, {0, 0, 1}));
  doc.patches.push_back(face_spec("side_y", {0, 0, 0}, {1, 0, 0}, {0, 0, 1}));
  for (const Adjacency& adj : complex.adjacencies)
    doc.adjacencies.push_back({complex.ids[adj.a], complex.ids[adj.b],
                               adj.edge_a, adj.edge_b, adj.reversed});
  return doc;
}

}  // namespace spatch
