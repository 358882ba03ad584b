#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spatch/continuity.hpp"
#include "spatch/spatch.hpp"

namespace spatch {

// User-facing patch description: corners and boundary tangents only.
// Twists are never part of a document; they are derived during
// construction, which is what makes every representable patch an S-Patch
// candidate.
struct PatchSpec {
  std::string id;
  PatchBoundary<double> boundary;
  ConstructionPolicy policy = ConstructionPolicy::Strict;
};

struct AdjacencySpec {
  std::string a, b;
  PatchEdge edge_a = PatchEdge::U0;
  PatchEdge edge_b = PatchEdge::U0;
  bool reversed = false;
};

inline constexpr int kDocumentVersion = 1;

struct PatchDocument {
  int version = kDocumentVersion;
  std::vector<PatchSpec> patches;
  std::vector<AdjacencySpec> adjacencies;
};

bool operator==(const PatchSpec&, const PatchSpec&);
bool operator==(const AdjacencySpec&, const AdjacencySpec&);
bool operator==(const PatchDocument&, const PatchDocument&);

enum class ParseMode {
  Strict,   // unknown fields are errors
  Lenient,  // unknown fields produce warnings
};

// Parses and validates a JSON document. Errors carry the JSON path / patch
// id they refer to. In lenient mode unknown fields are appended to
// *warnings instead of failing.
PatchDocument parse_document(std::string_view text,
                             ParseMode mode = ParseMode::Strict,
                             std::vector<std::string>* warnings = nullptr);

// Deterministic serialization; parse(serialize(d)) == d.
std::string serialize_document(const PatchDocument& doc);

// Constructs every patch under its declared policy and resolves adjacency
// ids. Patches keep document order.
PatchComplex build_complex(const PatchDocument& doc);

// The half-cube complex as a document (what `demo half-cube` emits).
PatchDocument half_cube_document();

}  // namespace spatch
