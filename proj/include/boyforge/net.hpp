#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boyforge/vec.hpp"

namespace boyforge {

// Errors raised by the text-format front end. Syntax errors carry the
// offending line/column; semantic errors describe a structurally valid
// but topologically or geometrically invalid input.
struct ParseError : std::runtime_error {
  enum class Kind { Syntax, Semantic };
  Kind kind;
  int line;
  int column;
  ParseError(Kind k, int ln, int col, const std::string& msg)
      : std::runtime_error((k == Kind::Syntax ? "syntax error" : "semantic error") +
                           std::string(" at line ") + std::to_string(ln) + ":" +
                           std::to_string(col) + ": " + msg),
        kind(k), line(ln), column(col) {}
};

enum class TagKind { Arrow, DoubleArrow, Star, Letter };

std::string tag_kind_name(TagKind k);
std::optional<TagKind> tag_kind_from_name(const std::string& s);

// A flat piece: rectilinear polygons in the plane with fold edges,
// anchor labels and boundary tags. Immutable after parsing.
struct Net {
  struct Fold {
    int a, b;    // vertex indices of the fold edge
    int angle;   // +90 or -90
  };
  struct EdgeTag {
    TagKind kind;
    std::string name;
    int a, b;  // oriented boundary edge
  };

  std::string name;
  std::vector<std::string> vertex_ids;  // position in vector = vertex index
  std::vector<Vec2> vertex_pos;
  std::vector<std::vector<int>> faces;  // CCW vertex cycles
  std::vector<Fold> folds;
  std::map<std::string, int> anchors;  // label -> vertex index
  std::vector<EdgeTag> edge_tags;

  int vertex_index(const std::string& id) const;  // -1 if absent

  // Edge -> incident face count, with edges keyed by sorted index pair.
  std::map<std::pair<int, int>, int> edge_face_count() const;
  bool is_boundary_edge(int a, int b) const;
};

// Anchor targets for the assembly, label -> position in 3-space.
struct AnchorTable {
  std::map<std::string, Vec3> targets;
};

// One assembly instruction sequence; see the file grammar in the README.
struct AssemblyPlan {
  struct Step {
    enum class Kind { UseBuiltinPieceIV, Place, GlueTag };
    Kind kind;
    // Place
    std::string net_name;
    std::string copy_name;
    std::vector<std::pair<std::string, std::string>> anchor_map;  // piece label -> table label
    // GlueTag
    std::string tag1, copy1, tag2, copy2;
  };
  std::string name;
  std::vector<Step> steps;
};

// Parses the line-oriented net format. Total over the grammar; throws
// ParseError with Kind::Syntax for malformed text and Kind::Semantic for
// inputs that violate a Net invariant.
Net parse_net(const std::string& text);

// Parses a file that may contain several `net` blocks.
std::vector<Net> parse_nets(const std::string& text);

// Round-trippable serialization: parse_net(serialize_net(n)) is
// isomorphic to n (same counts, incidence, folds, anchors and tags).
std::string serialize_net(const Net& net);

AssemblyPlan parse_assembly(const std::string& text);

// Canonical reconstruction of the two folded pieces plus the anchor
// table with the nine target coordinates, as shipped in data/boy.net.
struct BuiltinNets {
  Net piece_i;
  Net piece_ii;
  Net piece_iii;
  AnchorTable table;
};
BuiltinNets builtin_boy_nets();

// Full text of the shipped data files (also installed under data/).
const std::string& builtin_boy_net_text();
const std::string& builtin_boy_assembly_text();

AnchorTable boy_anchor_table();

}  // namespace boyforge
