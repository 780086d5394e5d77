#pragma once

#include "boyforge/folding.hpp"

namespace boyforge {

struct GlueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AssemblyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The glued assembly: an abstract 2-complex together with its geometric
// realization map. Edges bound one or two faces; each closed face embeds
// as a planar axis-parallel polygon; all coordinates are exact.
struct ImmersedComplex {
  struct Face {
    std::vector<int> cycle;   // abstract vertex indices, oriented
    std::string piece;        // provenance: copy name ("piece_iv", "flap_1", ...)
    int net_face;             // index of the originating face within its piece
  };
  struct Identification {
    Vec3 a, b;                // merged endpoints (equal by construction)
    std::string reason;       // "anchor", "auto", "tag arrow/...", ...
  };

  std::vector<Vec3> pos;
  std::vector<Face> faces;
  std::vector<Identification> log;
  std::vector<Piece::Tag3> tags;             // surviving boundary tags
  std::vector<std::string> tag_piece;        // owning copy per tag

  // Derived incidence, deterministic ordering.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces() const;
  std::vector<std::pair<int, int>> boundary_edges() const;

  int vertex_at(const Vec3& p) const;        // first vertex at position, -1 if none
  std::vector<int> vertices_at(const Vec3& p) const;
};

ImmersedComplex complex_from_piece(const Piece& piece, const std::string& copy_name);

// The triple-point core: three mutually perpendicular 2x2 squares, each
// subdivided into four unit faces along the coordinate axes. The three
// squares pass through one another; they are distinct sheets of the
// complex, so each keeps its own vertices along the axes.
Piece piece_iv();

// Quotient of the disjoint union identifying the listed coincident vertex
// pairs (acc index, piece index offset into the appended piece). Checks
// exact coincidence and the edge/face bounds.
ImmersedComplex glue(const ImmersedComplex& acc, const Piece& piece,
                     const std::string& copy_name,
                     const std::vector<std::pair<int, int>>& vertex_pairs);

struct NetLibrary {
  std::vector<Net> nets;
  AnchorTable table;
  const Net* find(const std::string& name) const;
};

// Executes a plan: fold -> solve placement -> apply motion -> glue, step
// by step. Coincident boundary edges between the new piece and the
// accumulated complex are taped automatically when the pairing is
// unambiguous; remaining coincidences must be named by `glue tag` steps.
ImmersedComplex assemble(const AssemblyPlan& plan, const NetLibrary& lib);

// True iff the cyclic coordinate map sigma(x,y,z) = (y,z,x) sends the
// geometric face set onto itself.
bool symmetry_check(const ImmersedComplex& c);

// Canonical invariant tuple used by the order-independence tests.
struct InvariantTuple {
  size_t vertices, edges, faces;
  long long euler;
  size_t boundary_components;
  std::vector<std::pair<std::string, size_t>> face_provenance;  // sorted multiset
  bool operator==(const InvariantTuple&) const = default;
};
InvariantTuple invariant_tuple(const ImmersedComplex& c);

}  // namespace boyforge
