#pragma once

#include "boyforge/complex.hpp"

namespace boyforge {

struct DegenerateIntersection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The self-intersection stratification of the realization map.
struct DoubleLocus {
  struct RawSegment {
    int face_a, face_b;  // face_a < face_b
    Vec3 p, q;           // p <= q lexicographically; p == q is a point contact
    bool operator==(const RawSegment&) const = default;
  };
  struct Arc {
    std::vector<Vec3> points;  // polyline vertices; first == last for loops
    bool loop;
    Rat squared_length() const;
  };
  struct TriplePoint {
    Vec3 p;
    std::vector<int> faces;  // sorted, >= 3 pairwise-crossing sheets
    bool operator==(const TriplePoint&) const = default;
  };

  std::vector<RawSegment> segments;  // canonical order
  // Maximal straight double segments after exact collinear merging.
  std::vector<std::pair<Vec3, Vec3>> merged_segments;
  std::vector<Arc> arcs;
  std::vector<TriplePoint> triple_points;
};

// Exact intersection of every unordered pair of faces that share no
// abstract vertex. Output is canonically ordered regardless of the
// computation schedule; BOYFORGE_THREADS caps worker-thread count.
// Throws DegenerateIntersection when two distinct faces share 2D area.
DoubleLocus self_intersections(const ImmersedComplex& c);

struct ImmersionDefect {
  enum class Kind { PinchedVertex, OverlappingAdjacentFaces, EdgeCreaseDegenerate };
  Kind kind;
  int element;  // vertex index (or edge head for crease defects)
  Vec3 where;
  std::string detail;
};

std::string defect_kind_name(ImmersionDefect::Kind k);

// Empty result iff the realization map is locally injective at every
// point: no pinched vertex links, no overlapping star sectors, no zero
// dihedral creases, and no two star faces crossing away from their
// shared edges.
std::vector<ImmersionDefect> local_injectivity(const ImmersedComplex& c);

struct DoubleCurveProfile {
  size_t arc_count = 0;   // open arcs
  size_t loop_count = 0;  // closed loops
  std::vector<Rat> squared_segment_lengths;  // multiset over merged segments
  std::vector<std::vector<size_t>> triple_passes;  // [arc][triple point] counts
  bool sigma_equivariant = false;
  std::vector<Vec3> dangling_endpoints;  // arc ends neither on the boundary nor triple
};

DoubleCurveProfile double_curve_profile(const ImmersedComplex& c, const DoubleLocus& locus);

}  // namespace boyforge
