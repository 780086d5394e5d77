#pragma once

#include <set>

#include "boyforge/immersion.hpp"
#include "boyforge/topology.hpp"

namespace boyforge {

struct SurgeryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sub-complex of the faces whose provenance is not listed. Identifications
// internal to the remainder survive; the boundary is recomputed.
ImmersedComplex remove_pieces(const ImmersedComplex& c, const std::set<std::string>& names);

// One pairing choice per double arc, in the canonical arc order of
// self_intersections. Each choice selects one of the two non-crossing
// re-pairings of the four local half-sheets; the original crossing
// pairing is never produced.
struct Resolution {
  std::vector<int> choices;  // 0 or 1 per arc
};

// Cuts both sheets along every double arc and re-pairs the half-sheets
// per the resolution. Requires a locus of disjoint transverse straight
// arcs with no triple points. The result has an empty double locus.
ImmersedComplex resolve(const ImmersedComplex& c, const Resolution& r);

// Exact face areas (doubled), as a sorted multiset; resolution preserves it.
std::vector<Rat> face_area_multiset(const ImmersedComplex& c);

struct MobiusReport {
  bool connected;
  bool orientable_surface;
  long long euler;
  size_t boundary_circles;
  SurfaceClass surface;
  HomologyProfile homology_profile;
  // the claim under test: connected, non-orientable, three boundary circles
  bool non_orientable_three_circles;
};

// Classification data of a resolved remainder, for comparison with the
// removed-pieces claim.
MobiusReport verify_mobius_claim(const ImmersedComplex& c_resolved);

}  // namespace boyforge
