#pragma once

#include "boyforge/complex.hpp"

namespace boyforge {

// Pure abstract-surface analysis. All operations treat the abstract
// 2-complex only; geometry is irrelevant here.

struct ClosednessReport {
  bool closed;
  std::vector<std::pair<int, int>> bad_edges;   // edges with face count != 2
  std::vector<int> bad_vertices;                // vertices whose link is not one cycle
};

ClosednessReport is_closed_surface(const ImmersedComplex& c);

long long euler_characteristic(const ImmersedComplex& c);

bool is_connected(const ImmersedComplex& c);

// Edge counts must be <= 2. Propagates face orientations across interior
// edges; true iff no conflict arises from any starting face.
bool orientable(const ImmersedComplex& c);

struct BoundaryReport {
  size_t count;
  std::vector<std::vector<int>> cycles;  // vertex cycles
  bool well_formed;                      // boundary is a disjoint union of cycles
};
BoundaryReport boundary_components(const ImmersedComplex& c);

struct HomologyProfile {
  int b0, b1, b2;                    // mod-2 betti numbers
  int h0_rank, h1_rank, h2_rank;     // integral ranks
  std::vector<Int> h1_torsion;       // torsion coefficients of H1 (ascending, divisibility chain)
  std::vector<Int> h0_torsion;       // always empty, kept for uniform reporting
};

HomologyProfile homology(const ImmersedComplex& c);

struct SurfaceClass {
  bool orientable;
  int genus;              // orientable genus, or cross-cap count
  int boundary_circles;
  long long euler() const {
    return orientable ? 2 - 2 * static_cast<long long>(genus) - boundary_circles
                      : 2 - static_cast<long long>(genus) - boundary_circles;
  }
  std::string name() const;
  bool operator==(const SurfaceClass&) const = default;
};

struct ClassifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Classification by orientability, Euler characteristic and boundary count.
// Requires a connected complex in which every vertex link is a cycle or a
// single arc (a surface, possibly with boundary).
SurfaceClass classify(const ImmersedComplex& c);

// Splits face `face` along the axis-parallel chord between two of its
// boundary points (which must lie on the face's boundary cycle; new
// vertices are introduced if needed). Used by subdivision-invariance
// tests and by the resolution machinery.
ImmersedComplex subdivide_face(const ImmersedComplex& c, int face, const Vec3& p, const Vec3& q);

}  // namespace boyforge
