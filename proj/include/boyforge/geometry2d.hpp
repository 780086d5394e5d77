#pragma once

#include <vector>

#include "boyforge/vec.hpp"

namespace boyforge {

// Exact predicates and kernels for rectilinear (axis-parallel) polygons
// with rational coordinates. No tolerances anywhere.

Rat signed_area2(const std::vector<Vec2>& pts);

// True if two closed axis-parallel segments meet in a configuration other
// than: disjoint, a single shared endpoint, or exact coincidence.
bool segments_conflict_public(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// Parity test for a point that avoids every grid line of the polygon.
bool strictly_inside(const Vec2& p, const std::vector<Vec2>& poly);

// True if the interiors of two rectilinear simple polygons share area,
// assuming their boundaries only meet at endpoints or along exactly
// coincident segments (checked separately).
bool coplanar_interior_overlap(const std::vector<Vec2>& p, const std::vector<Vec2>& q);

// Decomposes a rectilinear simple polygon into disjoint closed rectangles
// (a vertical slab sweep). Each rectangle is {lo, hi} corners.
struct RectDecomp {
  std::vector<std::pair<Vec2, Vec2>> rects;
};
RectDecomp decompose_rectilinear(const std::vector<Vec2>& poly);

// Exact 1D interval list of the intersection of a rectilinear polygon
// with the axis-parallel line {u = c} (u the first plane coordinate),
// reported in the second coordinate. Closed intervals; may be points
// (lo == hi). Sorted and disjoint.
std::vector<std::pair<Rat, Rat>> polygon_line_intervals(const std::vector<Vec2>& poly,
                                                        int line_axis, const Rat& c);

// Side occupancy of the polygon along the same line, over elementary
// sub-intervals: side -1 (below/left only), +1 (above/right only) or 2
// (the line is interior there). Sorted, disjoint, nonempty intervals.
struct SideRun {
  Rat lo, hi;
  int side;
};
std::vector<SideRun> polygon_line_sides(const std::vector<Vec2>& poly, int line_axis,
                                        const Rat& c);

}  // namespace boyforge
