#include "boyforge/immersion.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>
#include <tuple>

#include "boyforge/geometry2d.hpp"

namespace boyforge {

namespace {

// Chart of the plane {coord[axis] = c}: (u, w) = (coord[axis+1], coord[axis+2]).
struct FacePlane {
  int axis;
  Rat c;
  std::vector<Vec2> poly;
};

FacePlane face_plane(const ImmersedComplex& c, int fi) {
  const auto& cyc = c.faces[fi].cycle;
  for (int axis = 0; axis < 3; ++axis) {
    bool constant = true;
    for (int v : cyc)
      if (c.pos[v][axis] != c.pos[cyc[0]][axis]) constant = false;
    if (constant) {
      FacePlane fp;
      fp.axis = axis;
      fp.c = c.pos[cyc[0]][axis];
      for (int v : cyc)
        fp.poly.push_back(Vec2{c.pos[v][(axis + 1) % 3], c.pos[v][(axis + 2) % 3]});
      return fp;
    }
  }
  throw DegenerateIntersection("face " + std::to_string(fi) + " is not axis-parallel planar");
}

Vec3 unchart(int axis, const Rat& c, const Vec2& p) {
  Vec3 out{0, 0, 0};
  out[axis] = c;
  out[(axis + 1) % 3] = p.x;
  out[(axis + 2) % 3] = p.y;
  return out;
}

std::vector<std::pair<Rat, Rat>> intersect_intervals(const std::vector<std::pair<Rat, Rat>>& a,
                                                     const std::vector<std::pair<Rat, Rat>>& b) {
  std::vector<std::pair<Rat, Rat>> out;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Rat lo = std::max(a[i].first, b[j].first);
    Rat hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.push_back({lo, hi});
    if (a[i].second < b[j].second) ++i;
    else ++j;
  }
  return out;
}

void face_pair_intersection(const ImmersedComplex&, const std::vector<FacePlane>& planes,
                            int fi, int fj, std::vector<DoubleLocus::RawSegment>& out) {
  const FacePlane& a = planes[fi];
  const FacePlane& b = planes[fj];
  if (a.axis == b.axis) {
    if (a.c != b.c) return;
    RectDecomp da = decompose_rectilinear(a.poly);
    RectDecomp db = decompose_rectilinear(b.poly);
    for (const auto& [alo, ahi] : da.rects) {
      for (const auto& [blo, bhi] : db.rects) {
        Rat xlo = std::max(alo.x, blo.x), xhi = std::min(ahi.x, bhi.x);
        Rat ylo = std::max(alo.y, blo.y), yhi = std::min(ahi.y, bhi.y);
        if (xlo > xhi || ylo > yhi) continue;
        if (xlo < xhi && ylo < yhi)
          throw DegenerateIntersection(
              "faces " + std::to_string(fi) + " and " + std::to_string(fj) +
              " overlap in a 2D region (non-transverse contact)");
        Vec3 p = unchart(a.axis, a.c, Vec2{xlo, ylo});
        Vec3 q = unchart(a.axis, a.c, Vec2{xhi, yhi});
        if (q < p) std::swap(p, q);
        out.push_back({fi, fj, p, q});
      }
    }
    return;
  }
  int line_axis_a = (b.axis == (a.axis + 1) % 3) ? 0 : 1;
  int line_axis_b = (a.axis == (b.axis + 1) % 3) ? 0 : 1;
  auto ia = polygon_line_intervals(a.poly, line_axis_a, b.c);
  auto ib = polygon_line_intervals(b.poly, line_axis_b, a.c);
  auto common = intersect_intervals(ia, ib);
  int k = 3 - a.axis - b.axis;
  for (const auto& [lo, hi] : common) {
    Vec3 p{0, 0, 0};
    p[a.axis] = a.c;
    p[b.axis] = b.c;
    Vec3 q = p;
    p[k] = lo;
    q[k] = hi;
    if (q < p) std::swap(p, q);
    out.push_back({fi, fj, p, q});
  }
}

int env_thread_cap() {
  if (const char* s = std::getenv("BOYFORGE_THREADS")) {
    int n = std::atoi(s);
    if (n >= 1) return n;
  }
  return 0;
}

// An axis-parallel line: varying coordinate `axis`, the other two fixed.
struct Line3 {
  int axis;
  Rat c1, c2;  // coords (axis+1)%3 and (axis+2)%3
  bool operator<(const Line3& o) const {
    if (axis != o.axis) return axis < o.axis;
    if (c1 != o.c1) return c1 < o.c1;
    return c2 < o.c2;
  }
};

Rat min_gap_delta(const std::set<Rat>& vals) {
  Rat gap = 0;
  bool have = false;
  Rat prev;
  bool first = true;
  for (const Rat& v : vals) {
    if (!first) {
      Rat d = v - prev;
      if (!have || d < gap) { gap = d; have = true; }
    }
    prev = v;
    first = false;
  }
  return have ? gap / 2 : Rat(1, 2);
}

}  // namespace

Rat DoubleLocus::Arc::squared_length() const {
  Rat s = 0;
  for (size_t i = 0; i + 1 < points.size(); ++i)
    s += boyforge::squared_length(points[i + 1] - points[i]);
  return s;
}

DoubleLocus self_intersections(const ImmersedComplex& c) {
  DoubleLocus locus;
  size_t nf = c.faces.size();
  std::vector<FacePlane> planes;
  planes.reserve(nf);
  for (size_t i = 0; i < nf; ++i) planes.push_back(face_plane(c, static_cast<int>(i)));

  // Raw contacts: pairs of faces sharing no abstract vertex.
  std::vector<std::set<int>> verts(nf);
  for (size_t i = 0; i < nf; ++i) verts[i].insert(c.faces[i].cycle.begin(), c.faces[i].cycle.end());
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < nf; ++i)
    for (size_t j = i + 1; j < nf; ++j) {
      bool shares = false;
      for (int v : verts[i])
        if (verts[j].count(v)) { shares = true; break; }
      if (!shares) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }

  unsigned hw = std::thread::hardware_concurrency();
  int cap = env_thread_cap();
  size_t workers = cap > 0 ? static_cast<size_t>(cap) : (hw ? std::min<unsigned>(hw, 8) : 1);
  workers = std::min(workers, pairs.size() ? pairs.size() : size_t(1));

  std::vector<std::vector<DoubleLocus::RawSegment>> results(workers);
  std::vector<std::string> errors(workers);
  if (workers <= 1) {
    for (const auto& [i, j] : pairs) face_pair_intersection(c, planes, i, j, results[0]);
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (size_t k = w; k < pairs.size(); k += workers)
            face_pair_intersection(c, planes, pairs[k].first, pairs[k].second, results[w]);
        } catch (const std::exception& e) {
          errors[w] = e.what();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (!e.empty()) throw DegenerateIntersection(e);
  }
  for (auto& r : results) locus.segments.insert(locus.segments.end(), r.begin(), r.end());
  std::sort(locus.segments.begin(), locus.segments.end(),
            [](const DoubleLocus::RawSegment& a, const DoubleLocus::RawSegment& b) {
              if (!(a.p == b.p)) return a.p < b.p;
              if (!(a.q == b.q)) return a.q < b.q;
              return std::tie(a.face_a, a.face_b) < std::tie(b.face_a, b.face_b);
            });

  // --- Crossing filter ---------------------------------------------------
  // A point of a contact line belongs to the double locus iff BOTH planes
  // through the line carry a sheet passing 2-sided across it: either one
  // face whose interior contains the line there, or an abstract edge along
  // the line both of whose faces lie in that plane. Creases and boundary
  // edges resting on another sheet only touch; they are not double points.
  std::set<Line3> lines;
  for (const auto& s : locus.segments) {
    if (s.p == s.q) continue;
    int axis = -1;
    for (int a = 0; a < 3; ++a)
      if (s.p[a] != s.q[a]) axis = a;
    lines.insert({axis, s.p[(axis + 1) % 3], s.p[(axis + 2) % 3]});
  }

  auto ef = c.edge_faces();

  for (const Line3& line : lines) {
    int k = line.axis;
    // The two planes containing the line.
    struct PlaneSpec { int axis; Rat c; };
    PlaneSpec pspec[2] = {{(k + 1) % 3, line.c1}, {(k + 2) % 3, line.c2}};
    auto line_coord = [&](int axis3) { return axis3 == (k + 1) % 3 ? line.c1 : line.c2; };

    // Events partition the line into elementary cells.
    std::set<Rat> cuts;
    struct Cover {
      int plane;           // 0/1
      Rat lo, hi;
      int side;            // -1, +1, or 2 for both (interior)
    };
    std::vector<Cover> covers;

    for (size_t fi = 0; fi < nf; ++fi) {
      const FacePlane& fp = planes[fi];
      for (int pi = 0; pi < 2; ++pi) {
        if (fp.axis != pspec[pi].axis || fp.c != pspec[pi].c) continue;
        // Chart of this plane: (u, w) = ((axis+1)%3, (axis+2)%3); the
        // line runs along axis k, the other chart coordinate is fixed.
        int ua = (fp.axis + 1) % 3, wa = (fp.axis + 2) % 3;
        int fixed_chart = (ua == k) ? 1 : 0;  // 0: u fixed, 1: w fixed
        Rat fixed_value = (ua == k) ? line_coord(wa) : line_coord(ua);
        for (const auto& run : polygon_line_sides(fp.poly, fixed_chart, fixed_value)) {
          cuts.insert(run.lo);
          cuts.insert(run.hi);
          covers.push_back({pi, run.lo, run.hi, run.side});
        }
      }
    }

    // Abstract edges lying along the line.
    struct EdgeSpan {
      Rat lo, hi;
      int plane;  // 0/1 if both faces in that plane, -1 otherwise
    };
    std::vector<EdgeSpan> espans;
    for (const auto& [e, fs] : ef) {
      const Vec3& pa = c.pos[e.first];
      const Vec3& pb = c.pos[e.second];
      if (pa[(k + 1) % 3] != line.c1 || pa[(k + 2) % 3] != line.c2) continue;
      if (pb[(k + 1) % 3] != line.c1 || pb[(k + 2) % 3] != line.c2) continue;
      if (fs.size() != 2) continue;
      int owner = -1;
      for (int pi = 0; pi < 2; ++pi) {
        bool both = true;
        for (int f : fs)
          if (planes[f].axis != pspec[pi].axis || planes[f].c != pspec[pi].c) both = false;
        if (both) owner = pi;
      }
      Rat lo = std::min(pa[k], pb[k]), hi = std::max(pa[k], pb[k]);
      espans.push_back({lo, hi, owner});
      cuts.insert(lo);
      cuts.insert(hi);
    }

    // Elementary cells: crossing iff both planes are 2-sided there.
    std::vector<Rat> cutv(cuts.begin(), cuts.end());
    std::vector<std::pair<Rat, Rat>> crossing_cells;
    for (size_t i = 0; i + 1 < cutv.size(); ++i) {
      const Rat& lo = cutv[i];
      const Rat& hi = cutv[i + 1];
      bool crossed[2] = {false, false};
      for (int pi = 0; pi < 2; ++pi) {
        bool pos = false, neg = false;
        for (const auto& cv : covers) {
          if (cv.plane != pi || cv.lo > lo || cv.hi < hi) continue;
          if (cv.side == 2) { pos = neg = true; }
          else if (cv.side == 1) pos = true;
          else neg = true;
        }
        if (pos && neg) { crossed[pi] = true; continue; }
        for (const auto& es : espans)
          if (es.plane == pi && es.lo <= lo && es.hi >= hi) crossed[pi] = true;
      }
      if (crossed[0] && crossed[1]) {
        if (!crossing_cells.empty() && crossing_cells.back().second == lo)
          crossing_cells.back().second = hi;
        else
          crossing_cells.push_back({lo, hi});
      }
    }
    for (const auto& [lo, hi] : crossing_cells) {
      Vec3 p{0, 0, 0}, q{0, 0, 0};
      p[k] = lo;
      q[k] = hi;
      p[(k + 1) % 3] = q[(k + 1) % 3] = line.c1;
      p[(k + 2) % 3] = q[(k + 2) % 3] = line.c2;
      locus.merged_segments.push_back({p, q});
    }
  }
  std::sort(locus.merged_segments.begin(), locus.merged_segments.end());

  // Triple points: points where crossing segments from >= 3 distinct
  // lines meet (three sheets pairwise crossing).
  auto seg_contains = [](const std::pair<Vec3, Vec3>& s, const Vec3& p) {
    for (int a = 0; a < 3; ++a)
      if (p[a] < s.first[a] || p[a] > s.second[a]) return false;
    Vec3 d1 = p - s.first, d2 = s.second - p;
    Vec3 cr{d1.y * d2.z - d1.z * d2.y, d1.z * d2.x - d1.x * d2.z, d1.x * d2.y - d1.y * d2.x};
    return cr == Vec3{0, 0, 0};
  };
  std::set<Vec3> candidates;
  for (size_t i = 0; i < locus.merged_segments.size(); ++i) {
    for (size_t j = i + 1; j < locus.merged_segments.size(); ++j) {
      const auto& s1 = locus.merged_segments[i];
      const auto& s2 = locus.merged_segments[j];
      Vec3 p{0, 0, 0};
      bool ok = true;
      for (int a = 0; a < 3; ++a) {
        Rat lo = std::max(s1.first[a], s2.first[a]);
        Rat hi = std::min(s1.second[a], s2.second[a]);
        if (lo > hi) { ok = false; break; }
        p[a] = lo;
      }
      if (ok && seg_contains(s1, p) && seg_contains(s2, p)) candidates.insert(p);
    }
  }
  for (const Vec3& p : candidates) {
    std::set<std::tuple<int, Rat, Rat>> lines_at;
    for (const auto& s : locus.merged_segments) {
      if (!seg_contains(s, p)) continue;
      if (s.first == s.second) continue;
      int axis = -1;
      for (int a = 0; a < 3; ++a)
        if (s.first[a] != s.second[a]) axis = a;
      lines_at.insert({axis, s.first[(axis + 1) % 3], s.first[(axis + 2) % 3]});
    }
    if (lines_at.size() >= 3) {
      std::set<int> faces;
      for (const auto& s : locus.segments)
        if (seg_contains({s.p, s.q}, p)) {
          faces.insert(s.face_a);
          faces.insert(s.face_b);
        }
      locus.triple_points.push_back({p, std::vector<int>(faces.begin(), faces.end())});
    }
  }
  std::sort(locus.triple_points.begin(), locus.triple_points.end(),
            [](const DoubleLocus::TriplePoint& a, const DoubleLocus::TriplePoint& b) {
              return a.p < b.p;
            });

  // Stitch crossing segments into maximal arcs/loops at shared endpoints.
  std::map<Vec3, std::vector<size_t>> at;
  for (size_t i = 0; i < locus.merged_segments.size(); ++i) {
    at[locus.merged_segments[i].first].push_back(i);
    at[locus.merged_segments[i].second].push_back(i);
  }
  std::vector<bool> used(locus.merged_segments.size(), false);
  auto other_end = [&](size_t seg, const Vec3& from) {
    return locus.merged_segments[seg].first == from ? locus.merged_segments[seg].second
                                                    : locus.merged_segments[seg].first;
  };
  for (size_t start = 0; start < locus.merged_segments.size(); ++start) {
    if (used[start]) continue;
    std::vector<Vec3> pts{locus.merged_segments[start].first,
                          locus.merged_segments[start].second};
    used[start] = true;
    bool loop = false;
    for (int dir = 0; dir < 2 && !loop; ++dir) {
      while (true) {
        Vec3 end = dir == 0 ? pts.back() : pts.front();
        const auto& inc = at[end];
        if (inc.size() != 2) break;
        size_t next;
        if (!used[inc[0]]) next = inc[0];
        else if (!used[inc[1]]) next = inc[1];
        else {
          if (pts.front() == pts.back()) loop = true;
          break;
        }
        used[next] = true;
        Vec3 nxt = other_end(next, end);
        if (dir == 0) pts.push_back(nxt);
        else pts.insert(pts.begin(), nxt);
      }
    }
    locus.arcs.push_back({pts, loop});
  }
  std::sort(locus.arcs.begin(), locus.arcs.end(),
            [](const DoubleLocus::Arc& a, const DoubleLocus::Arc& b) {
              return a.points < b.points;
            });
  return locus;
}

std::string defect_kind_name(ImmersionDefect::Kind k) {
  switch (k) {
    case ImmersionDefect::Kind::PinchedVertex: return "pinched-vertex";
    case ImmersionDefect::Kind::OverlappingAdjacentFaces: return "overlapping-adjacent-faces";
    case ImmersionDefect::Kind::EdgeCreaseDegenerate: return "edge-crease-degenerate";
  }
  return "?";
}

std::vector<ImmersionDefect> local_injectivity(const ImmersedComplex& c) {
  std::vector<ImmersionDefect> defects;
  auto ef = c.edge_faces();

  std::vector<FacePlane> planes;
  for (size_t i = 0; i < c.faces.size(); ++i) planes.push_back(face_plane(c, static_cast<int>(i)));

  // Pinched vertices: star not connected through edges at the vertex, or
  // a wrong number of boundary edges meeting there.
  for (size_t v = 0; v < c.pos.size(); ++v) {
    std::vector<int> inc;
    for (size_t fi = 0; fi < c.faces.size(); ++fi)
      for (int u : c.faces[fi].cycle)
        if (u == static_cast<int>(v)) inc.push_back(static_cast<int>(fi));
    if (inc.empty()) continue;
    std::map<int, std::vector<int>> adj;
    int boundary_here = 0;
    bool over = false;
    for (const auto& [e, fs] : ef) {
      if (e.first != static_cast<int>(v) && e.second != static_cast<int>(v)) continue;
      if (fs.size() == 1) ++boundary_here;
      else if (fs.size() == 2) {
        adj[fs[0]].push_back(fs[1]);
        adj[fs[1]].push_back(fs[0]);
      } else over = true;
    }
    std::set<int> seen;
    std::vector<int> stack{inc[0]};
    seen.insert(inc[0]);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int g : adj[f])
        if (seen.insert(g).second) stack.push_back(g);
    }
    if (over || seen.size() != inc.size() || (boundary_here != 0 && boundary_here != 2))
      defects.push_back({ImmersionDefect::Kind::PinchedVertex, static_cast<int>(v), c.pos[v],
                         "vertex link is not a single cycle or arc"});
  }

  // Zero-dihedral creases: coplanar edge faces lying on the same side
  // somewhere along the open edge.
  for (const auto& [e, fs] : ef) {
    if (fs.size() != 2) continue;
    const FacePlane& a = planes[fs[0]];
    const FacePlane& b = planes[fs[1]];
    if (a.axis != b.axis || a.c != b.c) continue;
    Vec2 pa{c.pos[e.first][(a.axis + 1) % 3], c.pos[e.first][(a.axis + 2) % 3]};
    Vec2 pb{c.pos[e.second][(a.axis + 1) % 3], c.pos[e.second][(a.axis + 2) % 3]};
    bool vertical = pa.x == pb.x;  // edge along chart w
    int line_axis = vertical ? 0 : 1;
    Rat cval = vertical ? pa.x : pa.y;
    Rat lo = vertical ? std::min(pa.y, pb.y) : std::min(pa.x, pb.x);
    Rat hi = vertical ? std::max(pa.y, pb.y) : std::max(pa.x, pb.x);
    auto ra = polygon_line_sides(a.poly, line_axis, cval);
    auto rb = polygon_line_sides(b.poly, line_axis, cval);
    bool same_side = false;
    for (const auto& sa : ra)
      for (const auto& sb : rb) {
        Rat l = std::max({sa.lo, sb.lo, lo});
        Rat h = std::min({sa.hi, sb.hi, hi});
        if (l < h && (sa.side == sb.side || sa.side == 2 || sb.side == 2)) same_side = true;
      }
    if (same_side)
      defects.push_back({ImmersionDefect::Kind::EdgeCreaseDegenerate, e.first, c.pos[e.first],
                         "faces " + std::to_string(fs[0]) + " and " + std::to_string(fs[1]) +
                             " fold back onto each other"});
  }

  // Star sector overlaps and star faces crossing off their shared edges.
  for (size_t v = 0; v < c.pos.size(); ++v) {
    std::vector<int> star;
    for (size_t fi = 0; fi < c.faces.size(); ++fi)
      for (int u : c.faces[fi].cycle)
        if (u == static_cast<int>(v)) star.push_back(static_cast<int>(fi));
    if (star.size() < 2) continue;

    std::map<std::tuple<int, Rat, int, int>, std::vector<int>> atom_owners;
    for (int fi : star) {
      const FacePlane& fp = planes[fi];
      Vec2 vc{c.pos[v][(fp.axis + 1) % 3], c.pos[v][(fp.axis + 2) % 3]};
      std::set<Rat> vals;
      for (int fj : star)
        if (planes[fj].axis == fp.axis && planes[fj].c == fp.c)
          for (const auto& p : planes[fj].poly) {
            vals.insert(p.x);
            vals.insert(p.y);
          }
      Rat delta = min_gap_delta(vals);
      for (int su : {-1, 1})
        for (int sw : {-1, 1}) {
          Vec2 probe{vc.x + delta * su, vc.y + delta * sw};
          if (strictly_inside(probe, fp.poly))
            atom_owners[{fp.axis, fp.c, su, sw}].push_back(fi);
        }
    }
    for (const auto& [atom, owners] : atom_owners) {
      (void)atom;
      if (owners.size() < 2) continue;
      defects.push_back({ImmersionDefect::Kind::OverlappingAdjacentFaces, static_cast<int>(v),
                         c.pos[v],
                         "faces " + std::to_string(owners[0]) + " and " +
                             std::to_string(owners[1]) + " overlap in a sector at the vertex"});
    }

    for (size_t i = 0; i < star.size(); ++i) {
      for (size_t j = i + 1; j < star.size(); ++j) {
        const FacePlane& a = planes[star[i]];
        const FacePlane& b = planes[star[j]];
        if (a.axis == b.axis) continue;
        std::vector<DoubleLocus::RawSegment> segs;
        face_pair_intersection(c, planes, star[i], star[j], segs);
        for (const auto& s : segs) {
          if (s.p == s.q) continue;
          bool contains_v = true;
          for (int ax = 0; ax < 3; ++ax)
            if (c.pos[v][ax] < s.p[ax] || c.pos[v][ax] > s.q[ax]) contains_v = false;
          if (!contains_v) continue;
          bool is_shared_edge = false;
          const auto& ca = c.faces[star[i]].cycle;
          const auto& cb = c.faces[star[j]].cycle;
          for (size_t x = 0; x < ca.size() && !is_shared_edge; ++x) {
            int a1 = ca[x], a2 = ca[(x + 1) % ca.size()];
            for (size_t y = 0; y < cb.size() && !is_shared_edge; ++y) {
              int b1 = cb[y], b2 = cb[(y + 1) % cb.size()];
              if ((a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1)) {
                Vec3 lo = c.pos[a1] < c.pos[a2] ? c.pos[a1] : c.pos[a2];
                Vec3 hi = c.pos[a1] < c.pos[a2] ? c.pos[a2] : c.pos[a1];
                bool inside = true;
                for (int ax = 0; ax < 3; ++ax)
                  if (s.p[ax] < lo[ax] || s.q[ax] > hi[ax]) inside = false;
                if (inside) is_shared_edge = true;
              }
            }
          }
          if (!is_shared_edge)
            defects.push_back(
                {ImmersionDefect::Kind::OverlappingAdjacentFaces, static_cast<int>(v), c.pos[v],
                 "star faces " + std::to_string(star[i]) + " and " + std::to_string(star[j]) +
                     " cross along a segment through the vertex"});
        }
      }
    }
  }

  std::sort(defects.begin(), defects.end(), [](const ImmersionDefect& a, const ImmersionDefect& b) {
    return std::tie(a.kind, a.element, a.detail) < std::tie(b.kind, b.element, b.detail);
  });
  defects.erase(std::unique(defects.begin(), defects.end(),
                            [](const ImmersionDefect& a, const ImmersionDefect& b) {
                              return a.kind == b.kind && a.element == b.element &&
                                     a.detail == b.detail;
                            }),
                defects.end());
  return defects;
}

DoubleCurveProfile double_curve_profile(const ImmersedComplex& c, const DoubleLocus& locus) {
  DoubleCurveProfile prof;
  for (const auto& arc : locus.arcs) {
    if (arc.loop) ++prof.loop_count;
    else ++prof.arc_count;
  }
  for (const auto& [p, q] : locus.merged_segments)
    prof.squared_segment_lengths.push_back(squared_length(q - p));
  std::sort(prof.squared_segment_lengths.begin(), prof.squared_segment_lengths.end());

  auto seg_contains = [](const Vec3& a, const Vec3& b, const Vec3& p) {
    Vec3 lo = a < b ? a : b, hi = a < b ? b : a;
    for (int ax = 0; ax < 3; ++ax)
      if (p[ax] < lo[ax] || p[ax] > hi[ax]) return false;
    Vec3 d1 = p - lo, d2 = hi - p;
    Vec3 cr{d1.y * d2.z - d1.z * d2.y, d1.z * d2.x - d1.x * d2.z, d1.x * d2.y - d1.y * d2.x};
    return cr == Vec3{0, 0, 0};
  };

  for (const auto& arc : locus.arcs) {
    std::vector<size_t> row;
    for (const auto& tp : locus.triple_points) {
      size_t count = 0;
      for (size_t i = 0; i + 1 < arc.points.size(); ++i)
        if (seg_contains(arc.points[i], arc.points[i + 1], tp.p) && !(arc.points[i + 1] == tp.p))
          ++count;
      if (!arc.loop && arc.points.back() == tp.p) ++count;
      row.push_back(count);
    }
    prof.triple_passes.push_back(std::move(row));
  }

  {
    std::set<std::pair<Vec3, Vec3>> segs(locus.merged_segments.begin(),
                                         locus.merged_segments.end());
    prof.sigma_equivariant = true;
    for (const auto& [p, q] : locus.merged_segments) {
      Vec3 sp = sigma(p), sq = sigma(q);
      if (sq < sp) std::swap(sp, sq);
      if (!segs.count({sp, sq})) { prof.sigma_equivariant = false; break; }
    }
  }

  auto bedges = c.boundary_edges();
  auto on_boundary = [&](const Vec3& p) {
    for (const auto& [a, b] : bedges)
      if (seg_contains(c.pos[a], c.pos[b], p)) return true;
    return false;
  };
  std::set<Vec3> triples;
  for (const auto& tp : locus.triple_points) triples.insert(tp.p);
  for (const auto& arc : locus.arcs) {
    if (arc.loop) continue;
    for (const Vec3& end : {arc.points.front(), arc.points.back()})
      if (!triples.count(end) && !on_boundary(end)) prof.dangling_endpoints.push_back(end);
  }
  return prof;
}

}  // namespace boyforge
