#include "boyforge/geometry2d.hpp"

#include <algorithm>
#include <set>

namespace boyforge {

Rat signed_area2(const std::vector<Vec2>& pts) {
  Rat s = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec2& p = pts[i];
    const Vec2& q = pts[(i + 1) % pts.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

namespace {

bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (a.x == b.x) return p.x == a.x && p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
  return p.y == a.y && p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x);
}

}  // namespace

bool segments_conflict_public(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  bool ab_vert = a.x == b.x;
  bool cd_vert = c.x == d.x;
  auto endpoint_of_both = [&](const Vec2& p) {
    return (p == a || p == b) && (p == c || p == d);
  };
  if (ab_vert == cd_vert) {
    if (ab_vert) {
      if (a.x != c.x) return false;
      Rat lo = std::max(std::min(a.y, b.y), std::min(c.y, d.y));
      Rat hi = std::min(std::max(a.y, b.y), std::max(c.y, d.y));
      if (lo > hi) return false;
      if (lo < hi) return !((a == c && b == d) || (a == d && b == c));
      return !endpoint_of_both(Vec2{a.x, lo});
    }
    if (a.y != c.y) return false;
    Rat lo = std::max(std::min(a.x, b.x), std::min(c.x, d.x));
    Rat hi = std::min(std::max(a.x, b.x), std::max(c.x, d.x));
    if (lo > hi) return false;
    if (lo < hi) return !((a == c && b == d) || (a == d && b == c));
    return !endpoint_of_both(Vec2{lo, a.y});
  }
  const Vec2& v0 = ab_vert ? a : c;
  const Vec2& v1 = ab_vert ? b : d;
  const Vec2& h0 = ab_vert ? c : a;
  const Vec2& h1 = ab_vert ? d : b;
  Vec2 p{v0.x, h0.y};
  if (!on_segment(p, v0, v1) || !on_segment(p, h0, h1)) return false;
  return !endpoint_of_both(p);
}

bool strictly_inside(const Vec2& p, const std::vector<Vec2>& poly) {
  int crossings = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    if (a.x != b.x) continue;
    Rat ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
    if (p.y > ylo && p.y < yhi && a.x > p.x) ++crossings;
  }
  return crossings % 2 == 1;
}

bool coplanar_interior_overlap(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
  // Representative interior points offset from the lex-min corner by half
  // the minimum coordinate gap of both polygons; every face contains the
  // whole surrounding grid cell or none of it.
  std::set<Rat> xs, ys;
  for (const auto& v : p) { xs.insert(v.x); ys.insert(v.y); }
  for (const auto& v : q) { xs.insert(v.x); ys.insert(v.y); }
  Rat gap = 0;
  bool have = false;
  auto scan = [&](const std::set<Rat>& s) {
    Rat prev;
    bool first = true;
    for (const Rat& v : s) {
      if (!first) {
        Rat d = v - prev;
        if (!have || d < gap) { gap = d; have = true; }
      }
      prev = v;
      first = false;
    }
  };
  scan(xs);
  scan(ys);
  Rat delta = have ? gap / 2 : Rat(1, 2);
  auto rep = [&](const std::vector<Vec2>& poly) {
    Vec2 lo = poly[0];
    for (const auto& v : poly)
      if (v < lo) lo = v;
    return Vec2{lo.x + delta, lo.y + delta};
  };
  return strictly_inside(rep(p), q) || strictly_inside(rep(q), p);
}

RectDecomp decompose_rectilinear(const std::vector<Vec2>& poly) {
  RectDecomp out;
  std::set<Rat> xs;
  for (const auto& v : poly) xs.insert(v.x);
  std::vector<Rat> xv(xs.begin(), xs.end());
  for (size_t i = 0; i + 1 < xv.size(); ++i) {
    const Rat& x0 = xv[i];
    const Rat& x1 = xv[i + 1];
    Rat xm = (x0 + x1) / 2;
    // Vertical extent of the polygon over the slab (x0,x1): collect the
    // crossing y-values of horizontal edges spanning the slab.
    std::vector<Rat> ys;
    for (size_t e = 0; e < poly.size(); ++e) {
      const Vec2& a = poly[e];
      const Vec2& b = poly[(e + 1) % poly.size()];
      if (a.y != b.y) continue;
      Rat lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
      if (lo <= x0 && hi >= x1) ys.push_back(a.y);
    }
    std::sort(ys.begin(), ys.end());
    for (size_t k = 0; k + 1 < ys.size(); k += 2)
      out.rects.push_back({Vec2{x0, ys[k]}, Vec2{x1, ys[k + 1]}});
  }
  return out;
}

std::vector<SideRun> polygon_line_sides(const std::vector<Vec2>& poly, int line_axis,
                                        const Rat& c) {
  auto coverage = polygon_line_intervals(poly, line_axis, c);
  // Breakpoints: the polygon's own coordinate values along the line.
  std::set<Rat> along, across;
  for (const auto& p : poly) {
    along.insert(line_axis == 0 ? p.y : p.x);
    across.insert(line_axis == 0 ? p.x : p.y);
  }
  across.insert(c);
  Rat gap = 0;
  bool have = false;
  {
    Rat prev;
    bool first = true;
    for (const Rat& v : across) {
      if (!first) {
        Rat d = v - prev;
        if (!have || d < gap) { gap = d; have = true; }
      }
      prev = v;
      first = false;
    }
  }
  Rat delta = have ? gap / 2 : Rat(1, 2);

  std::vector<SideRun> runs;
  for (const auto& [lo, hi] : coverage) {
    if (lo == hi) continue;
    std::vector<Rat> cuts{lo};
    for (const Rat& v : along)
      if (v > lo && v < hi) cuts.push_back(v);
    cuts.push_back(hi);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      Rat mid = (cuts[i] + cuts[i + 1]) / 2;  // off-grid along the line
      Vec2 plus = line_axis == 0 ? Vec2{c + delta, mid} : Vec2{mid, c + delta};
      Vec2 minus = line_axis == 0 ? Vec2{c - delta, mid} : Vec2{mid, c - delta};
      bool sp = strictly_inside(plus, poly);
      bool sm = strictly_inside(minus, poly);
      if (!sp && !sm) continue;
      int side = sp && sm ? 2 : (sp ? 1 : -1);
      if (!runs.empty() && runs.back().hi == cuts[i] && runs.back().side == side)
        runs.back().hi = cuts[i + 1];
      else
        runs.push_back({cuts[i], cuts[i + 1], side});
    }
  }
  return runs;
}

std::vector<std::pair<Rat, Rat>> polygon_line_intervals(const std::vector<Vec2>& poly,
                                                        int line_axis, const Rat& c) {
  // line_axis == 0: line {x = c}, report y-intervals; line_axis == 1:
  // line {y = c}, report x-intervals.
  std::vector<std::pair<Rat, Rat>> raw;
  RectDecomp dec = decompose_rectilinear(poly);
  for (const auto& [lo, hi] : dec.rects) {
    if (line_axis == 0) {
      if (c >= lo.x && c <= hi.x) raw.push_back({lo.y, hi.y});
    } else {
      if (c >= lo.y && c <= hi.y) raw.push_back({lo.x, hi.x});
    }
  }
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<Rat, Rat>> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() && iv.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, iv.second);
    else
      merged.push_back(iv);
  }
  return merged;
}

}  // namespace boyforge
