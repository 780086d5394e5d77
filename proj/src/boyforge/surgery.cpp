#include "boyforge/surgery.hpp"

#include <algorithm>
#include <numeric>

#include "boyforge/geometry2d.hpp"

namespace boyforge {

ImmersedComplex remove_pieces(const ImmersedComplex& c, const std::set<std::string>& names) {
  std::set<std::string> present;
  for (const auto& f : c.faces) present.insert(f.piece);
  for (const auto& n : names)
    if (!present.count(n)) throw SurgeryError("unknown piece name '" + n + "'");

  ImmersedComplex out;
  std::vector<int> remap(c.pos.size(), -1);
  for (const auto& f : c.faces) {
    if (names.count(f.piece)) continue;
    ImmersedComplex::Face nf = f;
    for (int& v : nf.cycle) {
      if (remap[v] == -1) {
        remap[v] = static_cast<int>(out.pos.size());
        out.pos.push_back(c.pos[v]);
      }
      v = remap[v];
    }
    out.faces.push_back(std::move(nf));
  }
  for (size_t t = 0; t < c.tags.size(); ++t) {
    if (names.count(c.tag_piece[t])) continue;
    if (remap[c.tags[t].a] == -1 || remap[c.tags[t].b] == -1) continue;
    out.tags.push_back({c.tags[t].kind, c.tags[t].name, remap[c.tags[t].a], remap[c.tags[t].b]});
    out.tag_piece.push_back(c.tag_piece[t]);
  }
  return out;
}

namespace {

// Splits vertices whose star is disconnected through the edges at the
// vertex, giving each connected component its own copy. Cut-and-repair
// surgery produces such pinches deliberately; this restores a complex in
// which every preimage of a point is its own vertex.
ImmersedComplex split_pinches(const ImmersedComplex& c) {
  ImmersedComplex out = c;
  bool changed = true;
  while (changed) {
    changed = false;
    auto ef = out.edge_faces();
    size_t nv = out.pos.size();
    for (size_t v = 0; v < nv; ++v) {
      std::vector<int> star;
      for (size_t fi = 0; fi < out.faces.size(); ++fi)
        for (int u : out.faces[fi].cycle)
          if (u == static_cast<int>(v)) star.push_back(static_cast<int>(fi));
      if (star.size() < 2) continue;
      // components of the star through interior edges at v
      std::map<int, std::vector<int>> adj;
      for (const auto& [e, fs] : ef) {
        if (e.first != static_cast<int>(v) && e.second != static_cast<int>(v)) continue;
        if (fs.size() == 2) {
          adj[fs[0]].push_back(fs[1]);
          adj[fs[1]].push_back(fs[0]);
        }
      }
      std::map<int, int> comp;
      int ncomp = 0;
      for (int f : star) {
        if (comp.count(f)) continue;
        int id = ncomp++;
        std::vector<int> stack{f};
        comp[f] = id;
        while (!stack.empty()) {
          int g = stack.back();
          stack.pop_back();
          for (int h : adj[g])
            if (!comp.count(h)) {
              comp[h] = id;
              stack.push_back(h);
            }
        }
      }
      if (ncomp <= 1) continue;
      changed = true;
      // faces in components > 0 get fresh vertex copies
      std::vector<int> copies(ncomp, static_cast<int>(v));
      for (int k = 1; k < ncomp; ++k) {
        copies[k] = static_cast<int>(out.pos.size());
        out.pos.push_back(out.pos[v]);
      }
      for (int f : star) {
        int k = comp[f];
        if (k == 0) continue;
        for (int& u : out.faces[f].cycle)
          if (u == static_cast<int>(v)) u = copies[k];
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Rat> face_area_multiset(const ImmersedComplex& c) {
  std::vector<Rat> areas;
  for (const auto& f : c.faces) {
    // chart the face into 2D and take the absolute shoelace sum
    int axis = -1;
    for (int a = 0; a < 3 && axis < 0; ++a) {
      bool constant = true;
      for (int v : f.cycle)
        if (c.pos[v][a] != c.pos[f.cycle[0]][a]) constant = false;
      if (constant) axis = a;
    }
    if (axis < 0) throw SurgeryError("face is not axis-parallel planar");
    std::vector<Vec2> pts;
    for (int v : f.cycle)
      pts.push_back(Vec2{c.pos[v][(axis + 1) % 3], c.pos[v][(axis + 2) % 3]});
    Rat a2 = signed_area2(pts);
    if (a2 < 0) a2 = -a2;
    areas.push_back(a2);
  }
  std::sort(areas.begin(), areas.end());
  return areas;
}

ImmersedComplex resolve(const ImmersedComplex& c, const Resolution& r) {
  DoubleLocus locus = self_intersections(c);
  if (!locus.triple_points.empty())
    throw SurgeryError("double locus contains a triple point; remove the core first");
  if (locus.arcs.size() != r.choices.size())
    throw SurgeryError("resolution has " + std::to_string(r.choices.size()) +
                       " choices for " + std::to_string(locus.arcs.size()) + " arcs");
  if (locus.arcs.empty()) return c;

  ImmersedComplex out = c;
  for (size_t ai = 0; ai < locus.arcs.size(); ++ai) {
    const auto& arc = locus.arcs[ai];
    if (arc.loop || arc.points.size() != 2)
      throw SurgeryError("pairing infeasible: arc " + std::to_string(ai) +
                         " is not a single transverse straight segment");
    const Vec3& p = arc.points.front();
    const Vec3& q = arc.points.back();

    // The two crossing faces: each contains the open segment in its
    // interior (2-sided within its plane).
    std::vector<int> crossing;
    for (size_t fi = 0; fi < out.faces.size(); ++fi) {
      int axis = -1;
      for (int a = 0; a < 3 && axis < 0; ++a) {
        bool constant = true;
        for (int v : out.faces[fi].cycle)
          if (out.pos[v][a] != out.pos[out.faces[fi].cycle[0]][a]) constant = false;
        if (constant) axis = a;
      }
      if (axis < 0) continue;
      const Rat& pc = out.pos[out.faces[fi].cycle[0]][axis];
      if (p[axis] != pc || q[axis] != pc) continue;
      std::vector<Vec2> poly;
      for (int v : out.faces[fi].cycle)
        poly.push_back(Vec2{out.pos[v][(axis + 1) % 3], out.pos[v][(axis + 2) % 3]});
      // interior 2-sided along the whole open chord?
      bool chord_u = p[(axis + 1) % 3] == q[(axis + 1) % 3];  // chord along w
      int line_axis = chord_u ? 0 : 1;
      Rat cval = chord_u ? p[(axis + 1) % 3] : p[(axis + 2) % 3];
      Rat lo = chord_u ? std::min(p[(axis + 2) % 3], q[(axis + 2) % 3])
                       : std::min(p[(axis + 1) % 3], q[(axis + 1) % 3]);
      Rat hi = chord_u ? std::max(p[(axis + 2) % 3], q[(axis + 2) % 3])
                       : std::max(p[(axis + 1) % 3], q[(axis + 1) % 3]);
      Rat covered = 0;
      for (const auto& run : polygon_line_sides(poly, line_axis, cval)) {
        if (run.side != 2) continue;
        Rat l = std::max(lo, run.lo), h = std::min(hi, run.hi);
        if (l < h) covered += h - l;
      }
      if (covered == hi - lo) crossing.push_back(static_cast<int>(fi));
    }
    if (crossing.size() != 2)
      throw SurgeryError("pairing infeasible: arc does not cross exactly two faces");

    int fa = crossing[0], fb = crossing[1];
    out = subdivide_face(out, fa, p, q);
    int fa1 = fa, fa2 = static_cast<int>(out.faces.size()) - 1;
    out = subdivide_face(out, fb, p, q);
    int fb1 = fb, fb2 = static_cast<int>(out.faces.size()) - 1;

    int vp = -1, vq = -1;
    for (int v : out.faces[fa1].cycle) {
      if (out.pos[v] == p) vp = v;
      if (out.pos[v] == q) vq = v;
    }
    if (vp < 0 || vq < 0) throw SurgeryError("internal: chord vertices not found");

    // The second subdivision introduced its own endpoint preimages; fuse
    // them with the first sheet's so the re-paired halves share edges.
    // split_pinches separates whatever must stay apart afterwards.
    int wp = -1, wq = -1;
    for (int v : out.faces[fb1].cycle) {
      if (out.pos[v] == p && v != vp) wp = v;
      if (out.pos[v] == q && v != vq) wq = v;
    }
    for (auto& f : out.faces)
      for (int& v : f.cycle) {
        if (v == wp) v = vp;
        if (v == wq) v = vq;
      }

    // Re-pair via distinct chord midpoints.
    Vec3 mid{(p.x + q.x) / 2, (p.y + q.y) / 2, (p.z + q.z) / 2};
    int m1 = static_cast<int>(out.pos.size());
    out.pos.push_back(mid);
    int m2 = static_cast<int>(out.pos.size());
    out.pos.push_back(mid);
    auto insert_mid = [&](int face, int m) {
      auto& cyc = out.faces[face].cycle;
      for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if ((a == vp && b == vq) || (a == vq && b == vp)) {
          cyc.insert(cyc.begin() + i + 1, m);
          return;
        }
      }
      throw SurgeryError("internal: chord edge missing from face");
    };
    int partner_a1 = r.choices[ai] == 0 ? fb1 : fb2;
    int partner_a2 = r.choices[ai] == 0 ? fb2 : fb1;
    insert_mid(fa1, m1);
    insert_mid(partner_a1, m1);
    insert_mid(fa2, m2);
    insert_mid(partner_a2, m2);
  }

  out = split_pinches(out);

  DoubleLocus check = self_intersections(out);
  if (!check.merged_segments.empty())
    throw SurgeryError("internal: resolution left a nonempty double locus");
  return out;
}

MobiusReport verify_mobius_claim(const ImmersedComplex& c) {
  DoubleLocus locus = self_intersections(c);
  if (!locus.merged_segments.empty())
    throw SurgeryError("verify_mobius_claim requires an empty double locus");

  MobiusReport rep;
  rep.connected = is_connected(c);
  rep.orientable_surface = orientable(c);
  rep.euler = euler_characteristic(c);
  auto bd = boundary_components(c);
  rep.boundary_circles = bd.count;
  rep.surface = classify(c);
  rep.homology_profile = homology(c);
  rep.non_orientable_three_circles =
      rep.connected && !rep.orientable_surface && rep.boundary_circles == 3;
  return rep;
}

}  // namespace boyforge
