#include "boyforge/folding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "boyforge/geometry2d.hpp"

namespace boyforge {

RigidMotion RigidMotion::identity() {
  return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, Vec3{0, 0, 0}};
}

Vec3 RigidMotion::rotate(const Vec3& v) const {
  Vec3 r{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (rot[i][j] != 0) r[i] += Rat(rot[i][j]) * v[j];
  return r;
}

Vec3 RigidMotion::apply(const Vec3& p) const { return rotate(p) + t; }

RigidMotion RigidMotion::compose(const RigidMotion& inner) const {
  RigidMotion out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.rot[i][j] = 0;
      for (int k = 0; k < 3; ++k) out.rot[i][j] += rot[i][k] * inner.rot[k][j];
    }
  out.t = apply(inner.t);
  return out;
}

RigidMotion RigidMotion::inverse() const {
  RigidMotion out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.rot[i][j] = rot[j][i];  // orthogonal
  out.t = Vec3{0, 0, 0};
  out.t = out.rotate(Vec3{-t.x, -t.y, -t.z});
  return out;
}

const std::vector<RigidMotion>& rotation_group() {
  static const std::vector<RigidMotion> group = [] {
    std::vector<RigidMotion> g;
    int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int perm_sign[6] = {1, -1, -1, 1, 1, -1};
    for (int p = 0; p < 6; ++p) {
      for (int mask = 0; mask < 8; ++mask) {
        int s[3] = {(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1};
        if (perm_sign[p] * s[0] * s[1] * s[2] != 1) continue;  // det +1 only
        RigidMotion m;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) m.rot[i][j] = 0;
        for (int i = 0; i < 3; ++i) m.rot[i][perm[p][i]] = s[i];
        m.t = Vec3{0, 0, 0};
        g.push_back(m);
      }
    }
    return g;
  }();
  return group;
}

std::map<std::pair<int, int>, std::vector<int>> Piece::edge_faces() const {
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& f = faces[fi];
    for (size_t i = 0; i < f.size(); ++i)
      out[std::minmax(f[i], f[(i + 1) % f.size()])].push_back(static_cast<int>(fi));
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Rotation by 90 degrees about the line through `anchor` with direction
// `axis` (a signed unit lattice vector), sending direction `from` to
// direction `to`; from, to and axis are mutually orthogonal.
RigidMotion rotation_about_line(const Vec3& anchor, const int axis[3], const int from[3],
                                const int to[3]) {
  // third basis direction and its image
  int third[3] = {axis[1] * from[2] - axis[2] * from[1], axis[2] * from[0] - axis[0] * from[2],
                  axis[0] * from[1] - axis[1] * from[0]};
  int third_img[3] = {axis[1] * to[2] - axis[2] * to[1], axis[2] * to[0] - axis[0] * to[2],
                      axis[0] * to[1] - axis[1] * to[0]};
  RigidMotion m;
  // columns: images of basis vectors, via decomposition in (axis, from, third)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.rot[i][j] = 0;
  for (int j = 0; j < 3; ++j) {
    // e_j = axis*axis[j] + from*from[j] + third*third[j]
    for (int i = 0; i < 3; ++i)
      m.rot[i][j] = axis[i] * axis[j] + to[i] * from[j] + third_img[i] * third[j];
  }
  m.t = Vec3{0, 0, 0};
  Vec3 ra = m.rotate(anchor);
  m.t = anchor - ra;
  return m;
}

}  // namespace

Piece fold(const Net& net) {
  size_t nf = net.faces.size();

  // Rigid clusters: faces joined across plain (non-fold) interior edges.
  std::set<std::pair<int, int>> fold_edges;
  for (const auto& fo : net.folds) fold_edges.insert(std::minmax(fo.a, fo.b));

  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (size_t fi = 0; fi < nf; ++fi) {
    const auto& f = net.faces[fi];
    for (size_t i = 0; i < f.size(); ++i)
      edge_faces[std::minmax(f[i], f[(i + 1) % f.size()])].push_back(static_cast<int>(fi));
  }

  UnionFind clusters(nf);
  for (const auto& [e, fs] : edge_faces)
    if (fs.size() == 2 && !fold_edges.count(e)) clusters.unite(fs[0], fs[1]);

  // The fold graph over clusters must be a tree rooted at the cluster of
  // the lowest-id face.
  struct Hinge { int parent_cluster, child_cluster, a, b, angle; };
  UnionFind tree(nf);
  std::map<int, std::vector<std::tuple<int, int, int, int>>> adj;  // cluster -> (other, a, b, angle)
  for (const auto& fo : net.folds) {
    auto key = std::minmax(fo.a, fo.b);
    const auto& fs = edge_faces.at(key);
    int c0 = clusters.find(fs[0]);
    int c1 = clusters.find(fs[1]);
    if (c0 == c1) throw FoldError("fold-tree cycle detected: fold edge joins rigidly connected faces");
    if (!tree.unite(c0, c1)) throw FoldError("fold-tree cycle detected");
    adj[c0].emplace_back(c1, fo.a, fo.b, fo.angle);
    adj[c1].emplace_back(c0, fo.a, fo.b, fo.angle);
  }
  for (size_t fi = 0; fi < nf; ++fi)
    if (tree.find(clusters.find(static_cast<int>(fi))) != tree.find(clusters.find(0)))
      throw FoldError("net is not connected through folds: face " + std::to_string(fi) +
                      " is unreachable from the root face");

  // Walk the tree accumulating motions. Fold angle +90 lifts the child
  // side toward +z.
  std::map<int, RigidMotion> motion;
  int root = clusters.find(0);
  motion[root] = RigidMotion::identity();
  std::vector<int> stack{root};
  std::set<int> seen{root};
  auto lift = [&](const Vec2& p) { return Vec3{p.x, p.y, 0}; };
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (const auto& [other, ea, eb, angle] : adj[c]) {
      if (seen.count(other)) continue;
      seen.insert(other);
      Vec3 pa = lift(net.vertex_pos[ea]);
      Vec3 pb = lift(net.vertex_pos[eb]);
      Vec3 d3 = pb - pa;
      int axis[3] = {sgn(d3.x), sgn(d3.y), 0};
      // In-plane normal of the fold line pointing into the child side:
      // probe with the child cluster's face material.
      int child_face = -1;
      const auto& fs = edge_faces.at(std::minmax(ea, eb));
      for (int fi : fs)
        if (clusters.find(fi) == other) child_face = fi;
      // Determine the side of the child face relative to the fold line
      // using its representative vertex off the line.
      const Vec2& a2 = net.vertex_pos[ea];
      const Vec2& b2 = net.vertex_pos[eb];
      int nx = 0, ny = 0;
      for (int v : net.faces[child_face]) {
        const Vec2& p = net.vertex_pos[v];
        Rat cross = (b2.x - a2.x) * (p.y - a2.y) - (b2.y - a2.y) * (p.x - a2.x);
        if (cross != 0) {
          // normal = perp of d, signed toward p
          int side = sgn(cross);
          nx = -axis[1] * side;
          ny = axis[0] * side;
          break;
        }
      }
      if (nx == 0 && ny == 0) throw FoldError("degenerate fold edge");
      int from[3] = {nx, ny, 0};
      int to[3] = {0, 0, angle > 0 ? 1 : -1};
      RigidMotion hinge = rotation_about_line(pa, axis, from, to);
      motion[other] = motion[c].compose(hinge);
      stack.push_back(other);
    }
  }

  // Map vertices; every face incident to a vertex must agree on its image
  // (otherwise the paper would tear at that vertex).
  size_t nv = net.vertex_pos.size();
  std::vector<Vec3> pos(nv);
  std::vector<bool> placed(nv, false);
  for (size_t fi = 0; fi < nf; ++fi) {
    const RigidMotion& m = motion.at(clusters.find(static_cast<int>(fi)));
    for (int v : net.faces[fi]) {
      Vec3 p = m.apply(lift(net.vertex_pos[v]));
      if (placed[v]) {
        if (!(pos[v] == p))
          throw FoldError("net tears at vertex '" + net.vertex_ids[v] +
                          "': folded images disagree");
      } else {
        pos[v] = p;
        placed[v] = true;
      }
    }
  }
  for (size_t v = 0; v < nv; ++v)
    if (!placed[v]) pos[v] = lift(net.vertex_pos[v]);  // unused vertex

  // Letter-tag merging ("the two P meet"): boundary edge pairs with the
  // same letter name must coincide after folding and are glued. Nothing
  // else is merged silently.
  std::map<std::string, std::vector<Net::EdgeTag>> letters;
  for (const auto& t : net.edge_tags)
    if (t.kind == TagKind::Letter) letters[t.name].push_back(t);

  UnionFind verts(nv);
  for (const auto& [name, tags] : letters) {
    if (tags.size() != 2)
      throw FoldError("letter tag '" + name + "' must mark exactly two boundary edges");
    const auto& t0 = tags[0];
    const auto& t1 = tags[1];
    std::pair<Vec3, Vec3> s0{pos[t0.a], pos[t0.b]};
    std::pair<Vec3, Vec3> s1{pos[t1.a], pos[t1.b]};
    if (s0.first == s1.first && s0.second == s1.second) {
      verts.unite(t0.a, t1.a);
      verts.unite(t0.b, t1.b);
    } else if (s0.first == s1.second && s0.second == s1.first) {
      verts.unite(t0.a, t1.b);
      verts.unite(t0.b, t1.a);
    } else {
      throw FoldError("letter-tagged edges '" + name + "' do not coincide after folding");
    }
  }

  // Rebuild with merged vertices.
  std::vector<int> remap(nv, -1);
  Piece piece;
  piece.net_name = net.name;
  for (size_t v = 0; v < nv; ++v) {
    int r = verts.find(static_cast<int>(v));
    if (remap[r] == -1) {
      remap[r] = static_cast<int>(piece.pos.size());
      piece.pos.push_back(pos[r]);
    }
    remap[v] = remap[r];
  }
  for (const auto& f : net.faces) {
    std::vector<int> cyc;
    for (int v : f) cyc.push_back(remap[v]);
    piece.faces.push_back(std::move(cyc));
  }
  for (const auto& [label, v] : net.anchors) piece.anchors[label] = remap[v];
  for (const auto& t : net.edge_tags)
    if (t.kind != TagKind::Letter)
      piece.tags.push_back({t.kind, t.name, remap[t.a], remap[t.b]});

  // Folded faces must stay axis-parallel planar, and no two faces may
  // share a 2D region (a fold driven into another face).
  auto face_plane = [&](const std::vector<int>& f) -> std::pair<int, Rat> {
    for (int axis = 0; axis < 3; ++axis) {
      bool constant = true;
      for (int v : f)
        if (piece.pos[v][axis] != piece.pos[f[0]][axis]) constant = false;
      if (constant) return {axis, piece.pos[f[0]][axis]};
    }
    throw FoldError("internal: folded face is not axis-parallel");
  };
  for (size_t i = 0; i < piece.faces.size(); ++i) {
    auto [ai, ci] = face_plane(piece.faces[i]);
    for (size_t j = i + 1; j < piece.faces.size(); ++j) {
      auto [aj, cj] = face_plane(piece.faces[j]);
      if (ai != aj || ci != cj) continue;
      // Same plane: reject interior overlap exactly (shared 2D area).
      int u = (ai + 1) % 3, w = (ai + 2) % 3;
      auto project = [&](const std::vector<int>& f) {
        std::vector<Vec2> pts;
        for (int v : f) pts.push_back(Vec2{piece.pos[v][u], piece.pos[v][w]});
        return pts;
      };
      std::vector<Vec2> pi = project(piece.faces[i]);
      std::vector<Vec2> pj = project(piece.faces[j]);
      bool crossing = false;
      for (size_t a = 0; a < pi.size() && !crossing; ++a)
        for (size_t b = 0; b < pj.size() && !crossing; ++b)
          if (segments_conflict_public(pi[a], pi[(a + 1) % pi.size()], pj[b],
                                       pj[(b + 1) % pj.size()]))
            crossing = true;
      if (crossing || coplanar_interior_overlap(pi, pj))
        throw FoldError("fold drives faces " + std::to_string(i) + " and " + std::to_string(j) +
                        " into each other");
    }
  }

  return piece;
}

RigidMotion solve_placement(const Piece& piece,
                            const std::vector<std::pair<std::string, Vec3>>& constraints) {
  if (constraints.size() < 3)
    throw PlacementError(PlacementError::Kind::Ambiguous,
                         "placement needs at least 3 anchor constraints");
  std::vector<Vec3> local, target;
  for (const auto& [label, tgt] : constraints) {
    auto it = piece.anchors.find(label);
    if (it == piece.anchors.end())
      throw PlacementError(PlacementError::Kind::UnknownAnchor,
                           "piece has no anchor '" + label + "'");
    local.push_back(piece.pos[it->second]);
    target.push_back(tgt);
  }
  // Collinearity of the local anchor positions makes the motion ambiguous.
  bool collinear = true;
  Vec3 d = local[1] - local[0];
  for (size_t i = 2; i < local.size() && collinear; ++i) {
    Vec3 e = local[i] - local[0];
    Vec3 cross{d.y * e.z - d.z * e.y, d.z * e.x - d.x * e.z, d.x * e.y - d.y * e.x};
    if (!(cross == Vec3{0, 0, 0})) collinear = false;
  }
  if (collinear)
    throw PlacementError(PlacementError::Kind::Ambiguous,
                         "anchor constraints are collinear; add more anchors");

  const RigidMotion* found = nullptr;
  RigidMotion result;
  for (const auto& r : rotation_group()) {
    RigidMotion m = r;
    m.t = target[0] - m.rotate(local[0]);
    bool ok = true;
    for (size_t i = 1; i < local.size(); ++i)
      if (!(m.apply(local[i]) == target[i])) { ok = false; break; }
    if (ok) {
      if (found)
        throw PlacementError(PlacementError::Kind::Ambiguous,
                             "multiple rotations satisfy the constraints");
      result = m;
      found = &result;
    }
  }
  if (!found)
    throw PlacementError(PlacementError::Kind::NoSolution,
                         "no lattice rotation takes the anchors onto their targets");
  return result;
}

Piece apply_motion(const Piece& piece, const RigidMotion& m) {
  Piece out = piece;
  for (auto& p : out.pos) p = m.apply(p);
  return out;
}

}  // namespace boyforge
