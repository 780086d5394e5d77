#include "boyforge/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace boyforge {

std::map<std::pair<int, int>, std::vector<int>> ImmersedComplex::edge_faces() const {
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& f = faces[fi].cycle;
    for (size_t i = 0; i < f.size(); ++i)
      out[std::minmax(f[i], f[(i + 1) % f.size()])].push_back(static_cast<int>(fi));
  }
  return out;
}

std::vector<std::pair<int, int>> ImmersedComplex::boundary_edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [e, fs] : edge_faces())
    if (fs.size() == 1) out.push_back(e);
  return out;
}

int ImmersedComplex::vertex_at(const Vec3& p) const {
  for (size_t i = 0; i < pos.size(); ++i)
    if (pos[i] == p) return static_cast<int>(i);
  return -1;
}

std::vector<int> ImmersedComplex::vertices_at(const Vec3& p) const {
  std::vector<int> out;
  for (size_t i = 0; i < pos.size(); ++i)
    if (pos[i] == p) out.push_back(static_cast<int>(i));
  return out;
}

ImmersedComplex complex_from_piece(const Piece& piece, const std::string& copy_name) {
  ImmersedComplex c;
  c.pos = piece.pos;
  for (size_t fi = 0; fi < piece.faces.size(); ++fi)
    c.faces.push_back({piece.faces[fi], copy_name, static_cast<int>(fi)});
  for (const auto& t : piece.tags) {
    c.tags.push_back(t);
    c.tag_piece.push_back(copy_name);
  }
  return c;
}

Piece piece_iv() {
  Piece p;
  p.net_name = "piece_iv";
  // Three 2x2 squares through the origin, one per coordinate plane, each
  // with its own sheet of vertices. Charts: z=0 -> (x,y), y=0 -> (z,x),
  // x=0 -> (y,z); the cyclic map sigma carries each chart to the next.
  struct Chart { int axis; };
  auto embed = [](int axis, const Rat& u, const Rat& v) -> Vec3 {
    switch (axis) {
      case 2: return {u, v, 0};  // z=0, chart (x,y)
      case 1: return {v, 0, u};  // y=0, chart (z,x)
      default: return {0, u, v}; // x=0, chart (y,z)
    }
  };
  for (int axis : {2, 1, 0}) {
    int base = static_cast<int>(p.pos.size());
    for (int j = -1; j <= 1; ++j)
      for (int i = -1; i <= 1; ++i) p.pos.push_back(embed(axis, i, j));
    auto vid = [&](int i, int j) { return base + (j + 1) * 3 + (i + 1); };
    for (int j = -1; j <= 0; ++j)
      for (int i = -1; i <= 0; ++i)
        p.faces.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
  }

  const std::pair<const char*, Vec3> anchor_pts[] = {
      {"A", {-1, 0, 0}},  {"B", {-1, 0, 1}},  {"C", {0, 0, 1}},
      {"A'", {0, -1, 0}}, {"B'", {1, -1, 0}}, {"C'", {1, 0, 0}},
      {"A''", {0, 0, -1}}, {"B''", {0, 1, -1}}, {"C''", {0, 1, 0}},
  };
  for (const auto& [label, pt] : anchor_pts)
    for (size_t v = 0; v < p.pos.size(); ++v)
      if (p.pos[v] == pt && !p.anchors.count(label)) p.anchors[label] = static_cast<int>(v);
  return p;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

ImmersedComplex quotient(const ImmersedComplex& c,
                         const std::vector<std::pair<int, int>>& pairs,
                         const std::string& reason) {
  for (const auto& [a, b] : pairs)
    if (!(c.pos[a] == c.pos[b]))
      throw GlueError("cannot identify non-coincident points " + to_string(c.pos[a]) + " and " +
                      to_string(c.pos[b]));

  UnionFind uf(c.pos.size());
  for (const auto& [a, b] : pairs) uf.unite(a, b);

  ImmersedComplex out;
  std::vector<int> remap(c.pos.size(), -1);
  for (size_t v = 0; v < c.pos.size(); ++v) {
    int r = uf.find(static_cast<int>(v));
    if (remap[r] == -1) {
      remap[r] = static_cast<int>(out.pos.size());
      out.pos.push_back(c.pos[r]);
    }
    remap[v] = remap[r];
  }
  for (const auto& f : c.faces) {
    ImmersedComplex::Face nf = f;
    for (int& v : nf.cycle) v = remap[v];
    out.faces.push_back(std::move(nf));
  }
  out.log = c.log;
  for (const auto& [a, b] : pairs)
    if (a != b) out.log.push_back({c.pos[a], c.pos[b], reason});
  out.tags = c.tags;
  out.tag_piece = c.tag_piece;
  for (auto& t : out.tags) {
    t.a = remap[t.a];
    t.b = remap[t.b];
  }

  for (const auto& [e, fs] : out.edge_faces())
    if (fs.size() > 2)
      throw GlueError("gluing would give edge " + to_string(out.pos[e.first]) + " - " +
                      to_string(out.pos[e.second]) + " more than two incident faces");
  return out;
}

}  // namespace

ImmersedComplex glue(const ImmersedComplex& acc, const Piece& piece,
                     const std::string& copy_name,
                     const std::vector<std::pair<int, int>>& vertex_pairs) {
  ImmersedComplex joined = acc;
  int offset = static_cast<int>(joined.pos.size());
  for (const auto& p : piece.pos) joined.pos.push_back(p);
  for (size_t fi = 0; fi < piece.faces.size(); ++fi) {
    std::vector<int> cyc;
    for (int v : piece.faces[fi]) cyc.push_back(v + offset);
    joined.faces.push_back({std::move(cyc), copy_name, static_cast<int>(fi)});
  }
  for (const auto& t : piece.tags) {
    joined.tags.push_back({t.kind, t.name, t.a + offset, t.b + offset});
    joined.tag_piece.push_back(copy_name);
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : vertex_pairs) pairs.emplace_back(a, b + offset);
  return quotient(joined, pairs, "attach " + copy_name);
}

namespace {

// Geometric segment key: ordered endpoint pair.
using SegKey = std::pair<Vec3, Vec3>;
SegKey seg_key(const Vec3& a, const Vec3& b) { return a < b ? SegKey{a, b} : SegKey{b, a}; }

std::vector<std::pair<int, int>> auto_coincidences(const ImmersedComplex& acc,
                                                   const Piece& piece) {
  std::map<SegKey, std::vector<std::pair<int, int>>> acc_edges, new_edges;
  for (const auto& e : acc.boundary_edges())
    acc_edges[seg_key(acc.pos[e.first], acc.pos[e.second])].push_back(e);

  std::map<std::pair<int, int>, std::vector<int>> pef;
  for (size_t fi = 0; fi < piece.faces.size(); ++fi) {
    const auto& f = piece.faces[fi];
    for (size_t i = 0; i < f.size(); ++i)
      pef[std::minmax(f[i], f[(i + 1) % f.size()])].push_back(static_cast<int>(fi));
  }
  for (const auto& [e, fs] : pef)
    if (fs.size() == 1)
      new_edges[seg_key(piece.pos[e.first], piece.pos[e.second])].push_back(e);

  std::vector<std::pair<int, int>> pairs;
  for (const auto& [key, aes] : acc_edges) {
    auto it = new_edges.find(key);
    if (it == new_edges.end()) continue;
    // Tape only unambiguous coincidences; anything else must be named via
    // glue-tag directives.
    if (aes.size() != 1 || it->second.size() != 1) continue;
    auto [aa, ab] = aes[0];
    auto [na, nb] = it->second[0];
    if (acc.pos[aa] == piece.pos[na]) {
      pairs.emplace_back(aa, na);
      pairs.emplace_back(ab, nb);
    } else {
      pairs.emplace_back(aa, nb);
      pairs.emplace_back(ab, na);
    }
  }
  return pairs;
}

}  // namespace

const Net* NetLibrary::find(const std::string& name) const {
  for (const auto& n : nets)
    if (n.name == name) return &n;
  return nullptr;
}

ImmersedComplex assemble(const AssemblyPlan& plan, const NetLibrary& lib) {
  ImmersedComplex acc;
  bool first = true;
  for (size_t si = 0; si < plan.steps.size(); ++si) {
    const auto& step = plan.steps[si];
    try {
      switch (step.kind) {
        case AssemblyPlan::Step::Kind::UseBuiltinPieceIV: {
          Piece p = piece_iv();
          if (first) {
            acc = complex_from_piece(p, "piece_iv");
            first = false;
          } else {
            acc = glue(acc, p, "piece_iv", auto_coincidences(acc, p));
          }
          break;
        }
        case AssemblyPlan::Step::Kind::Place: {
          const Net* net = lib.find(step.net_name);
          if (!net) throw AssemblyError("unknown net name '" + step.net_name + "'");
          Piece p = fold(*net);
          p.copy_label = step.copy_name;
          std::vector<std::pair<std::string, Vec3>> constraints;
          for (const auto& [local, target] : step.anchor_map) {
            auto it = lib.table.targets.find(target);
            if (it == lib.table.targets.end())
              throw AssemblyError("anchor label '" + target + "' absent from anchor table");
            constraints.emplace_back(local, it->second);
          }
          RigidMotion m = solve_placement(p, constraints);
          Piece placed = apply_motion(p, m);
          if (first) {
            acc = complex_from_piece(placed, step.copy_name);
            first = false;
          } else {
            acc = glue(acc, placed, step.copy_name, auto_coincidences(acc, placed));
          }
          break;
        }
        case AssemblyPlan::Step::Kind::GlueTag: {
          int i1 = -1, i2 = -1;
          for (size_t t = 0; t < acc.tags.size(); ++t) {
            if (acc.tags[t].name == step.tag1 && acc.tag_piece[t] == step.copy1 &&
                static_cast<int>(t) != i2)
              i1 = static_cast<int>(t);
            if (acc.tags[t].name == step.tag2 && acc.tag_piece[t] == step.copy2 &&
                static_cast<int>(t) != i1)
              i2 = static_cast<int>(t);
          }
          if (i1 < 0)
            throw AssemblyError("no tag '" + step.tag1 + "' on copy '" + step.copy1 + "'");
          if (i2 < 0)
            throw AssemblyError("no tag '" + step.tag2 + "' on copy '" + step.copy2 + "'");
          const auto t1 = acc.tags[i1];
          const auto t2 = acc.tags[i2];
          std::vector<std::pair<int, int>> pairs;
          if (acc.pos[t1.a] == acc.pos[t2.a] && acc.pos[t1.b] == acc.pos[t2.b]) {
            pairs = {{t1.a, t2.a}, {t1.b, t2.b}};
          } else if (acc.pos[t1.a] == acc.pos[t2.b] && acc.pos[t1.b] == acc.pos[t2.a]) {
            pairs = {{t1.a, t2.b}, {t1.b, t2.a}};
          } else {
            throw GlueError("tagged edges '" + step.tag1 + "'/'" + step.tag2 +
                            "' are not coincident: " + to_string(acc.pos[t1.a]) + "-" +
                            to_string(acc.pos[t1.b]) + " vs " + to_string(acc.pos[t2.a]) + "-" +
                            to_string(acc.pos[t2.b]));
          }
          // Drop the consumed tags, then merge.
          ImmersedComplex trimmed = acc;
          trimmed.tags.clear();
          trimmed.tag_piece.clear();
          for (size_t t = 0; t < acc.tags.size(); ++t) {
            if (static_cast<int>(t) == i1 || static_cast<int>(t) == i2) continue;
            trimmed.tags.push_back(acc.tags[t]);
            trimmed.tag_piece.push_back(acc.tag_piece[t]);
          }
          acc = quotient(trimmed, pairs,
                         "tag " + step.tag1 + "@" + step.copy1 + " ~ " + step.tag2 + "@" +
                             step.copy2);
          break;
        }
      }
    } catch (const std::exception& e) {
      throw AssemblyError("step " + std::to_string(si + 1) +
                          (step.copy_name.empty() ? "" : " (" + step.copy_name + ")") + ": " +
                          e.what());
    }
  }
  if (first) throw AssemblyError("assembly placed no pieces");
  return acc;
}

namespace {

std::vector<Vec3> canonical_cycle(const std::vector<Vec3>& cyc) {
  std::vector<Vec3> best;
  size_t n = cyc.size();
  for (int rev = 0; rev < 2; ++rev) {
    std::vector<Vec3> seq = cyc;
    if (rev) std::reverse(seq.begin(), seq.end());
    for (size_t s = 0; s < n; ++s) {
      std::vector<Vec3> rot(n);
      for (size_t i = 0; i < n; ++i) rot[i] = seq[(s + i) % n];
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace

bool symmetry_check(const ImmersedComplex& c) {
  std::set<std::vector<Vec3>> faces;
  for (const auto& f : c.faces) {
    std::vector<Vec3> cyc;
    for (int v : f.cycle) cyc.push_back(c.pos[v]);
    faces.insert(canonical_cycle(cyc));
  }
  for (const auto& f : c.faces) {
    std::vector<Vec3> img;
    for (int v : f.cycle) img.push_back(sigma(c.pos[v]));
    if (!faces.count(canonical_cycle(img))) return false;
  }
  return true;
}

InvariantTuple invariant_tuple(const ImmersedComplex& c) {
  InvariantTuple t;
  t.vertices = c.pos.size();
  auto ef = c.edge_faces();
  t.edges = ef.size();
  t.faces = c.faces.size();
  t.euler = static_cast<long long>(t.vertices) - static_cast<long long>(t.edges) +
            static_cast<long long>(t.faces);

  // Boundary components: connected components of the boundary graph.
  std::map<int, std::vector<int>> badj;
  size_t bedges = 0;
  for (const auto& [e, fs] : ef) {
    if (fs.size() != 1) continue;
    badj[e.first].push_back(e.second);
    badj[e.second].push_back(e.first);
    ++bedges;
  }
  std::set<int> seen;
  size_t comps = 0;
  for (const auto& [v, _] : badj) {
    if (seen.count(v)) continue;
    ++comps;
    std::vector<int> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : badj[u])
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  t.boundary_components = comps;

  std::map<std::string, size_t> prov;
  for (const auto& f : c.faces) ++prov[f.piece];
  t.face_provenance.assign(prov.begin(), prov.end());
  return t;
}

}  // namespace boyforge
