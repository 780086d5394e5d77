#include "boyforge/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace boyforge {

namespace {

// Link structure of one vertex: faces around v joined across the edges
// at v. Returns +1 single cycle, 0 single arc, -1 anything else.
int link_shape(const ImmersedComplex& c,
               const std::map<std::pair<int, int>, std::vector<int>>& ef, int v) {
  // corner nodes = incident faces; connections via interior edges at v
  std::vector<int> inc;
  for (size_t fi = 0; fi < c.faces.size(); ++fi)
    for (int u : c.faces[fi].cycle)
      if (u == v) inc.push_back(static_cast<int>(fi));
  if (inc.empty()) return -1;

  std::map<int, std::vector<int>> adj;  // face -> neighbours around v
  int boundary_edges_at_v = 0;
  for (const auto& [e, fs] : ef) {
    if (e.first != v && e.second != v) continue;
    if (fs.size() == 1) {
      ++boundary_edges_at_v;
    } else if (fs.size() == 2) {
      adj[fs[0]].push_back(fs[1]);
      adj[fs[1]].push_back(fs[0]);
    } else {
      return -1;
    }
  }
  // Each corner must have exactly two edges at v in its own cycle.
  for (int f : inc) {
    int count = 0;
    const auto& cyc = c.faces[f].cycle;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a == v || b == v) ++count;
    }
    if (count != 2) return -1;
  }
  // Connectivity over the corner graph.
  std::set<int> seen;
  std::vector<int> stack{inc[0]};
  seen.insert(inc[0]);
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int g : adj[f])
      if (seen.insert(g).second) stack.push_back(g);
  }
  if (seen.size() != inc.size()) return -1;
  if (boundary_edges_at_v == 0) {
    // cycle iff every corner has degree 2
    for (int f : inc)
      if (adj[f].size() != 2) return -1;
    return 1;
  }
  if (boundary_edges_at_v == 2) return 0;  // single arc
  return -1;
}

}  // namespace

ClosednessReport is_closed_surface(const ImmersedComplex& c) {
  ClosednessReport rep;
  rep.closed = true;
  auto ef = c.edge_faces();
  for (const auto& [e, fs] : ef)
    if (fs.size() != 2) {
      rep.closed = false;
      rep.bad_edges.push_back(e);
    }
  for (size_t v = 0; v < c.pos.size(); ++v)
    if (link_shape(c, ef, static_cast<int>(v)) != 1) {
      rep.closed = false;
      rep.bad_vertices.push_back(static_cast<int>(v));
    }
  return rep;
}

long long euler_characteristic(const ImmersedComplex& c) {
  return static_cast<long long>(c.pos.size()) - static_cast<long long>(c.edge_faces().size()) +
         static_cast<long long>(c.faces.size());
}

bool is_connected(const ImmersedComplex& c) {
  if (c.pos.empty()) return true;
  std::vector<std::vector<int>> adj(c.pos.size());
  for (const auto& [e, fs] : c.edge_faces()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<int> seen{0};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == c.pos.size();
}

bool orientable(const ImmersedComplex& c) {
  auto ef = c.edge_faces();
  for (const auto& [e, fs] : ef)
    if (fs.size() > 2)
      throw ClassifyError("orientability undefined: edge with more than two faces");

  // Directed-edge lookup per face.
  auto direction = [&](int face, int a, int b) {
    const auto& cyc = c.faces[face].cycle;
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] == a && cyc[(i + 1) % cyc.size()] == b) return +1;
      if (cyc[i] == b && cyc[(i + 1) % cyc.size()] == a) return -1;
    }
    return 0;
  };

  std::vector<int> sign(c.faces.size(), 0);
  for (size_t start = 0; start < c.faces.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      const auto& cyc = c.faces[f].cycle;
      for (size_t i = 0; i < cyc.size(); ++i) {
        auto key = std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]);
        const auto& fs = ef.at(key);
        if (fs.size() != 2) continue;
        int g = fs[0] == f ? fs[1] : fs[0];
        int df = direction(f, key.first, key.second);
        int dg = direction(g, key.first, key.second);
        int need = (df == dg) ? -sign[f] : sign[f];
        if (sign[g] == 0) {
          sign[g] = need;
          stack.push_back(g);
        } else if (sign[g] != need) {
          return false;
        }
      }
    }
  }
  return true;
}

BoundaryReport boundary_components(const ImmersedComplex& c) {
  BoundaryReport rep;
  rep.well_formed = true;
  std::map<int, std::vector<int>> adj;
  for (const auto& e : c.boundary_edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (const auto& [v, ns] : adj)
    if (ns.size() != 2) rep.well_formed = false;

  std::set<int> seen;
  rep.count = 0;
  for (const auto& [v0, _] : adj) {
    if (seen.count(v0)) continue;
    ++rep.count;
    std::vector<int> comp{v0};
    seen.insert(v0);
    std::vector<int> stack{v0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (seen.insert(w).second) {
          stack.push_back(w);
          comp.push_back(w);
        }
    }
    if (rep.well_formed) {
      // Walk the cycle in order for reporting.
      std::vector<int> cyc{comp[0]};
      std::set<int> used{comp[0]};
      int cur = comp[0];
      while (true) {
        int next = -1;
        for (int w : adj[cur])
          if (!used.count(w)) { next = w; break; }
        if (next == -1) break;
        cyc.push_back(next);
        used.insert(next);
        cur = next;
      }
      rep.cycles.push_back(std::move(cyc));
    }
  }
  return rep;
}

namespace {

// Smith normal form diagonal of an integer matrix (destructive).
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // Find the nonzero pivot with the smallest absolute value.
    size_t pr = r, pc = c;
    bool found = false;
    Int best = 0;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = m[i][j] < 0 ? Int(-m[i][j]) : m[i][j];
        if (!found || a < best) {
          best = a;
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(m[r], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pc]);
    if (m[r][c] < 0)
      for (size_t j = c; j < cols; ++j) m[r][j] = -m[r][j];

    bool clean = true;
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Int q = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
      if (m[i][c] != 0) clean = false;
    }
    for (size_t j = c + 1; j < cols; ++j) {
      if (m[r][j] == 0) continue;
      Int q = m[r][j] / m[r][c];
      for (size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][c];
      if (m[r][j] != 0) clean = false;
    }
    if (!clean) continue;  // re-select pivot

    // Divisibility: pivot must divide every remaining entry.
    bool divides = true;
    for (size_t i = r + 1; i < rows && divides; ++i)
      for (size_t j = c + 1; j < cols && divides; ++j)
        if (m[i][j] % m[r][c] != 0) {
          for (size_t k = c; k < cols; ++k) m[r][k] += m[i][k];
          divides = false;
        }
    if (!divides) continue;

    diag.push_back(m[r][c]);
    ++r;
    ++c;
  }
  return diag;
}

size_t rank_mod2(std::vector<std::vector<unsigned char>> m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t i = 0; i < rows; ++i)
      if (i != rank && m[i][c])
        for (size_t j = c; j < cols; ++j) m[i][j] ^= m[rank][j];
    ++rank;
  }
  return rank;
}

}  // namespace

HomologyProfile homology(const ImmersedComplex& c) {
  // Fan-triangulate each face from its lowest-id vertex; the stored
  // complex is left untouched.
  std::vector<std::array<int, 3>> tris;
  std::set<std::pair<int, int>> edge_set;
  for (const auto& f : c.faces) {
    std::vector<int> cyc = f.cycle;
    auto lowest = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), lowest, cyc.end());
    for (size_t i = 1; i + 1 < cyc.size(); ++i)
      tris.push_back({cyc[0], cyc[i], cyc[i + 1]});
  }
  for (const auto& t : tris) {
    edge_set.insert(std::minmax(t[0], t[1]));
    edge_set.insert(std::minmax(t[1], t[2]));
    edge_set.insert(std::minmax(t[0], t[2]));
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  std::map<std::pair<int, int>, int> edge_index;
  for (size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = static_cast<int>(i);

  size_t nv = c.pos.size(), ne = edges.size(), nt = tris.size();

  // boundary_1 : C1 -> C0
  std::vector<std::vector<Int>> d1(nv, std::vector<Int>(ne, 0));
  for (size_t j = 0; j < ne; ++j) {
    d1[edges[j].first][j] -= 1;
    d1[edges[j].second][j] += 1;
  }
  // boundary_2 : C2 -> C1
  std::vector<std::vector<Int>> d2(ne, std::vector<Int>(nt, 0));
  for (size_t j = 0; j < nt; ++j) {
    const auto& t = tris[j];
    int vs[3][2] = {{t[1], t[2]}, {t[0], t[2]}, {t[0], t[1]}};
    int sgns[3] = {1, -1, 1};
    for (int k = 0; k < 3; ++k) {
      auto key = std::minmax(vs[k][0], vs[k][1]);
      int s = (vs[k][0] < vs[k][1]) ? sgns[k] : -sgns[k];
      d2[edge_index[key]][j] += s;
    }
  }

  auto snf1 = smith_diagonal(d1);
  auto snf2 = smith_diagonal(d2);
  size_t rank1 = snf1.size(), rank2 = snf2.size();

  HomologyProfile h;
  h.h0_rank = static_cast<int>(nv - rank1);
  h.h1_rank = static_cast<int>((ne - rank1) - rank2);
  h.h2_rank = static_cast<int>(nt - rank2);
  for (const Int& d : snf2)
    if (d > 1) h.h1_torsion.push_back(d);

  // mod-2 betti numbers
  std::vector<std::vector<unsigned char>> m1(nv, std::vector<unsigned char>(ne, 0));
  for (size_t j = 0; j < ne; ++j) {
    m1[edges[j].first][j] ^= 1;
    m1[edges[j].second][j] ^= 1;
  }
  std::vector<std::vector<unsigned char>> m2(ne, std::vector<unsigned char>(nt, 0));
  for (size_t i = 0; i < ne; ++i)
    for (size_t j = 0; j < nt; ++j) m2[i][j] = static_cast<unsigned char>(((d2[i][j] % 2) + 2) % 2);
  size_t r1 = rank_mod2(m1), r2 = rank_mod2(m2);
  h.b0 = static_cast<int>(nv - r1);
  h.b1 = static_cast<int>((ne - r1) - r2);
  h.b2 = static_cast<int>(nt - r2);
  return h;
}

std::string SurfaceClass::name() const {
  if (orientable) {
    if (boundary_circles == 0) {
      if (genus == 0) return "sphere";
      if (genus == 1) return "torus";
      return "orientable genus-" + std::to_string(genus) + " surface";
    }
    if (genus == 0 && boundary_circles == 1) return "disc";
    if (genus == 0 && boundary_circles == 2) return "annulus";
    return "orientable genus-" + std::to_string(genus) + " surface with " +
           std::to_string(boundary_circles) + " boundary circles";
  }
  if (boundary_circles == 0) {
    if (genus == 1) return "projective plane";
    if (genus == 2) return "Klein bottle";
    return "non-orientable genus-" + std::to_string(genus) + " surface";
  }
  if (genus == 1 && boundary_circles == 1) return "Möbius band";
  return "non-orientable genus-" + std::to_string(genus) + " surface with " +
         std::to_string(boundary_circles) + " boundary circles";
}

SurfaceClass classify(const ImmersedComplex& c) {
  if (!is_connected(c)) throw ClassifyError("classification requires a connected complex");
  auto ef = c.edge_faces();
  for (const auto& [e, fs] : ef)
    if (fs.size() > 2) throw ClassifyError("not a surface complex: edge with >2 faces");
  for (size_t v = 0; v < c.pos.size(); ++v)
    if (link_shape(c, ef, static_cast<int>(v)) < 0)
      throw ClassifyError("not a surface complex: bad vertex link at vertex " +
                          std::to_string(v));

  bool ori = orientable(c);
  long long chi = euler_characteristic(c);
  auto bd = boundary_components(c);
  if (!bd.well_formed) throw ClassifyError("not a surface complex: boundary is not a union of cycles");

  SurfaceClass sc;
  sc.orientable = ori;
  sc.boundary_circles = static_cast<int>(bd.count);
  if (ori) {
    long long g2 = 2 - chi - sc.boundary_circles;
    if (g2 % 2 != 0 || g2 < 0)
      throw ClassifyError("inconsistent invariants for an orientable surface");
    sc.genus = static_cast<int>(g2 / 2);
  } else {
    long long g = 2 - chi - sc.boundary_circles;
    if (g < 1) throw ClassifyError("inconsistent invariants for a non-orientable surface");
    sc.genus = static_cast<int>(g);
  }
  return sc;
}

ImmersedComplex subdivide_face(const ImmersedComplex& c, int face, const Vec3& p, const Vec3& q) {
  ImmersedComplex out = c;

  // Insert a vertex at point `pt` on the target face's boundary. The
  // split applies to the abstract edge it lands on, i.e. to the target
  // face and the face sharing that edge; geometrically coincident edges
  // of other sheets are left alone.
  auto ensure_vertex = [&](const Vec3& pt) -> int {
    for (int v : out.faces[face].cycle)
      if (out.pos[v] == pt) return v;
    auto on_open_edge = [&](int a, int b) {
      const Vec3& pa = out.pos[a];
      const Vec3& pb = out.pos[b];
      bool between = true;
      for (int ax = 0; ax < 3; ++ax) {
        Rat lo = std::min(pa[ax], pb[ax]), hi = std::max(pa[ax], pb[ax]);
        if (pt[ax] < lo || pt[ax] > hi) between = false;
      }
      Vec3 d1 = pt - pa, d2 = pb - pt;
      Vec3 cross{d1.y * d2.z - d1.z * d2.y, d1.z * d2.x - d1.x * d2.z,
                 d1.x * d2.y - d1.y * d2.x};
      return between && cross == Vec3{0, 0, 0} && !(pt == pa) && !(pt == pb);
    };
    int ea = -1, eb = -1;
    {
      const auto& cyc = out.faces[face].cycle;
      for (size_t i = 0; i < cyc.size() && ea < 0; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (on_open_edge(a, b)) { ea = a; eb = b; }
      }
    }
    if (ea < 0) throw std::invalid_argument("subdivision point is not on the face boundary");
    int nv = static_cast<int>(out.pos.size());
    out.pos.push_back(pt);
    for (auto& f : out.faces) {
      for (size_t i = 0; i < f.cycle.size(); ++i) {
        int a = f.cycle[i], b = f.cycle[(i + 1) % f.cycle.size()];
        if ((a == ea && b == eb) || (a == eb && b == ea)) {
          f.cycle.insert(f.cycle.begin() + i + 1, nv);
          break;
        }
      }
    }
    return nv;
  };

  int vp = ensure_vertex(p);
  int vq = ensure_vertex(q);
  if (vp == vq) throw std::invalid_argument("subdivision chord endpoints coincide");

  auto& cyc = out.faces[face].cycle;
  auto ip = std::find(cyc.begin(), cyc.end(), vp);
  auto iq = std::find(cyc.begin(), cyc.end(), vq);
  if (ip == cyc.end() || iq == cyc.end())
    throw std::invalid_argument("chord endpoints not on the face boundary");
  size_t a = ip - cyc.begin(), b = iq - cyc.begin();
  size_t n = cyc.size();
  if ((a + 1) % n == b || (b + 1) % n == a)
    throw std::invalid_argument("chord endpoints are adjacent on the face");

  std::vector<int> half1, half2;
  for (size_t i = a; i != b; i = (i + 1) % n) half1.push_back(cyc[i]);
  half1.push_back(vq);
  for (size_t i = b; i != a; i = (i + 1) % n) half2.push_back(cyc[i]);
  half2.push_back(vp);

  ImmersedComplex::Face f2 = out.faces[face];
  out.faces[face].cycle = half1;
  f2.cycle = half2;
  out.faces.push_back(std::move(f2));
  return out;
}

}  // namespace boyforge
