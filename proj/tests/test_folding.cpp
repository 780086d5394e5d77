#include <doctest.h>

#include <random>

#include "boyforge/folding.hpp"

using namespace boyforge;

namespace {

Net square_net() {
  return parse_net("net sq\nvertex a 0 0\nvertex b 1 0\nvertex c 1 1\nvertex d 0 1\nface a b c d\n");
}

Net two_square_fold(int angle) {
  std::string text =
      "net two\nvertex a 0 0\nvertex b 1 0\nvertex c 2 0\nvertex d 2 1\nvertex e 1 1\n"
      "vertex f 0 1\nface a b e f\nface b c d e\nfold b e angle ";
  text += angle > 0 ? "+90" : "-90";
  text += "\n";
  return parse_net(text);
}

}  // namespace

TEST_CASE("the rotation group has 24 elements closed under composition") {
  const auto& g = rotation_group();
  CHECK(g.size() == 24);
  for (const auto& a : g) {
    // det +1 via triple product of columns
    Vec3 c0{Rat(a.rot[0][0]), Rat(a.rot[1][0]), Rat(a.rot[2][0])};
    Vec3 c1{Rat(a.rot[0][1]), Rat(a.rot[1][1]), Rat(a.rot[2][1])};
    Vec3 c2{Rat(a.rot[0][2]), Rat(a.rot[1][2]), Rat(a.rot[2][2])};
    Rat det = c0.x * (c1.y * c2.z - c1.z * c2.y) - c1.x * (c0.y * c2.z - c0.z * c2.y) +
              c2.x * (c0.y * c1.z - c0.z * c1.y);
    CHECK(det == 1);
    RigidMotion inv = a.inverse();
    RigidMotion id = a.compose(inv);
    CHECK(id == RigidMotion::identity());
  }
}

TEST_CASE("folding a single square is the identity embedding") {
  Piece p = fold(square_net());
  CHECK(p.faces.size() == 1);
  CHECK(p.pos.size() == 4);
  for (const auto& v : p.pos) CHECK(v.z == 0);
}

TEST_CASE("a +90 fold lifts the far square upward") {
  Piece p = fold(two_square_fold(+90));
  CHECK(p.pos.size() == 6);
  // net vertex c was at (2,0): folded to x=1 plane, z=+1
  bool found = false;
  for (const auto& v : p.pos)
    if (v == Vec3{1, 0, 1}) found = true;
  CHECK(found);
  // dihedral is 90 degrees: planes z=0 and x=1
}

TEST_CASE("a -90 fold sends the far square downward") {
  Piece p = fold(two_square_fold(-90));
  bool found = false;
  for (const auto& v : p.pos)
    if (v == Vec3{1, 0, -1}) found = true;
  CHECK(found);
}

TEST_CASE("fold isometry: every edge length squared is preserved exactly") {
  std::mt19937 rng(12345);
  int built = 0;
  for (int trial = 0; trial < 400 && built < 200; ++trial) {
    // random strip polyomino of n cells growing to the right/up, folds on
    // random interior edges
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> cells{{0, 0}};
    while (static_cast<int>(cells.size()) < n) {
      auto [x, y] = cells.back();
      if (rng() % 2) ++x;
      else ++y;
      if (std::find(cells.begin(), cells.end(), std::make_pair(x, y)) == cells.end())
        cells.emplace_back(x, y);
    }
    // build net text
    std::map<std::pair<int, int>, std::string> vid;
    std::string verts, faces, folds;
    auto idfor = [&](int x, int y) {
      auto key = std::make_pair(x, y);
      if (!vid.count(key)) {
        std::string id = "v" + std::to_string(x) + "_" + std::to_string(y);
        vid[key] = id;
        verts += "vertex " + id + " " + std::to_string(x) + " " + std::to_string(y) + "\n";
      }
      return vid[key];
    };
    for (auto [x, y] : cells) {
      std::string a = idfor(x, y), b = idfor(x + 1, y), c = idfor(x + 1, y + 1),
                  d = idfor(x, y + 1);
      faces += "face " + a + " " + b + " " + c + " " + d + "\n";
    }
    for (size_t i = 0; i + 1 < cells.size(); ++i) {
      auto [x1, y1] = cells[i];
      auto [x2, y2] = cells[i + 1];
      // shared edge between consecutive strip cells
      std::string ea, eb;
      if (x2 == x1 + 1) {
        ea = idfor(x2, y1);
        eb = idfor(x2, y1 + 1);
      } else {
        ea = idfor(x1, y2);
        eb = idfor(x1 + 1, y2);
      }
      if (rng() % 2) folds += "fold " + ea + " " + eb + " angle " + (rng() % 2 ? "+90" : "-90") + "\n";
    }
    std::string text = "net r\n" + verts + faces + folds;
    Net net = parse_net(text);
    Piece piece;
    try {
      piece = fold(net);
    } catch (const FoldError&) {
      continue;  // folded into itself; the error is the correct outcome
    }
    ++built;
    // edge lengths in 3D equal net lengths, exactly
    for (const auto& f : net.faces) {
      for (size_t i = 0; i < f.size(); ++i) {
        int a = f[i], b = f[(i + 1) % f.size()];
        Vec2 d2 = net.vertex_pos[a] - net.vertex_pos[b];
        Vec3 d3 = piece.pos[a] - piece.pos[b];
        CHECK(squared_length(d3) == squared_length(d2));
      }
    }
    // all faces axis-parallel
    for (const auto& f : piece.faces) {
      bool axis_parallel = false;
      for (int axis = 0; axis < 3; ++axis) {
        bool constant = true;
        for (int v : f)
          if (piece.pos[v][axis] != piece.pos[f[0]][axis]) constant = false;
        if (constant) axis_parallel = true;
      }
      CHECK(axis_parallel);
    }
  }
  CHECK(built >= 200);
}

TEST_CASE("placement: identity constraints give the identity motion") {
  Piece p = fold(square_net());
  p.anchors["P"] = 0;
  p.anchors["Q"] = 1;
  p.anchors["R"] = 2;
  RigidMotion m = solve_placement(p, {{"P", Vec3{0, 0, 0}}, {"Q", Vec3{1, 0, 0}}, {"R", Vec3{1, 1, 0}}});
  CHECK(m == RigidMotion::identity());
}

TEST_CASE("placement: forced quarter turn about z") {
  Piece p = fold(square_net());
  p.anchors["P"] = 0;  // (0,0,0)
  p.anchors["Q"] = 1;  // (1,0,0)
  p.anchors["R"] = 2;  // (1,1,0)
  RigidMotion m = solve_placement(
      p, {{"P", Vec3{0, 0, 0}}, {"Q", Vec3{0, 1, 0}}, {"R", Vec3{-1, 1, 0}}});
  CHECK(m.apply(Vec3{1, 0, 0}) == Vec3{0, 1, 0});
  CHECK(m.apply(Vec3{0, 0, 0}) == Vec3{0, 0, 0});
  CHECK(m.rot[0][1] == -1);
  CHECK(m.rot[1][0] == 1);
}

TEST_CASE("placement uniqueness: at most one rotation fits noncollinear anchors") {
  Piece p = fold(square_net());
  p.anchors["P"] = 0;
  p.anchors["Q"] = 1;
  p.anchors["R"] = 2;
  // count satisfying rotations by brute force
  std::vector<Vec3> local{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
  std::vector<Vec3> target{{0, 0, 0}, {0, 1, 0}, {-1, 1, 0}};
  int count = 0;
  for (const auto& r : rotation_group()) {
    RigidMotion m = r;
    m.t = target[0] - m.rotate(local[0]);
    bool ok = true;
    for (size_t i = 1; i < local.size(); ++i)
      if (!(m.apply(local[i]) == target[i])) ok = false;
    if (ok) ++count;
  }
  CHECK(count == 1);
}

TEST_CASE("placement failure modes") {
  Piece p = fold(square_net());
  p.anchors["P"] = 0;
  p.anchors["Q"] = 1;
  p.anchors["R"] = 2;
  // wrong distances: no solution
  try {
    solve_placement(p, {{"P", Vec3{0, 0, 0}}, {"Q", Vec3{2, 0, 0}}, {"R", Vec3{2, 1, 0}}});
    FAIL("expected NoSolution");
  } catch (const PlacementError& e) {
    CHECK(e.kind == PlacementError::Kind::NoSolution);
  }
  // collinear anchors: ambiguous
  p.anchors["S"] = 3;
  try {
    solve_placement(p, {{"P", Vec3{0, 0, 0}}, {"Q", Vec3{1, 0, 0}}});
    FAIL("expected Ambiguous");
  } catch (const PlacementError& e) {
    CHECK(e.kind == PlacementError::Kind::Ambiguous);
  }
  try {
    solve_placement(p, {{"P", Vec3{0, 0, 0}}, {"Q", Vec3{1, 0, 0}}, {"X", Vec3{0, 0, 1}}});
    FAIL("expected UnknownAnchor");
  } catch (const PlacementError& e) {
    CHECK(e.kind == PlacementError::Kind::UnknownAnchor);
  }
}

TEST_CASE("apply_motion then its inverse is the identity") {
  Piece p = fold(two_square_fold(+90));
  RigidMotion m = rotation_group()[7];
  m.t = Vec3{Rat(1, 2), 0, -3};
  Piece q = apply_motion(apply_motion(p, m), m.inverse());
  CHECK(q.pos == p.pos);
}

TEST_CASE("translation by 1/2 shifts coordinates exactly") {
  Piece p = fold(square_net());
  RigidMotion m = RigidMotion::identity();
  m.t = Vec3{Rat(1, 2), 0, 0};
  Piece q = apply_motion(p, m);
  CHECK(q.pos[0] == Vec3{Rat(1, 2), 0, 0});
  CHECK(q.pos[1] == Vec3{Rat(3, 2), 0, 0});
}

TEST_CASE("fold cycles are rejected") {
  // 2x2 block with all four interior edges folded forms a cycle
  const char* text = R"(net block
vertex a 0 0
vertex b 1 0
vertex c 2 0
vertex d 0 1
vertex e 1 1
vertex f 2 1
vertex g 0 2
vertex h 1 2
vertex i 2 2
face a b e d
face b c f e
face d e h g
face e f i h
fold b e angle +90
fold e f angle +90
fold e h angle +90
fold d e angle +90
)";
  CHECK_THROWS_AS(fold(parse_net(text)), FoldError);
}

TEST_CASE("the slit mechanism: letter-tagged banks meet and merge") {
  // Fold line along y=1 with a hinge for x in [0,1] and a slit for x in
  // [1,2]: both slit banks lie on the fold line, so they stay coincident
  // after the fold and are taped; the two B corners merge.
  const char* text = R"(net slit
vertex a0 0 0
vertex a2 2 0
vertex b1 2 1
vertex m1 1 1
vertex m0 0 1
vertex t0 0 2
vertex t2 2 2
vertex b2 2 1
face a0 a2 b1 m1 m0
face m0 m1 b2 t2 t0
fold m0 m1 angle +90
tag letter B edge b1 m1
tag letter B edge m1 b2
)";
  Net net = parse_net(text);
  Piece p = fold(net);
  // b1 and b2 coincide after folding and merge
  CHECK(p.pos.size() == 7);
  bool has_upright = false;
  for (const auto& v : p.pos)
    if (v == Vec3{2, 1, 1}) has_upright = true;
  CHECK(has_upright);
  // the taped slit and the hinge are both interior edges now
  auto ef = p.edge_faces();
  int interior = 0;
  for (const auto& [e, fs] : ef)
    if (fs.size() == 2) ++interior;
  CHECK(interior == 2);
}
