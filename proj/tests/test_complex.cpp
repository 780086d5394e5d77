#include <doctest.h>

#include "boyforge/complex.hpp"
#include "boyforge/topology.hpp"

using namespace boyforge;

TEST_CASE("piece IV: three sheets of four unit faces each") {
  Piece p = piece_iv();
  CHECK(p.faces.size() == 12);
  CHECK(p.pos.size() == 27);

  // the origin appears once per sheet, and every sheet's image contains it
  int at_origin = 0;
  for (const auto& v : p.pos)
    if (v == Vec3{0, 0, 0}) ++at_origin;
  CHECK(at_origin == 3);

  // outer boundary vertices: (-1,-1,0) present, (-1,-1,1) absent
  bool has_corner = false, has_fake = false;
  for (const auto& v : p.pos) {
    if (v == Vec3{-1, -1, 0}) has_corner = true;
    if (v == Vec3{-1, -1, 1}) has_fake = true;
  }
  CHECK(has_corner);
  CHECK(!has_fake);

  // anchors at the nine listed coordinates
  CHECK(p.anchors.size() == 9);
  CHECK(p.pos[p.anchors.at("B'")] == Vec3{1, -1, 0});
  CHECK(p.pos[p.anchors.at("C''")] == Vec3{0, 1, 0});
  CHECK(p.pos[p.anchors.at("A")] == Vec3{-1, 0, 0});
}

TEST_CASE("piece IV as a complex: boundary and symmetry") {
  ImmersedComplex c = complex_from_piece(piece_iv(), "piece_iv");
  CHECK(euler_characteristic(c) == 3);  // three discs
  auto bd = boundary_components(c);
  CHECK(bd.count == 3);
  CHECK(bd.well_formed);
  CHECK(symmetry_check(c));
  CHECK(!is_connected(c));
  CHECK(!is_closed_surface(c).closed);
}

TEST_CASE("anchor table is closed under the cyclic map") {
  AnchorTable t = boy_anchor_table();
  REQUIRE(t.targets.size() == 9);
  auto& m = t.targets;
  CHECK(sigma(m.at("A")) == m.at("A''"));
  CHECK(sigma(m.at("A''")) == m.at("A'"));
  CHECK(sigma(m.at("A'")) == m.at("A"));
  CHECK(sigma(m.at("B")) == m.at("B''"));
  CHECK(sigma(m.at("B''")) == m.at("B'"));
  CHECK(sigma(m.at("B'")) == m.at("B"));
  CHECK(sigma(m.at("C")) == m.at("C''"));
  CHECK(sigma(m.at("C''")) == m.at("C'"));
  CHECK(sigma(m.at("C'")) == m.at("C"));
}

TEST_CASE("gluing a square to a coincident-edge square makes the edge interior") {
  // two unit squares in the z=0 plane sharing the segment x=1
  Piece a;
  a.net_name = "a";
  a.pos = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  a.faces = {{0, 1, 2, 3}};
  Piece b;
  b.net_name = "b";
  b.pos = {{1, 0, 0}, {2, 0, 0}, {2, 1, 0}, {1, 1, 0}};
  b.faces = {{0, 1, 2, 3}};

  ImmersedComplex acc = complex_from_piece(a, "a");
  ImmersedComplex glued = glue(acc, b, "b", {{1, 0}, {2, 3}});
  CHECK(glued.pos.size() == 6);
  int interior = 0;
  for (const auto& [e, fs] : glued.edge_faces())
    if (fs.size() == 2) ++interior;
  CHECK(interior == 1);
  CHECK(glued.log.size() == 2);

  // a third face on the same edge is a non-surface gluing
  Piece c2;
  c2.net_name = "c";
  c2.pos = {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}};
  c2.faces = {{0, 1, 2, 3}};
  CHECK_THROWS_AS(glue(glued, c2, "c", {{1, 0}, {2, 1}}), GlueError);
}

TEST_CASE("gluing non-coincident points is rejected with coordinates") {
  Piece a;
  a.net_name = "a";
  a.pos = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  a.faces = {{0, 1, 2, 3}};
  ImmersedComplex acc = complex_from_piece(a, "a");
  Piece b = a;
  b.pos[0] = Vec3{5, 5, 5};
  try {
    glue(acc, b, "b", {{0, 0}});
    FAIL("expected GlueError");
  } catch (const GlueError& e) {
    CHECK(std::string(e.what()).find("(5, 5, 5)") != std::string::npos);
  }
}

TEST_CASE("assembling just piece IV gives a bounded complex") {
  AssemblyPlan plan = parse_assembly("assembly only_core\nuse builtin piece_iv\n");
  NetLibrary lib;
  lib.table = boy_anchor_table();
  ImmersedComplex c = assemble(plan, lib);
  CHECK(c.faces.size() == 12);
  CHECK(boundary_components(c).count == 3);
}

TEST_CASE("assembly errors carry the step name") {
  AssemblyPlan plan =
      parse_assembly("assembly broken\nuse builtin piece_iv\nplace nosuch as c1 anchors A->A\n");
  NetLibrary lib;
  lib.table = boy_anchor_table();
  try {
    assemble(plan, lib);
    FAIL("expected AssemblyError");
  } catch (const AssemblyError& e) {
    std::string msg = e.what();
    CHECK(msg.find("c1") != std::string::npos);
    CHECK(msg.find("unknown net name") != std::string::npos);
  }
}

TEST_CASE("sigma symmetry holds for piece IV alone and breaks with one flap") {
  ImmersedComplex core = complex_from_piece(piece_iv(), "piece_iv");
  CHECK(symmetry_check(core));

  // attach one perpendicular unit square at an anchor edge: breaks symmetry
  Piece flap;
  flap.net_name = "f";
  flap.pos = {{-1, 0, 0}, {-1, 0, 1}, {-1, -1, 1}, {-1, -1, 0}};
  flap.faces = {{0, 1, 2, 3}};
  ImmersedComplex c = glue(core, flap, "f", {});
  CHECK(!symmetry_check(c));
}
