#include <doctest.h>

#include "boyforge/net.hpp"

using namespace boyforge;

namespace {

const char* kUnitSquare = R"(# smallest legal net
net square
vertex a 0 0
vertex b 1 0
vertex c 1 1
vertex d 0 1
face a b c d
)";

const char* kTwoSquaresFold = R"(net twosq
vertex a 0 0
vertex b 1 0
vertex c 2 0
vertex d 2 1
vertex e 1 1
vertex f 0 1
face a b e f
face b c d e
fold b e angle +90
)";

}  // namespace

TEST_CASE("a single unit square parses") {
  Net n = parse_net(kUnitSquare);
  CHECK(n.name == "square");
  CHECK(n.vertex_ids.size() == 4);
  CHECK(n.faces.size() == 1);
  CHECK(n.folds.empty());
}

TEST_CASE("two unit squares sharing a folded edge") {
  Net n = parse_net(kTwoSquaresFold);
  CHECK(n.vertex_ids.size() == 6);
  CHECK(n.faces.size() == 2);
  CHECK(n.folds.size() == 1);
  CHECK(n.folds[0].angle == 90);
}

TEST_CASE("fold on a boundary edge is a semantic error") {
  std::string text = std::string(kUnitSquare) + "fold a b angle +90\n";
  try {
    parse_net(text);
    FAIL("expected a semantic error");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::Semantic);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_net("net x\nvertex a 0\n");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::Syntax);
    CHECK(e.line == 2);
  }
}

TEST_CASE("unknown vertex in a face is a syntax error") {
  CHECK_THROWS_AS(parse_net("net x\nvertex a 0 0\nface a b c d\n"), ParseError);
}

TEST_CASE("overlapping faces are rejected") {
  const char* text = R"(net bad
vertex a 0 0
vertex b 2 0
vertex c 2 2
vertex d 0 2
vertex e 1 1
vertex f 3 1
vertex g 3 3
vertex h 1 3
face a b c d
face e f g h
)";
  try {
    parse_net(text);
    FAIL("expected overlap rejection");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseError::Kind::Semantic);
  }
}

TEST_CASE("clockwise faces are rejected") {
  CHECK_THROWS_AS(
      parse_net("net x\nvertex a 0 0\nvertex b 1 0\nvertex c 1 1\nvertex d 0 1\nface a d c b\n"),
      ParseError);
}

TEST_CASE("anchors must sit on the boundary") {
  std::string ok = std::string(kUnitSquare) + "anchor A at a\n";
  Net n = parse_net(ok);
  CHECK(n.anchors.at("A") == 0);
}

TEST_CASE("tags must sit on boundary edges") {
  std::string ok = std::string(kTwoSquaresFold) + "tag arrow ar edge a b\n";
  Net n = parse_net(ok);
  REQUIRE(n.edge_tags.size() == 1);
  CHECK(n.edge_tags[0].kind == TagKind::Arrow);
  std::string bad = std::string(kTwoSquaresFold) + "tag arrow ar edge b e\n";
  CHECK_THROWS_AS(parse_net(bad), ParseError);
}

TEST_CASE("serialization round-trips to an isomorphic net") {
  std::string text = std::string(kTwoSquaresFold) + "anchor A at a\ntag star s1 edge a b\n";
  Net n1 = parse_net(text);
  Net n2 = parse_net(serialize_net(n1));
  CHECK(n1.vertex_ids == n2.vertex_ids);
  CHECK(n1.faces == n2.faces);
  CHECK(n1.folds.size() == n2.folds.size());
  CHECK(n1.anchors == n2.anchors);
  CHECK(n1.edge_tags.size() == n2.edge_tags.size());
  // determinism: identical bytes give identical nets
  Net n3 = parse_net(text);
  CHECK(n3.vertex_pos == n1.vertex_pos);
}

TEST_CASE("assembly plans parse and validate") {
  const char* plan_text = R"(assembly boy
use builtin piece_iv
place piece_i as flap_1 anchors A->A,B->B,C->C
place piece_i as flap_2 anchors A->A',B->B',C->C'
glue tag arrow_1 of flap_1 to darrow_2 of flap_2
)";
  AssemblyPlan plan = parse_assembly(plan_text);
  CHECK(plan.name == "boy");
  REQUIRE(plan.steps.size() == 4);
  CHECK(plan.steps[1].copy_name == "flap_1");
  REQUIRE(plan.steps[1].anchor_map.size() == 3);
  CHECK(plan.steps[1].anchor_map[0] == std::pair<std::string, std::string>{"A", "A"});
  CHECK(plan.steps[2].anchor_map[2] == std::pair<std::string, std::string>{"C", "C'"});
  CHECK(plan.steps[3].kind == AssemblyPlan::Step::Kind::GlueTag);

  // empty plans are rejected
  CHECK_THROWS_AS(parse_assembly("assembly empty\n"), ParseError);
  // duplicate copy names are rejected
  CHECK_THROWS_AS(parse_assembly("assembly x\nuse builtin piece_iv\n"
                                 "place a as c1 anchors A->A\nplace b as c1 anchors A->A\n"),
                  ParseError);
}
