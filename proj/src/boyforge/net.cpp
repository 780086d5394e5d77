#include "boyforge/net.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "boyforge/geometry2d.hpp"

namespace boyforge {

std::string tag_kind_name(TagKind k) {
  switch (k) {
    case TagKind::Arrow: return "arrow";
    case TagKind::DoubleArrow: return "double-arrow";
    case TagKind::Star: return "star";
    case TagKind::Letter: return "letter";
  }
  return "?";
}

std::optional<TagKind> tag_kind_from_name(const std::string& s) {
  if (s == "arrow") return TagKind::Arrow;
  if (s == "double-arrow") return TagKind::DoubleArrow;
  if (s == "star") return TagKind::Star;
  if (s == "letter") return TagKind::Letter;
  return std::nullopt;
}

int Net::vertex_index(const std::string& id) const {
  for (size_t i = 0; i < vertex_ids.size(); ++i)
    if (vertex_ids[i] == id) return static_cast<int>(i);
  return -1;
}

std::map<std::pair<int, int>, int> Net::edge_face_count() const {
  std::map<std::pair<int, int>, int> count;
  for (const auto& f : faces) {
    for (size_t i = 0; i < f.size(); ++i) {
      int a = f[i], b = f[(i + 1) % f.size()];
      ++count[std::minmax(a, b)];
    }
  }
  return count;
}

bool Net::is_boundary_edge(int a, int b) const {
  auto count = edge_face_count();
  auto it = count.find(std::minmax(a, b));
  return it != count.end() && it->second == 1;
}

namespace {

struct Token {
  std::string text;
  int line, column;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::vector<Token> toks;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; continue; }
      if (raw[i] == '#') break;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#') ++i;
      toks.push_back({raw.substr(start, i - start), ln, static_cast<int>(start + 1)});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

[[noreturn]] void syntax_error(const Token& t, const std::string& msg) {
  throw ParseError(ParseError::Kind::Syntax, t.line, t.column, msg);
}

[[noreturn]] void semantic_error(int line, const std::string& msg) {
  throw ParseError(ParseError::Kind::Semantic, line, 1, msg);
}

Rat parse_coord(const Token& t) {
  try {
    return parse_rat(t.text);
  } catch (const std::invalid_argument& e) {
    syntax_error(t, e.what());
  }
}

void validate_net(const Net& net, int decl_line) {
  if (net.faces.empty()) semantic_error(decl_line, "net '" + net.name + "' has no faces");

  // Per-face checks: length, distinct vertices, axis-parallel edges,
  // simplicity, counterclockwise orientation.
  for (size_t fi = 0; fi < net.faces.size(); ++fi) {
    const auto& f = net.faces[fi];
    if (f.size() < 4)
      semantic_error(decl_line, "face " + std::to_string(fi) + " has fewer than 4 vertices");
    std::set<int> uniq(f.begin(), f.end());
    if (uniq.size() != f.size())
      semantic_error(decl_line, "face " + std::to_string(fi) + " repeats a vertex");
    std::vector<Vec2> pts;
    for (int v : f) pts.push_back(net.vertex_pos[v]);
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (pts[i] == pts[j])
          semantic_error(decl_line, "face " + std::to_string(fi) +
                                        " has two vertices at the same position");
    for (size_t i = 0; i < f.size(); ++i) {
      const Vec2& a = pts[i];
      const Vec2& b = pts[(i + 1) % f.size()];
      if ((a.x == b.x) == (a.y == b.y))
        semantic_error(decl_line, "face " + std::to_string(fi) +
                                      " has a non-grid (non-axis-parallel) edge");
    }
    // Simplicity: edges may meet only at shared endpoints.
    size_t m = f.size();
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j)
        if (segments_conflict_public(pts[i], pts[(i + 1) % m], pts[j], pts[(j + 1) % m]))
          semantic_error(decl_line, "face " + std::to_string(fi) + " is not a simple polygon");
    if (signed_area2(pts) <= 0)
      semantic_error(decl_line, "face " + std::to_string(fi) + " is not counterclockwise");
  }

  // Conforming tiling: edges of distinct faces may only meet at endpoint
  // positions, as identical index pairs (interior edges), or as exactly
  // coincident segments (slit banks).
  struct E { int a, b, face; };
  std::vector<E> all;
  for (size_t fi = 0; fi < net.faces.size(); ++fi) {
    const auto& f = net.faces[fi];
    for (size_t i = 0; i < f.size(); ++i)
      all.push_back({f[i], f[(i + 1) % f.size()], static_cast<int>(fi)});
  }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].face == all[j].face) continue;
      std::set<int> si{all[i].a, all[i].b}, sj{all[j].a, all[j].b};
      if (si == sj) continue;  // shared edge
      if (segments_conflict_public(net.vertex_pos[all[i].a], net.vertex_pos[all[i].b],
                            net.vertex_pos[all[j].a], net.vertex_pos[all[j].b]))
        semantic_error(decl_line, "faces " + std::to_string(all[i].face) + " and " +
                                      std::to_string(all[j].face) +
                                      " have improperly touching edges");
    }
  }

  auto counts = net.edge_face_count();
  for (const auto& [e, c] : counts)
    if (c > 2)
      semantic_error(decl_line, "edge " + net.vertex_ids[e.first] + "-" +
                                    net.vertex_ids[e.second] + " borders more than 2 faces");

  // Interior-overlap check via representative interior points. Every
  // polygon vertex lies on the coordinate grid of the net, so a point
  // offset by half the minimum coordinate gap from a lex-min corner lies
  // in an open grid cell, and each face contains the whole cell or none.
  std::set<Rat> xs, ys;
  for (const auto& p : net.vertex_pos) { xs.insert(p.x); ys.insert(p.y); }
  Rat gap = 1;
  bool have_gap = false;
  auto min_gap = [&](const std::set<Rat>& s) {
    Rat prev;
    bool first = true;
    for (const Rat& v : s) {
      if (!first) {
        Rat d = v - prev;
        if (!have_gap || d < gap) { gap = d; have_gap = true; }
      }
      prev = v;
      first = false;
    }
  };
  min_gap(xs);
  min_gap(ys);
  Rat delta = have_gap ? gap / 2 : Rat(1, 2);

  std::vector<std::vector<Vec2>> polys;
  std::vector<Vec2> reps;
  for (const auto& f : net.faces) {
    std::vector<Vec2> pts;
    for (int v : f) pts.push_back(net.vertex_pos[v]);
    Vec2 lo = pts[0];
    for (const auto& p : pts)
      if (p < lo) lo = p;
    reps.push_back(Vec2{lo.x + delta, lo.y + delta});
    polys.push_back(std::move(pts));
  }
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t j = 0; j < polys.size(); ++j)
      if (i != j && strictly_inside(reps[i], polys[j]))
        semantic_error(decl_line, "faces " + std::to_string(i) + " and " + std::to_string(j) +
                                      " overlap");

  // Folds: interior edges only, each folded at most once.
  std::set<std::pair<int, int>> folded;
  for (const auto& fo : net.folds) {
    auto key = std::minmax(fo.a, fo.b);
    auto it = counts.find(key);
    if (it == counts.end())
      semantic_error(decl_line, "fold edge " + net.vertex_ids[fo.a] + "-" +
                                    net.vertex_ids[fo.b] + " is not an edge of any face");
    if (it->second != 2)
      semantic_error(decl_line, "fold edge " + net.vertex_ids[fo.a] + "-" +
                                    net.vertex_ids[fo.b] +
                                    " is not shared by exactly two faces");
    if (!folded.insert(key).second)
      semantic_error(decl_line, "duplicate fold on edge " + net.vertex_ids[fo.a] + "-" +
                                    net.vertex_ids[fo.b]);
  }

  // Anchors and tags live on the boundary.
  for (const auto& [label, v] : net.anchors) {
    bool on_bd = false;
    for (const auto& [e, c] : counts)
      if (c == 1 && (e.first == v || e.second == v)) on_bd = true;
    if (!on_bd)
      semantic_error(decl_line, "anchor " + label + " is not on the net boundary");
  }
  for (const auto& t : net.edge_tags) {
    auto it = counts.find(std::minmax(t.a, t.b));
    if (it == counts.end() || it->second != 1)
      semantic_error(decl_line, "tag " + t.name + " is not on a boundary edge");
  }
}

Net parse_one_net(const std::vector<std::vector<Token>>& lines, size_t& idx) {
  const auto& header = lines[idx];
  if (header[0].text != "net") syntax_error(header[0], "expected 'net <name>'");
  if (header.size() != 2) syntax_error(header[0], "expected 'net <name>'");
  Net net;
  net.name = header[1].text;
  int decl_line = header[0].line;
  ++idx;

  std::map<std::string, int> index;
  auto need_vertex = [&](const Token& t) {
    auto it = index.find(t.text);
    if (it == index.end()) syntax_error(t, "unknown vertex id '" + t.text + "'");
    return it->second;
  };

  for (; idx < lines.size(); ++idx) {
    const auto& toks = lines[idx];
    const std::string& kw = toks[0].text;
    if (kw == "net") break;
    if (kw == "vertex") {
      if (toks.size() != 4) syntax_error(toks[0], "expected 'vertex <id> <x> <y>'");
      if (index.count(toks[1].text))
        semantic_error(toks[1].line, "duplicate vertex id '" + toks[1].text + "'");
      index[toks[1].text] = static_cast<int>(net.vertex_ids.size());
      net.vertex_ids.push_back(toks[1].text);
      net.vertex_pos.push_back(Vec2{parse_coord(toks[2]), parse_coord(toks[3])});
    } else if (kw == "face") {
      if (toks.size() < 4) syntax_error(toks[0], "a face needs at least 3 vertices");
      std::vector<int> f;
      for (size_t i = 1; i < toks.size(); ++i) f.push_back(need_vertex(toks[i]));
      net.faces.push_back(std::move(f));
    } else if (kw == "fold") {
      if (toks.size() != 5 || toks[3].text != "angle")
        syntax_error(toks[0], "expected 'fold <id_a> <id_b> angle <+90|-90>'");
      int a = need_vertex(toks[1]);
      int b = need_vertex(toks[2]);
      int angle;
      if (toks[4].text == "+90" || toks[4].text == "90") angle = 90;
      else if (toks[4].text == "-90") angle = -90;
      else syntax_error(toks[4], "fold angle must be +90 or -90");
      net.folds.push_back({a, b, angle});
    } else if (kw == "anchor") {
      if (toks.size() != 4 || toks[2].text != "at")
        syntax_error(toks[0], "expected 'anchor <LABEL> at <id>'");
      if (net.anchors.count(toks[1].text))
        semantic_error(toks[1].line, "duplicate anchor label '" + toks[1].text + "'");
      net.anchors[toks[1].text] = need_vertex(toks[3]);
    } else if (kw == "tag") {
      if (toks.size() != 6 || toks[3].text != "edge")
        syntax_error(toks[0], "expected 'tag <kind> <name> edge <id_a> <id_b>'");
      auto kind = tag_kind_from_name(toks[1].text);
      if (!kind) syntax_error(toks[1], "unknown tag kind '" + toks[1].text + "'");
      net.edge_tags.push_back({*kind, toks[2].text, need_vertex(toks[4]), need_vertex(toks[5])});
    } else {
      syntax_error(toks[0], "unknown directive '" + kw + "'");
    }
  }

  validate_net(net, decl_line);
  return net;
}

}  // namespace

std::vector<Net> parse_nets(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty())
    throw ParseError(ParseError::Kind::Syntax, 1, 1, "empty net file");
  std::vector<Net> nets;
  size_t idx = 0;
  while (idx < lines.size()) {
    if (lines[idx][0].text != "net")
      syntax_error(lines[idx][0], "expected 'net <name>'");
    nets.push_back(parse_one_net(lines, idx));
  }
  std::set<std::string> names;
  for (const auto& n : nets)
    if (!names.insert(n.name).second)
      throw ParseError(ParseError::Kind::Semantic, 1, 1, "duplicate net name '" + n.name + "'");
  return nets;
}

Net parse_net(const std::string& text) {
  auto nets = parse_nets(text);
  if (nets.size() != 1)
    throw ParseError(ParseError::Kind::Semantic, 1, 1,
                     "expected exactly one net, found " + std::to_string(nets.size()));
  return std::move(nets[0]);
}

std::string serialize_net(const Net& net) {
  std::ostringstream out;
  out << "net " << net.name << "\n";
  for (size_t i = 0; i < net.vertex_ids.size(); ++i)
    out << "vertex " << net.vertex_ids[i] << " " << format_rat(net.vertex_pos[i].x) << " "
        << format_rat(net.vertex_pos[i].y) << "\n";
  for (const auto& f : net.faces) {
    out << "face";
    for (int v : f) out << " " << net.vertex_ids[v];
    out << "\n";
  }
  for (const auto& fo : net.folds)
    out << "fold " << net.vertex_ids[fo.a] << " " << net.vertex_ids[fo.b] << " angle "
        << (fo.angle > 0 ? "+90" : "-90") << "\n";
  for (const auto& [label, v] : net.anchors)
    out << "anchor " << label << " at " << net.vertex_ids[v] << "\n";
  for (const auto& t : net.edge_tags)
    out << "tag " << tag_kind_name(t.kind) << " " << t.name << " edge " << net.vertex_ids[t.a]
        << " " << net.vertex_ids[t.b] << "\n";
  return out.str();
}

AssemblyPlan parse_assembly(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty())
    throw ParseError(ParseError::Kind::Syntax, 1, 1, "empty assembly file");

  AssemblyPlan plan;
  size_t idx = 0;
  if (lines[0][0].text != "assembly" || lines[0].size() != 2)
    syntax_error(lines[0][0], "expected 'assembly <name>'");
  plan.name = lines[0][1].text;
  ++idx;

  std::set<std::string> copies;
  for (; idx < lines.size(); ++idx) {
    const auto& toks = lines[idx];
    const std::string& kw = toks[0].text;
    if (kw == "use") {
      if (toks.size() != 3 || toks[1].text != "builtin" || toks[2].text != "piece_iv")
        syntax_error(toks[0], "expected 'use builtin piece_iv'");
      AssemblyPlan::Step s;
      s.kind = AssemblyPlan::Step::Kind::UseBuiltinPieceIV;
      plan.steps.push_back(std::move(s));
      copies.insert("piece_iv");
    } else if (kw == "place") {
      if (toks.size() != 6 || toks[2].text != "as" || toks[4].text != "anchors")
        syntax_error(toks[0], "expected 'place <net> as <copy> anchors <L>-><T>,...'");
      AssemblyPlan::Step s;
      s.kind = AssemblyPlan::Step::Kind::Place;
      s.net_name = toks[1].text;
      s.copy_name = toks[3].text;
      if (!copies.insert(s.copy_name).second)
        semantic_error(toks[3].line, "duplicate placement step name '" + s.copy_name + "'");
      std::string spec = toks[5].text;
      size_t pos = 0;
      while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        std::string item = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t arrow = item.find("->");
        if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= item.size())
          syntax_error(toks[5], "bad anchor constraint '" + item + "'");
        s.anchor_map.emplace_back(item.substr(0, arrow), item.substr(arrow + 2));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (s.anchor_map.empty()) syntax_error(toks[5], "placement has no anchor constraints");
      plan.steps.push_back(std::move(s));
    } else if (kw == "glue") {
      if (toks.size() != 9 || toks[1].text != "tag" || toks[3].text != "of" ||
          toks[5].text != "to" || toks[7].text != "of")
        syntax_error(toks[0], "expected 'glue tag <name1> of <copy1> to <name2> of <copy2>'");
      AssemblyPlan::Step s;
      s.kind = AssemblyPlan::Step::Kind::GlueTag;
      s.tag1 = toks[2].text;
      s.copy1 = toks[4].text;
      s.tag2 = toks[6].text;
      s.copy2 = toks[8].text;
      if (!copies.count(s.copy1))
        semantic_error(toks[4].line, "glue references unknown copy '" + s.copy1 + "'");
      if (!copies.count(s.copy2))
        semantic_error(toks[7].line, "glue references unknown copy '" + s.copy2 + "'");
      plan.steps.push_back(std::move(s));
    } else {
      syntax_error(toks[0], "unknown directive '" + kw + "'");
    }
  }

  bool places = false;
  for (const auto& s : plan.steps)
    if (s.kind != AssemblyPlan::Step::Kind::GlueTag) places = true;
  if (!places)
    throw ParseError(ParseError::Kind::Semantic, 1, 1,
                     "an assembly must place at least one piece");
  return plan;
}

}  // namespace boyforge
