#pragma once

#include "boyforge/complex.hpp"

namespace boyforge::testhelpers {

// The surface of the unit cube [0,1]^3: 8 vertices, 12 edges, 6 faces.
inline ImmersedComplex cube_surface() {
  ImmersedComplex c;
  for (int z = 0; z <= 1; ++z)
    for (int y = 0; y <= 1; ++y)
      for (int x = 0; x <= 1; ++x) c.pos.push_back(Vec3{x, y, z});
  auto v = [](int x, int y, int z) { return z * 4 + y * 2 + x; };
  auto add = [&](int a, int b, int cc, int d) {
    c.faces.push_back({{a, b, cc, d}, "cube", static_cast<int>(c.faces.size())});
  };
  add(v(0, 0, 0), v(0, 1, 0), v(1, 1, 0), v(1, 0, 0));  // z=0, inward normal up
  add(v(0, 0, 1), v(1, 0, 1), v(1, 1, 1), v(0, 1, 1));  // z=1
  add(v(0, 0, 0), v(1, 0, 0), v(1, 0, 1), v(0, 0, 1));  // y=0
  add(v(0, 1, 0), v(0, 1, 1), v(1, 1, 1), v(1, 1, 0));  // y=1
  add(v(0, 0, 0), v(0, 0, 1), v(0, 1, 1), v(0, 1, 0));  // x=0
  add(v(1, 0, 0), v(1, 1, 0), v(1, 1, 1), v(1, 0, 1));  // x=1
  return c;
}

// 4x4 grid with opposite sides identified: a torus. Positions are labels
// only (abstract-topology tests).
inline ImmersedComplex torus_grid4() {
  ImmersedComplex c;
  auto v = [&](int i, int j) { return (i % 4) * 4 + (j % 4); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.pos.push_back(Vec3{i, j, (i * 31 + j * 17) % 7});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      c.faces.push_back({{v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)},
                         "torus",
                         i * 4 + j});
  return c;
}

// Twisted 5-square strip: the Möbius band.
inline ImmersedComplex mobius_strip5() {
  ImmersedComplex c;
  for (int i = 0; i < 5; ++i) c.pos.push_back(Vec3{i, 0, 0});      // a_i
  for (int i = 0; i < 5; ++i) c.pos.push_back(Vec3{i, 1, 0});      // b_i
  auto a = [](int i) { return i; };
  auto b = [](int i) { return 5 + i; };
  for (int i = 0; i < 4; ++i)
    c.faces.push_back({{a(i), a(i + 1), b(i + 1), b(i)}, "mobius", i});
  // last cell glues a4-b4 to b0-a0 with the twist
  c.faces.push_back({{a(4), b(0), a(0), b(4)}, "mobius", 4});
  return c;
}

// A 4x4 grid square with antipodal boundary identification: the
// projective plane. Positions are labels only.
inline ImmersedComplex projective_grid4() {
  ImmersedComplex c;
  std::map<std::pair<int, int>, int> id;
  auto cls = [&](int i, int j) {
    bool bd = i == 0 || i == 4 || j == 0 || j == 4;
    std::pair<int, int> key{i, j};
    if (bd) {
      std::pair<int, int> anti{4 - i, 4 - j};
      if (anti < key) key = anti;
    }
    if (!id.count(key)) {
      id[key] = static_cast<int>(c.pos.size());
      c.pos.push_back(Vec3{key.first, key.second, (key.first * 13 + key.second * 7) % 5});
    }
    return id[key];
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      c.faces.push_back({{cls(i, j), cls(i + 1, j), cls(i + 1, j + 1), cls(i, j + 1)},
                         "rp2",
                         i * 4 + j});
  return c;
}

// A single unit square: a disc.
inline ImmersedComplex disc_square() {
  ImmersedComplex c;
  c.pos = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  c.faces.push_back({{0, 1, 2, 3}, "disc", 0});
  return c;
}

}  // namespace boyforge::testhelpers
