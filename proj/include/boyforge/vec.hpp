#pragma once

#include <array>
#include <compare>
#include <string>

#include "boyforge/rat.hpp"

namespace boyforge {

struct Vec2 {
  Rat x, y;

  bool operator==(const Vec2&) const = default;
  auto operator<=>(const Vec2& o) const {
    if (auto c = x.compare(o.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = y.compare(o.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
};

struct Vec3 {
  Rat x, y, z;

  bool operator==(const Vec3&) const = default;
  auto operator<=>(const Vec3& o) const {
    if (auto c = x.compare(o.x); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = y.compare(o.y); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = z.compare(o.z); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }

  const Rat& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rat& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Rat squared_length(const Vec3& v) { return dot(v, v); }
inline Rat squared_length(const Vec2& v) { return v.x * v.x + v.y * v.y; }

// Cyclic coordinate rotation (x,y,z) -> (y,z,x); order three, the
// symmetry that permutes the three arms of the assembly.
inline Vec3 sigma(const Vec3& v) { return {v.y, v.z, v.x}; }

std::string to_string(const Vec2& v);
std::string to_string(const Vec3& v);

}  // namespace boyforge
