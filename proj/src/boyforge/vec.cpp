#include "boyforge/vec.hpp"

namespace boyforge {

std::string to_string(const Vec2& v) {
  return "(" + format_rat(v.x) + ", " + format_rat(v.y) + ")";
}

std::string to_string(const Vec3& v) {
  return "(" + format_rat(v.x) + ", " + format_rat(v.y) + ", " + format_rat(v.z) + ")";
}

}  // namespace boyforge
