#pragma once

#include <array>

#include "boyforge/net.hpp"

namespace boyforge {

// One of the 24 orientation-preserving symmetries of the axis-aligned
// lattice plus an exact translation. Closed under compose/inverse.
struct RigidMotion {
  std::array<std::array<int, 3>, 3> rot;  // signed permutation matrix, det +1
  Vec3 t;

  static RigidMotion identity();
  Vec3 apply(const Vec3& p) const;
  Vec3 rotate(const Vec3& v) const;
  RigidMotion compose(const RigidMotion& inner) const;  // this after inner
  RigidMotion inverse() const;
  bool operator==(const RigidMotion&) const = default;
};

// All 24 rotations, translation zero. Deterministic order.
const std::vector<RigidMotion>& rotation_group();

struct FoldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PlacementError : std::runtime_error {
  enum class Kind { NoSolution, Ambiguous, UnknownAnchor };
  Kind kind;
  PlacementError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// A folded net: an abstract 2-complex with exact rational geometry. All
// faces stay planar and axis-parallel; the intrinsic metric of the net
// is preserved exactly.
struct Piece {
  struct Tag3 {
    TagKind kind;
    std::string name;
    int a, b;
  };

  std::string net_name;
  std::string copy_label;
  std::vector<Vec3> pos;
  std::vector<std::vector<int>> faces;
  std::map<std::string, int> anchors;
  std::vector<Tag3> tags;

  std::map<std::pair<int, int>, std::vector<int>> edge_faces() const;
};

// Realizes the net in 3-space: the root face (lowest id) keeps its net
// coordinates in the z=0 plane and every other rigid part rotates across
// its fold edge by the signed angle. Fold angle +90 lifts the far side
// toward +z, -90 toward -z. Boundary edge pairs carrying the same letter
// tag must coincide after folding and are merged (the "two P meet" rule);
// nothing else is ever merged silently.
Piece fold(const Net& net);

// The unique lattice rotation + translation taking every named anchor of
// the piece onto its target. Requires at least three non-collinear
// anchors; searches the 24 rotations exactly.
RigidMotion solve_placement(const Piece& piece,
                            const std::vector<std::pair<std::string, Vec3>>& constraints);

Piece apply_motion(const Piece& piece, const RigidMotion& m);

}  // namespace boyforge
