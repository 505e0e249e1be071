#pragma once

// Coordinate-level quantities of a labeled tetrahedron ABCD: edge and areal
// vectors, facial areas, volume, in-sphere and ex-sphere data, contact
// triangles, and the medial octahedron.

#include <array>

#include "hedron/linalg.hpp"
#include "hedron/types.hpp"

namespace hedron {

// Edge vectors in edge order, oriented from the smaller to the larger vertex
// label: AB = B - A, ..., CD = D - C.
std::array<Vec3, 6> edge_vectors(const Tetrahedron& t);

// Doubled/quadrupled areal vectors.
struct ArealVectors {
  // AB x AC, AB x AD, AC x AD, BC x BD -- in face order (ABC, ABD, ACD, BCD).
  std::array<Vec3, 4> exterior{};
  // AB x CD, AC x BD, AD x BC -- in interior-slot order.
  std::array<Vec3, 3> interior{};
};
ArealVectors areal_vectors(const Tetrahedron& t);

FacialAreas facial_areas(const Tetrahedron& t);
SquaredDistances squared_distances(const Tetrahedron& t);

// t := |AB . (AC x AD)| = 6 * volume.
double volume_t(const Tetrahedron& t);

double max_edge_length(const Tetrahedron& t);

// Scale-invariant degeneracy predicate: t <= 1e-9 * L^3, L = max edge length.
bool is_degenerate(const Tetrahedron& t);

// Outward unit normal of a face (points away from the opposite vertex).
Vec3 outward_unit_normal(const Tetrahedron& t, int face);

struct InTouchData {
  Vec3 in_center{};
  double in_radius = 0.0;
  // touch[k] lies in face k's plane: touch[0] in ABC, ..., touch[3] in BCD.
  std::array<Vec3, 4> touch{};
};

// In-sphere: center weighted by opposite-face areas, radius r = t/s, touch
// points by dropping r along each outward normal.
// Throws DegenerateTetrahedron for (near-)flat input.
InTouchData in_touch(const Tetrahedron& t);

// Doubled areas of the six congruent contact-triangle pairs, edge-keyed: the
// triangle over edge (a,b) with apex at the in-touch point of either face
// containing the edge.  Both members of each pair are computed and checked
// to agree within 1e-8 relative.
NaturalParams contact_triangle_areas(const Tetrahedron& t);

struct ExSphere {
  Vec3 center{};
  double radius = 0.0;
  Vec3 touch{};  // foot of the perpendicular on the face opposite the vertex
  // Relative residuals of the contact-area relation (r_X / r) * n~_e =
  // 2 |v_a v_b T_X| for the three edges of the face opposite the vertex,
  // reported (not asserted) because its general validity is empirical.
  std::array<double, 3> touch_area_residuals{};
};

// Ex-spheres opposite vertices A, B, C, D (in that order).
std::array<ExSphere, 4> ex_spheres(const Tetrahedron& t);

struct MedialOctahedron {
  // Edge midpoints in edge order: mid(AB), mid(AC), ..., mid(CD).
  std::array<Vec3, 6> midpoints{};
  double volume = 0.0;  // always half the tetrahedron volume
};
MedialOctahedron medial_octahedron(const Tetrahedron& t);

}  // namespace hedron
