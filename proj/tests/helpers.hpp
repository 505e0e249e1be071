#pragma once

// Shared fixtures and utilities for the test suite.

#include <algorithm>
#include <array>
#include <cmath>

#include "hedron/linalg.hpp"
#include "hedron/rng.hpp"
#include "hedron/tetra.hpp"
#include "hedron/types.hpp"

namespace hedron::testing {

// ---------------------------------------------------------------------------
// Fixtures

// Unit right-corner tetrahedron: three mutually orthogonal unit edges at A.
// Facial areas (1/2, 1/2, 1/2, sqrt(3)/2); doubled: (1, 1, 1, sqrt(3));
// interior areas sqrt(2)/4 each, so doubled-quadrupled values are sqrt(2).
// 6V = 1.
inline Tetrahedron right_corner() {
  return {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
}

// Regular tetrahedron with unit edge length. 6V = 1/sqrt(2).
inline Tetrahedron regular_unit() {
  const double h = std::sqrt(3.0) / 2.0;
  return {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0.5, h, 0},
          Vec3{0.5, h / 3.0, std::sqrt(2.0 / 3.0)}};
}

// Planar unit square traversed A, B, C, D: a flat quadrilateral, not a
// tetrahedron. Doubled face areas are all 1; one interior area is 2 and the
// other two vanish.
inline Tetrahedron planar_square() {
  return {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{1, 1, 0}, Vec3{0, 1, 0}};
}

// ---------------------------------------------------------------------------
// Random generation

inline Vec3 random_point(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

// Random tetrahedron with vertices in [-1,1]^3 and 6V above min_t
// (resamples until the volume threshold is met).
inline Tetrahedron random_tetra(Rng& rng, double min_t = 1e-3) {
  for (;;) {
    Tetrahedron tet{random_point(rng), random_point(rng), random_point(rng),
                    random_point(rng)};
    if (volume_t(tet) > min_t) return tet;
  }
}

// Random rotation matrix from a uniformly sampled unit quaternion.
inline Mat<3> random_rotation(Rng& rng) {
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& qi : q) {
      qi = rng.uniform(-1.0, 1.0);
      n2 += qi * qi;
    }
  } while (n2 < 1e-6 || n2 > 1.0);
  const double n = std::sqrt(n2);
  const double w = q[0] / n, x = q[1] / n, y = q[2] / n, z = q[3] / n;
  Mat<3> r{};
  r[0] = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)};
  r[1] = {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)};
  r[2] = {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)};
  return r;
}

inline Vec3 apply(const Mat<3>& m, const Vec3& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

inline Tetrahedron transformed(const Tetrahedron& t, const Mat<3>& rot,
                               const Vec3& shift) {
  return {apply(rot, t.a) + shift, apply(rot, t.b) + shift,
          apply(rot, t.c) + shift, apply(rot, t.d) + shift};
}

// ---------------------------------------------------------------------------
// Comparison utilities

// Relative closeness with an absolute floor keyed to `scale`.
inline bool close(double a, double b, double tol, double scale = 1.0) {
  const double mag = std::max({std::abs(a), std::abs(b), std::abs(scale)});
  return std::abs(a - b) <= tol * mag;
}

inline double rel_err(double a, double b) {
  const double mag = std::max(std::abs(a), std::abs(b));
  return mag == 0.0 ? 0.0 : std::abs(a - b) / mag;
}

// Compares two six-vectors of squared distances up to vertex relabeling
// being already fixed: entrywise relative tolerance.
inline double max_rel_err6(const std::array<double, 6>& a,
                           const std::array<double, 6>& b) {
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) worst = std::max(worst, rel_err(a[i], b[i]));
  return worst;
}

// Congruence test that ignores the isometry freedom of reconstructions:
// compares the sorted squared-distance multiset.
inline double congruence_gap(const Tetrahedron& s, const Tetrahedron& t) {
  auto ds = squared_distances(s).d;
  auto dt = squared_distances(t).d;
  std::sort(ds.begin(), ds.end());
  std::sort(dt.begin(), dt.end());
  return max_rel_err6(ds, dt);
}

}  // namespace hedron::testing
