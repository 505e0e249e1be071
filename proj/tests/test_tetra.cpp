#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "hedron/natural.hpp"
#include "hedron/tetra.hpp"

using namespace hedron;
using namespace hedron::testing;

TEST_CASE("right-corner fixture: areas, volume, distances") {
  const Tetrahedron t = right_corner();
  const FacialAreas f = facial_areas(t);
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
  CHECK(f[0] == doctest::Approx(1.0));  // ABC
  CHECK(f[1] == doctest::Approx(1.0));  // ABD
  CHECK(f[2] == doctest::Approx(1.0));  // ACD
  CHECK(f[3] == doctest::Approx(s3));   // BCD
  CHECK(f[4] == doctest::Approx(s2));   // AB|CD
  CHECK(f[5] == doctest::Approx(s2));   // AC|BD
  CHECK(f[6] == doctest::Approx(s2));   // AD|BC
  CHECK(f.pseudo_perimeter() == doctest::Approx(3.0 + s3));

  CHECK(volume_t(t) == doctest::Approx(1.0));
  CHECK_FALSE(is_degenerate(t));

  const SquaredDistances d = squared_distances(t);
  CHECK(d[0] == doctest::Approx(1.0));
  CHECK(d[1] == doctest::Approx(1.0));
  CHECK(d[2] == doctest::Approx(1.0));
  CHECK(d[3] == doctest::Approx(2.0));
  CHECK(d[4] == doctest::Approx(2.0));
  CHECK(d[5] == doctest::Approx(2.0));

  // Interior areal vector AB x CD of the right corner.
  const ArealVectors av = areal_vectors(t);
  CHECK(av.interior[0].x == doctest::Approx(0.0));
  CHECK(av.interior[0].y == doctest::Approx(-1.0));
  CHECK(av.interior[0].z == doctest::Approx(-1.0));
}

TEST_CASE("regular fixture: areas and volume") {
  const Tetrahedron t = regular_unit();
  const FacialAreas f = facial_areas(t);
  for (int k = 0; k < 4; ++k) CHECK(f[k] == doctest::Approx(std::sqrt(3.0) / 2));
  // Opposite edges of a regular tetrahedron are orthogonal with unit length.
  for (int i = 4; i < 7; ++i) CHECK(f[i] == doctest::Approx(1.0));
  CHECK(volume_t(t) == doctest::Approx(1.0 / std::sqrt(2.0)));
  for (int e = 0; e < 6; ++e)
    CHECK(squared_distances(t)[e] == doctest::Approx(1.0));
}

TEST_CASE("planar square fixture: flat with one surviving interior area") {
  const Tetrahedron t = planar_square();
  CHECK(volume_t(t) == doctest::Approx(0.0));
  CHECK(is_degenerate(t));
  const FacialAreas f = facial_areas(t);
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(1.0));
  CHECK(f[2] == doctest::Approx(1.0));
  CHECK(f[3] == doctest::Approx(1.0));
  CHECK(f[4] == doctest::Approx(0.0));
  CHECK(f[5] == doctest::Approx(2.0));
  CHECK(f[6] == doctest::Approx(0.0));
}

TEST_CASE("areas and distances are isometry invariant") {
  Rng rng(101);
  for (int rep = 0; rep < 20; ++rep) {
    const Tetrahedron t = random_tetra(rng);
    const Mat<3> rot = random_rotation(rng);
    const Vec3 shift = random_point(rng, -5, 5);
    const Tetrahedron u = transformed(t, rot, shift);
    const FacialAreas ft = facial_areas(t), fu = facial_areas(u);
    for (int k = 0; k < 7; ++k) CHECK(close(ft[k], fu[k], 1e-10));
    CHECK(close(volume_t(t), volume_t(u), 1e-10));
    CHECK(max_rel_err6(squared_distances(t).d, squared_distances(u).d) < 1e-10);
  }
}

TEST_CASE("outward normals point away from the opposite vertex") {
  Rng rng(102);
  for (int rep = 0; rep < 20; ++rep) {
    const Tetrahedron t = random_tetra(rng);
    for (int k = 0; k < 4; ++k) {
      const Vec3 n = outward_unit_normal(t, k);
      CHECK(norm(n) == doctest::Approx(1.0));
      const Vec3 centroid = (t.vertex(kFaceVerts[k][0]) +
                             t.vertex(kFaceVerts[k][1]) +
                             t.vertex(kFaceVerts[k][2])) / 3.0;
      CHECK(dot(n, centroid - t.vertex(kFaceOppositeVertex[k])) > 0.0);
      // Orthogonal to the face.
      const Vec3 e1 = t.vertex(kFaceVerts[k][1]) - t.vertex(kFaceVerts[k][0]);
      const Vec3 e2 = t.vertex(kFaceVerts[k][2]) - t.vertex(kFaceVerts[k][0]);
      CHECK(std::abs(dot(n, e1)) < 1e-12 * norm(e1));
      CHECK(std::abs(dot(n, e2)) < 1e-12 * norm(e2));
    }
  }
  CHECK_THROWS_AS(outward_unit_normal(
                      Tetrahedron{Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{1, 0, 0},
                                  Vec3{0, 1, 0}},
                      0),
                  DegenerateTetrahedron);
}

TEST_CASE("in-sphere of the right corner") {
  const Tetrahedron t = right_corner();
  const InTouchData td = in_touch(t);
  const double r = 1.0 / (3.0 + std::sqrt(3.0));
  CHECK(td.in_radius == doctest::Approx(r));
  CHECK(td.in_center.x == doctest::Approx(r));
  CHECK(td.in_center.y == doctest::Approx(r));
  CHECK(td.in_center.z == doctest::Approx(r));
  // Touch on face ABC (the z = 0 plane) sits directly below the center.
  CHECK(td.touch[0].x == doctest::Approx(r));
  CHECK(td.touch[0].y == doctest::Approx(r));
  CHECK(td.touch[0].z == doctest::Approx(0.0));
}

TEST_CASE("in-sphere touch points lie in their faces at distance r") {
  Rng rng(103);
  for (int rep = 0; rep < 20; ++rep) {
    const Tetrahedron t = random_tetra(rng);
    const InTouchData td = in_touch(t);
    CHECK(td.in_radius > 0.0);
    for (int k = 0; k < 4; ++k) {
      const Vec3 n = outward_unit_normal(t, k);
      const Vec3& p0 = t.vertex(kFaceVerts[k][0]);
      // Touch point lies in the face plane...
      CHECK(std::abs(dot(td.touch[k] - p0, n)) < 1e-10);
      // ...at distance exactly r from the center, along the normal.
      CHECK(norm(td.touch[k] - td.in_center) == doctest::Approx(td.in_radius));
    }
  }
  CHECK_THROWS_AS(in_touch(planar_square()), DegenerateTetrahedron);
}

TEST_CASE("contact triangle doubled areas equal the natural parameters") {
  Rng rng(104);
  for (int rep = 0; rep < 50; ++rep) {
    const Tetrahedron t = random_tetra(rng);
    const NaturalParams contact = contact_triangle_areas(t);
    const NaturalParams n = natural_from_areas(facial_areas(t));
    for (int e = 0; e < 6; ++e) CHECK(close(contact[e], n[e], 1e-8));
  }
  // Right corner: edge AB gives 1/(3+sqrt 3), edge BC gives (1+sqrt 3)
  // times that.
  const NaturalParams c = contact_triangle_areas(right_corner());
  const double s = 3.0 + std::sqrt(3.0);
  CHECK(c[0] == doctest::Approx(1.0 / s));
  CHECK(c[3] == doctest::Approx((1.0 + std::sqrt(3.0)) / s));
}

TEST_CASE("touch-point distances: vertex to touch points and to the center") {
  Rng rng(108);
  for (int rep = 0; rep < 30; ++rep) {
    const Tetrahedron t = random_tetra(rng);
    const FacialAreas f = facial_areas(t);
    const NaturalParams n = natural_from_areas(f);
    const double s = f.pseudo_perimeter();
    const InTouchData td = in_touch(t);
    const double r2 = td.in_radius * td.in_radius;
    for (int i = 0; i < 4; ++i) {
      // Squared vertex tangent length: 2 * (product of the three natural
      // parameters at the vertex) / (s r^2), attained simultaneously on all
      // three touch points of the faces through the vertex.
      const double prod = n[kVertexEdges[i][0]] * n[kVertexEdges[i][1]] *
                          n[kVertexEdges[i][2]];
      const double want = 2.0 * prod / (s * r2);
      for (int k = 0; k < 4; ++k) {
        if (k == kVertexOppositeFace[i]) continue;
        CHECK(close(norm2(t.vertex(i) - td.touch[k]), want, 1e-8));
      }
      // Squared distance from the vertex to the in-center adds r^2.
      CHECK(close(norm2(t.vertex(i) - td.in_center), want + r2, 1e-8));
    }
  }
}

TEST_CASE("ex-spheres: radii, side, and tangency") {
  const Tetrahedron rc = right_corner();
  const auto exs = ex_spheres(rc);
  // Opposite D: weight sum s - 2 f_ABC = 1 + sqrt 3.
  CHECK(exs[3].radius == doctest::Approx(1.0 / (1.0 + std::sqrt(3.0))));
  // Its center lies beyond face ABC (negative z), at |z| = radius.
  CHECK(exs[3].center.z == doctest::Approx(-exs[3].radius));
  // Opposite A: weight sum s - 2 f_BCD = 3 - sqrt 3.
  CHECK(exs[0].radius == doctest::Approx(1.0 / (3.0 - std::sqrt(3.0))));

  // Regular tetrahedron: all four ex-radii are twice the in-radius.
  const Tetrahedron reg = regular_unit();
  const double r_in = in_touch(reg).in_radius;
  for (const ExSphere& ex : ex_spheres(reg))
    CHECK(ex.radius == doctest::Approx(2.0 * r_in));

  // Random: radius = t / (s - 2 f_opp); touch point lies in the face plane
  // and at distance `radius` from the center; center is outside (opposite
  // side of the face from the tetrahedron).
  Rng rng(105);
  for (int rep = 0; rep < 20; ++rep) {
    const Tetrahedron t = random_tetra(rng);
    const FacialAreas f = facial_areas(t);
    const double sp = f.pseudo_perimeter();
    const auto ex = ex_spheres(t);
    for (int x = 0; x < 4; ++x) {
      const int face = kVertexOppositeFace[x];
      CHECK(close(ex[x].radius, volume_t(t) / (sp - 2 * f[face]), 1e-10));
      const Vec3 n = outward_unit_normal(t, face);
      const Vec3& p0 = t.vertex(kFaceVerts[face][0]);
      CHECK(std::abs(dot(ex[x].touch - p0, n)) < 1e-9);
      CHECK(close(norm(ex[x].touch - ex[x].center), std::abs(ex[x].radius),
                  1e-9));
      // Same side test: for positive weight sum the center is beyond the
      // face, i.e. on the opposite side from vertex x.
      const double side_c = dot(ex[x].center - p0, n);
      const double side_v = dot(t.vertex(x) - p0, n);
      if (ex[x].radius > 0) CHECK(side_c * side_v < 0.0);
    }
  }
}

TEST_CASE("ex-sphere contact-area relation holds empirically") {
  Rng rng(106);
  for (int rep = 0; rep < 20; ++rep) {
    const Tetrahedron t = random_tetra(rng);
    for (const ExSphere& ex : ex_spheres(t))
      for (double res : ex.touch_area_residuals) CHECK(res < 1e-7);
  }
}

TEST_CASE("medial octahedron has half the tetrahedron volume") {
  const Tetrahedron rc = right_corner();
  CHECK(medial_octahedron(rc).volume == doctest::Approx(volume_t(rc) / 12.0));
  Rng rng(107);
  for (int rep = 0; rep < 20; ++rep) {
    const Tetrahedron t = random_tetra(rng);
    CHECK(close(medial_octahedron(t).volume, volume_t(t) / 12.0, 1e-10));
  }
}
