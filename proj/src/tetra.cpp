#include "hedron/tetra.hpp"

#include <algorithm>
#include <cmath>

#include "hedron/identities.hpp"

namespace hedron {

std::array<Vec3, 6> edge_vectors(const Tetrahedron& t) {
  std::array<Vec3, 6> e{};
  for (int i = 0; i < 6; ++i)
    e[i] = t.vertex(kEdgeVerts[i][1]) - t.vertex(kEdgeVerts[i][0]);
  return e;
}

ArealVectors areal_vectors(const Tetrahedron& t) {
  const std::array<Vec3, 6> e = edge_vectors(t);
  ArealVectors av;
  av.exterior[0] = cross(e[0], e[1]);  // AB x AC   (face ABC)
  av.exterior[1] = cross(e[0], e[2]);  // AB x AD   (face ABD)
  av.exterior[2] = cross(e[1], e[2]);  // AC x AD   (face ACD)
  av.exterior[3] = cross(e[3], e[4]);  // BC x BD   (face BCD)
  av.interior[0] = cross(e[0], e[5]);  // AB x CD
  av.interior[1] = cross(e[1], e[4]);  // AC x BD
  av.interior[2] = cross(e[2], e[3]);  // AD x BC
  return av;
}

FacialAreas facial_areas(const Tetrahedron& t) {
  const ArealVectors av = areal_vectors(t);
  FacialAreas f;
  for (int k = 0; k < 4; ++k) f[k] = norm(av.exterior[k]);
  for (int i = 0; i < 3; ++i) f[4 + i] = norm(av.interior[i]);
  return f;
}

SquaredDistances squared_distances(const Tetrahedron& t) {
  const std::array<Vec3, 6> e = edge_vectors(t);
  SquaredDistances d;
  for (int i = 0; i < 6; ++i) d[i] = norm2(e[i]);
  return d;
}

double volume_t(const Tetrahedron& t) {
  const Vec3 ab = t.b - t.a, ac = t.c - t.a, ad = t.d - t.a;
  return std::abs(dot(ab, cross(ac, ad)));
}

double max_edge_length(const Tetrahedron& t) {
  const std::array<Vec3, 6> e = edge_vectors(t);
  double m = 0.0;
  for (const Vec3& v : e) m = std::max(m, norm(v));
  return m;
}

bool is_degenerate(const Tetrahedron& t) {
  const double l = max_edge_length(t);
  return volume_t(t) <= 1e-9 * l * l * l;
}

Vec3 outward_unit_normal(const Tetrahedron& t, int face) {
  const Vec3& p0 = t.vertex(kFaceVerts[face][0]);
  const Vec3& p1 = t.vertex(kFaceVerts[face][1]);
  const Vec3& p2 = t.vertex(kFaceVerts[face][2]);
  Vec3 n = cross(p1 - p0, p2 - p0);
  const double len = norm(n);
  if (len == 0.0)
    throw DegenerateTetrahedron("face has zero area; no outward normal");
  n = n / len;
  const Vec3 centroid = (p0 + p1 + p2) / 3.0;
  const Vec3& opposite = t.vertex(kFaceOppositeVertex[face]);
  if (dot(n, centroid - opposite) < 0.0) n = -n;
  return n;
}

InTouchData in_touch(const Tetrahedron& t) {
  if (is_degenerate(t))
    throw DegenerateTetrahedron("in-sphere undefined for flat tetrahedron");
  const FacialAreas f = facial_areas(t);
  const double s = f.pseudo_perimeter();
  InTouchData r;
  Vec3 c{};
  for (int i = 0; i < 4; ++i)
    c += t.vertex(i) * (f[kVertexOppositeFace[i]] / s);
  r.in_center = c;
  r.in_radius = volume_t(t) / s;
  for (int k = 0; k < 4; ++k)
    r.touch[k] = c + outward_unit_normal(t, k) * r.in_radius;
  return r;
}

namespace {

// Doubled area of the triangle over edge `edge` with the given apex.
double doubled_contact_area(const Tetrahedron& t, int edge, const Vec3& apex) {
  const Vec3& va = t.vertex(kEdgeVerts[edge][0]);
  const Vec3& vb = t.vertex(kEdgeVerts[edge][1]);
  return norm(cross(vb - va, apex - va));
}

}  // namespace

NaturalParams contact_triangle_areas(const Tetrahedron& t) {
  const InTouchData td = in_touch(t);
  const double scale = max_edge_length(t);
  NaturalParams n;
  for (int e = 0; e < 6; ++e) {
    const double a1 = doubled_contact_area(t, e, td.touch[kEdgeFaces[e][0]]);
    const double a2 = doubled_contact_area(t, e, td.touch[kEdgeFaces[e][1]]);
    const double ref = std::max({a1, a2, 1e-14 * scale * scale});
    if (std::abs(a1 - a2) > 1e-8 * ref)
      throw ToleranceFailure("contact-triangle pair areas disagree");
    n[e] = 0.5 * (a1 + a2);
  }
  return n;
}

std::array<ExSphere, 4> ex_spheres(const Tetrahedron& t) {
  if (is_degenerate(t))
    throw DegenerateTetrahedron("ex-spheres undefined for flat tetrahedron");
  const FacialAreas f = facial_areas(t);
  const double s = f.pseudo_perimeter();
  const double tvol = volume_t(t);
  const double r_in = tvol / s;
  const Areas7T<double> f7{f[0], f[1], f[2], f[3], f[4], f[5], f[6]};
  const Edge6T<double> inv = inverse_from_areas_generic(f7);

  std::array<ExSphere, 4> out{};
  for (int x = 0; x < 4; ++x) {
    // Barycentric weights: opposite-face areas, with vertex x's own negated.
    std::array<double, 4> w{};
    double wsum = 0.0;
    for (int i = 0; i < 4; ++i) {
      w[i] = f[kVertexOppositeFace[i]] * (i == x ? -1.0 : 1.0);
      wsum += w[i];
    }
    if (std::abs(wsum) <= 1e-12 * s)
      throw ExSphereUndefined("weight sum vanishes for this vertex");
    ExSphere ex;
    Vec3 c{};
    for (int i = 0; i < 4; ++i) c += t.vertex(i) * (w[i] / wsum);
    ex.center = c;
    ex.radius = tvol / wsum;  // = t / (s - 2 f_opp)

    // Touch point: foot of the perpendicular onto the face opposite x.
    const int face = kVertexOppositeFace[x];
    const Vec3 n = outward_unit_normal(t, face);
    const Vec3& p0 = t.vertex(kFaceVerts[face][0]);
    ex.touch = c - n * dot(c - p0, n);

    // Empirical contact-area relation (reported, not asserted):
    // (r_x / r) * n~_e = 2 |v_a v_b T_x| for the face's three edges.
    for (int j = 0; j < 3; ++j) {
      const int e = kFaceEdges[face][j];
      const double lhs = (ex.radius / r_in) * inv[e];
      const double rhs = doubled_contact_area(t, e, ex.touch);
      const double ref = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
      ex.touch_area_residuals[j] = std::abs(lhs - rhs) / ref;
    }
    out[x] = ex;
  }
  return out;
}

MedialOctahedron medial_octahedron(const Tetrahedron& t) {
  MedialOctahedron oct;
  for (int e = 0; e < 6; ++e)
    oct.midpoints[e] =
        (t.vertex(kEdgeVerts[e][0]) + t.vertex(kEdgeVerts[e][1])) * 0.5;

  // The octahedron's eight triangular faces: one per tetra face (that face's
  // three edge midpoints) and one per tetra vertex (midpoints of its three
  // incident edges).  Fan from the centroid; the solid is convex so absolute
  // triple products add up to the volume.
  Vec3 centroid{};
  for (const Vec3& m : oct.midpoints) centroid += m / 6.0;

  double vol6 = 0.0;  // six times the volume
  auto add_face = [&](const int (&edges)[3]) {
    const Vec3 p0 = oct.midpoints[edges[0]] - centroid;
    const Vec3 p1 = oct.midpoints[edges[1]] - centroid;
    const Vec3 p2 = oct.midpoints[edges[2]] - centroid;
    vol6 += std::abs(dot(p0, cross(p1, p2)));
  };
  for (int k = 0; k < 4; ++k) add_face(kFaceEdges[k]);
  for (int i = 0; i < 4; ++i) add_face(kVertexEdges[i]);
  oct.volume = vol6 / 6.0;
  return oct;
}

}  // namespace hedron
