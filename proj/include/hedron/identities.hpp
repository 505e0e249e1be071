#pragma once

// Scalar-generic algebraic core.
//
// Every function in this header is a polynomial or rational expression in its
// inputs and is templated over the scalar type T.  Instantiated with double
// it backs the public library; instantiated with an exact rational type it
// backs the exact-arithmetic test layer, where the identities below must hold
// *exactly*, not merely to tolerance.
//
// Conventions (see types.hpp): area 7-vectors f are ordered
// (ABC, ABD, ACD, BCD, AB|CD, AC|BD, AD|BC) with doubled exterior areas and
// quadrupled interior areas; 6-vectors (distances, natural parameters) are in
// edge order (AB, AC, AD, BC, BD, CD).

#include <array>
#include <cstddef>

#include "hedron/linalg.hpp"
#include "hedron/types.hpp"

namespace hedron {

template <class T>
using Areas7T = std::array<T, 7>;
template <class T>
using Edge6T = std::array<T, 6>;

// ---------------------------------------------------------------------------
// Linear area combinations: pseudo-perimeter and the saturation deviations
// ---------------------------------------------------------------------------

template <class T>
T pseudo_perimeter_of(const Areas7T<T>& f) {
  return f[0] + f[1] + f[2] + f[3];
}

// Deviations of the 18 triangle-like inequalities from saturation, keyed per
// edge (a,b) with complementary vertices c < d:
//   T0 = f_abc + f_abd + f_ab|cd        (total, = T1 + T2 + T3)
//   T1 = f_abc + f_abd - f_ab|cd
//   T2 = f_ab|cd + f_abd - f_abc
//   T3 = f_ab|cd + f_abc - f_abd
// where f_abc is the face containing the smaller complementary vertex (this
// is kEdgeFaces[e][0] by construction).
template <class T>
struct TauRowT {
  T t0, t1, t2, t3;
};

template <class T>
TauRowT<T> tau_row(const Areas7T<T>& f, int edge) {
  const T& g1 = f[kEdgeFaces[edge][0]];
  const T& g2 = f[kEdgeFaces[edge][1]];
  const T& fi = f[kEdgeInterior[edge]];
  return TauRowT<T>{g1 + g2 + fi, g1 + g2 - fi, fi + g2 - g1, fi + g1 - g2};
}

template <class T>
std::array<TauRowT<T>, 6> tau_rows(const Areas7T<T>& f) {
  std::array<TauRowT<T>, 6> r{};
  for (int e = 0; e < 6; ++e) r[e] = tau_row(f, e);
  return r;
}

// ---------------------------------------------------------------------------
// Quadratic area balance (exterior squares vs interior squares)
// ---------------------------------------------------------------------------

// Xi(f) = f1^2+f2^2+f3^2+f4^2 - f5^2 - f6^2 - f7^2.
template <class T>
T xi_of_areas(const Areas7T<T>& f) {
  return f[0] * f[0] + f[1] * f[1] + f[2] * f[2] + f[3] * f[3] -
         f[4] * f[4] - f[5] * f[5] - f[6] * f[6];
}

// Same balance as a *linear* form on squared areas F = f^2 (also applicable
// to signed squared-area 7-vectors such as the distance-polynomial map).
template <class T>
T xi_of_squared_areas(const Areas7T<T>& F) {
  return F[0] + F[1] + F[2] + F[3] - F[4] - F[5] - F[6];
}

// ---------------------------------------------------------------------------
// Even representation: exterior doubled areas + *squared* interior areas.
// Every polynomial identity in this library involves the interior areas only
// through their squares, so this representation loses nothing and keeps the
// algebra rational (no square roots) when starting from natural parameters.
// ---------------------------------------------------------------------------

template <class T>
struct EvenAreas {
  std::array<T, 4> fe{};  // doubled exterior areas
  std::array<T, 3> Fi{};  // squared quadrupled interior areas (slots 4,5,6)
};

template <class T>
EvenAreas<T> even_from_areas(const Areas7T<T>& f) {
  return EvenAreas<T>{{f[0], f[1], f[2], f[3]},
                      {f[4] * f[4], f[5] * f[5], f[6] * f[6]}};
}

template <class T>
Areas7T<T> squared_areas_of_even(const EvenAreas<T>& a) {
  return {a.fe[0] * a.fe[0], a.fe[1] * a.fe[1], a.fe[2] * a.fe[2],
          a.fe[3] * a.fe[3], a.Fi[0], a.Fi[1], a.Fi[2]};
}

template <class T>
T pseudo_perimeter_of(const EvenAreas<T>& a) {
  return a.fe[0] + a.fe[1] + a.fe[2] + a.fe[3];
}

template <class T>
T xi_of(const EvenAreas<T>& a) {
  return a.fe[0] * a.fe[0] + a.fe[1] * a.fe[1] + a.fe[2] * a.fe[2] +
         a.fe[3] * a.fe[3] - a.Fi[0] - a.Fi[1] - a.Fi[2];
}

// 2s * n_e = T0[e] T1[e] = (f_g1 + f_g2)^2 - F_int[e].
template <class T>
std::array<T, 6> tau01_products(const EvenAreas<T>& a) {
  std::array<T, 6> p{};
  for (int e = 0; e < 6; ++e) {
    const T sum = a.fe[kEdgeFaces[e][0]] + a.fe[kEdgeFaces[e][1]];
    p[e] = sum * sum - a.Fi[kEdgeInterior[e] - 4];
  }
  return p;
}

// 2s * n~_e = T2[e] T3[e] = F_int[e] - (f_g1 - f_g2)^2.
template <class T>
std::array<T, 6> tau23_products(const EvenAreas<T>& a) {
  std::array<T, 6> p{};
  for (int e = 0; e < 6; ++e) {
    const T diff = a.fe[kEdgeFaces[e][0]] - a.fe[kEdgeFaces[e][1]];
    p[e] = a.Fi[kEdgeInterior[e] - 4] - diff * diff;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Areal Gram matrices as polynomials in the squared areas F
// ---------------------------------------------------------------------------

// The edge shared by two distinct faces.
constexpr int shared_edge_of_faces(int fa, int fb) {
  for (int ea : kFaceEdges[fa])
    for (int eb : kFaceEdges[fb])
      if (ea == eb) return ea;
  return -1;
}

// Gram matrix of the four *signed* exterior areal vectors
//   v1 = AB x AC,  v2 = -(AB x AD),  v3 = AC x AD,  v4 = -(BC x BD)
// (one per face, in face order; the signs make them the family that sums to
// zero).  Entry-wise:
//   diag = F_face,  off = (F_shared-interior - F_i - F_j) / 2.
template <class T>
SqMat<T, 4> gram_ext_from_F(const Areas7T<T>& F) {
  SqMat<T, 4> g{};
  for (int i = 0; i < 4; ++i) {
    g[i][i] = F[i];
    for (int j = i + 1; j < 4; ++j) {
      const int e = shared_edge_of_faces(i, j);
      const T v = (F[kEdgeInterior[e]] - F[i] - F[j]) / T(2);
      g[i][j] = g[j][i] = v;
    }
  }
  return g;
}

// 3x3 principal submatrix of the signed exterior Gram with the face opposite
// `vertex` removed; its determinant is the Gramian (== t^4 for Euclidean f).
template <class T>
SqMat<T, 3> gram_at_vertex_from_F(const Areas7T<T>& F, int vertex) {
  const SqMat<T, 4> g = gram_ext_from_F(F);
  const int drop = kVertexOppositeFace[vertex];
  SqMat<T, 3> m{};
  int ri = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == drop) continue;
    int cj = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == drop) continue;
      m[ri][cj++] = g[i][j];
    }
    ++ri;
  }
  return m;
}

// Gram matrix of the three interior areal vectors (AB x CD, AC x BD, AD x BC):
//   diag = F_int, off-diagonal entries are half-differences of exterior F's.
template <class T>
SqMat<T, 3> gram_int_from_F(const Areas7T<T>& F) {
  SqMat<T, 3> g{};
  g[0][0] = F[4];
  g[1][1] = F[5];
  g[2][2] = F[6];
  g[0][1] = g[1][0] = (F[1] + F[2] - F[0] - F[3]) / T(2);
  g[0][2] = g[2][0] = (F[1] + F[3] - F[0] - F[2]) / T(2);
  g[1][2] = g[2][1] = (F[0] + F[1] - F[2] - F[3]) / T(2);
  return g;
}

// 2x2 principal minor of the signed exterior Gram taken on the two faces
// meeting at `edge`; factors as (1/4) T0 T1 T2 T3 and equals D_edge * t^2
// for Euclidean inputs.
template <class T>
T gram_minor_from_F(const Areas7T<T>& F, int edge) {
  const int fa = kEdgeFaces[edge][0];
  const int fb = kEdgeFaces[edge][1];
  const T off = (F[kEdgeInterior[edge]] - F[fa] - F[fb]) / T(2);
  return F[fa] * F[fb] - off * off;
}

// ---------------------------------------------------------------------------
// Distance-polynomial determinants (squared areas / squared volume from
// squared distances)
// ---------------------------------------------------------------------------

template <class T>
T squared_distance_entry(const Edge6T<T>& d, int va, int vb) {
  if (va == vb) return T(0);
  return d[edge_index(va, vb)];
}

// Three-point determinant for a face: equals the squared *doubled* triangle
// area, i.e. F_face = f_face^2.
template <class T>
T face_area_det(const Edge6T<T>& d, int face) {
  SqMat<T, 3> m{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      m[r][c] = squared_distance_entry(d, kFaceVerts[face][r], kFaceVerts[face][c]);
  // bordered determinant = -4 * (squared doubled area)
  return -bordered_det<T, 3>(m) / T(4);
}

// Four-point determinant: equals t^2 = (6 * volume)^2 for Euclidean inputs.
template <class T>
T volume_det(const Edge6T<T>& d) {
  SqMat<T, 4> m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = squared_distance_entry(d, r, c);
  return bordered_det<T, 4>(m) / T(8);
}

// Asymmetric two-point determinant for edge (a,b) against its complementary
// pair (c,d) with c < d: equals the dot product ab . cd of the edge vectors.
template <class T>
T edge_pair_dot_det(const Edge6T<T>& d, int edge) {
  const int a = kEdgeVerts[edge][0];
  const int b = kEdgeVerts[edge][1];
  const int opp = kOppositeEdge[edge];
  const int c = kEdgeVerts[opp][0];
  const int dd = kEdgeVerts[opp][1];
  return (squared_distance_entry(d, a, dd) + squared_distance_entry(d, b, c) -
          squared_distance_entry(d, a, c) - squared_distance_entry(d, b, dd)) /
         T(2);
}

// Quadrupled-parallelogram determinant for the interior face keyed to `edge`:
// D_ab * D_cd - (ab.cd)^2 = F_interior.
template <class T>
T interior_area_det(const Edge6T<T>& d, int edge) {
  const int opp = kOppositeEdge[edge];
  const T dotv = edge_pair_dot_det(d, edge);
  return d[edge] * d[opp] - dotv * dotv;
}

// The squared-area 7-vector of the polynomial map d -> F (plus branch); the
// minus branch negates every entry.  Entries are (four face determinants,
// three interior determinants for edges AB, AC, AD).
template <class T>
Areas7T<T> squared_areas_from_distances(const Edge6T<T>& d, bool plus = true) {
  Areas7T<T> F{};
  for (int k = 0; k < 4; ++k) F[k] = face_area_det(d, k);
  F[4] = interior_area_det(d, 0);
  F[5] = interior_area_det(d, 1);
  F[6] = interior_area_det(d, 2);
  if (!plus)
    for (auto& v : F) v = -v;
  return F;
}

// ---------------------------------------------------------------------------
// Natural / inverse parameters as rational functions of the areas
// ---------------------------------------------------------------------------

// n_e = T0[e] T1[e] / (2s), zero when s == 0.
template <class T>
Edge6T<T> natural_from_areas_generic(const Areas7T<T>& f) {
  Edge6T<T> n{};
  const T s = pseudo_perimeter_of(f);
  if (s == T(0)) return n;
  const std::array<T, 6> p = tau01_products(even_from_areas(f));
  for (int e = 0; e < 6; ++e) n[e] = p[e] / (T(2) * s);
  return n;
}

// Complementary parameters: n~_e = T2[e] T3[e] / (2s), zero when s == 0.
template <class T>
Edge6T<T> inverse_from_areas_generic(const Areas7T<T>& f) {
  Edge6T<T> q{};
  const T s = pseudo_perimeter_of(f);
  if (s == T(0)) return q;
  const std::array<T, 6> p = tau23_products(even_from_areas(f));
  for (int e = 0; e < 6; ++e) q[e] = p[e] / (T(2) * s);
  return q;
}

// n~ from n alone: n~_e = 2((n_ac+n_bc)(n_ad+n_bd) - n_e n_opp)/s with
// s = 2 * sum(n), for edge e = (a,b) and complement (c,d).
template <class T>
Edge6T<T> inverse_from_natural_generic(const Edge6T<T>& n) {
  Edge6T<T> q{};
  const T s = T(2) * (n[0] + n[1] + n[2] + n[3] + n[4] + n[5]);
  if (s == T(0)) return q;
  for (int e = 0; e < 6; ++e) {
    const int a = kEdgeVerts[e][0];
    const int b = kEdgeVerts[e][1];
    const int opp = kOppositeEdge[e];
    const int c = kEdgeVerts[opp][0];
    const int dd = kEdgeVerts[opp][1];
    const T nac = n[edge_index(a, c)];
    const T nbc = n[edge_index(b, c)];
    const T nad = n[edge_index(a, dd)];
    const T nbd = n[edge_index(b, dd)];
    q[e] = T(2) * ((nac + nbc) * (nad + nbd) - n[e] * n[opp]) / s;
  }
  return q;
}

// ---------------------------------------------------------------------------
// The quartic Omega (t^4 = s^2 * Omega) in its two equivalent forms
// ---------------------------------------------------------------------------

template <class T>
T omega_quartic(const Edge6T<T>& n) {
  const T &u = n[0], &v = n[1], &w = n[2], &x = n[3], &y = n[4], &z = n[5];
  return T(2) * v * w * x * y + T(2) * u * w * x * z + T(2) * u * v * y * z -
         u * u * z * z - v * v * y * y - w * w * x * x;
}

// Omega = -det of the hollow symmetric matrix [[0,u,v,w],[u,0,x,y],
// [v,x,0,z],[w,y,z,0]].
template <class T>
T omega_hollow_det(const Edge6T<T>& n) {
  SqMat<T, 4> m{};
  m[0][1] = m[1][0] = n[0];
  m[0][2] = m[2][0] = n[1];
  m[0][3] = m[3][0] = n[2];
  m[1][2] = m[2][1] = n[3];
  m[1][3] = m[3][1] = n[4];
  m[2][3] = m[3][2] = n[5];
  return -det4<T>(m);
}

// ---------------------------------------------------------------------------
// Areas back from natural parameters (the output satisfies the quadratic
// balance Xi = 0 identically)
// ---------------------------------------------------------------------------

// Exterior doubled areas are the face-wise sums of natural parameters;
// interior squared areas are (sum of the four non-opposite parameters)^2
// minus 4 * (product of the opposite pair).
template <class T>
EvenAreas<T> even_from_natural(const Edge6T<T>& n) {
  EvenAreas<T> r{};
  for (int k = 0; k < 4; ++k) {
    T acc = T(0);
    for (int e : kFaceEdges[k]) acc += n[e];
    r.fe[k] = acc;
  }
  for (int i = 0; i < 3; ++i) {
    const int e = i;  // interior slots 4,5,6 are keyed to edges AB, AC, AD
    const int opp = kOppositeEdge[e];
    T others = T(0);
    for (int g = 0; g < 6; ++g)
      if (g != e && g != opp) others += n[g];
    r.Fi[i] = others * others - T(4) * n[e] * n[opp];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Identity ledger: cleared (denominator-free) polynomial forms of the
// natural-parameter identity suite.  Each entry evaluates an expression that
// is identically zero when n, n~ are derived from an arbitrary area 7-vector
// by the rational formulas above -- with NO constraint on Xi.  `degree` is
// the total degree in area units, used by the floating-point layer to
// normalize residuals by s^degree.
// ---------------------------------------------------------------------------

template <class T>
struct IdentityValue {
  const char* name;
  T value;
  int degree;
};

inline constexpr std::size_t kIdentitySuiteSize = 22;

template <class T>
std::array<IdentityValue<T>, kIdentitySuiteSize> identity_suite_cleared(
    const EvenAreas<T>& a) {
  std::array<IdentityValue<T>, kIdentitySuiteSize> out{};
  std::size_t idx = 0;
  const T s = pseudo_perimeter_of(a);
  const T xi = xi_of(a);
  const std::array<T, 6> p01 = tau01_products(a);  // = 2s * n_e
  const std::array<T, 6> p23 = tau23_products(a);  // = 2s * n~_e

  // (a) 2 sum(n) = s + 2 Xi / s    ->  sum(2s n) - s^2 - 2 Xi = 0
  {
    T acc = T(0);
    for (int e = 0; e < 6; ++e) acc += p01[e];
    out[idx++] = {"sum-of-parameters", acc - s * s - T(2) * xi, 2};
  }
  // (b) per face: sum_{e in face} n_e = f_face + Xi/(2s)
  //     ->  sum(2s n) - 2s f_face - Xi = 0
  for (int k = 0; k < 4; ++k) {
    T acc = T(0);
    for (int e : kFaceEdges[k]) acc += p01[e];
    out[idx++] = {"face-sum", acc - T(2) * s * a.fe[k] - xi, 2};
  }
  // (c) per vertex: sum_{e at vertex} n_e = (s - 2 f_opp)/2 + Xi/(2s)
  //     ->  sum(2s n) - s(s - 2 f_opp) - Xi = 0
  //     (follows from the face sums: add the three faces at the vertex and
  //     subtract the opposite one)
  for (int i = 0; i < 4; ++i) {
    T acc = T(0);
    for (int e : kVertexEdges[i]) acc += p01[e];
    const T fopp = a.fe[kVertexOppositeFace[i]];
    out[idx++] = {"vertex-sum", acc - s * (s - T(2) * fopp) - xi, 2};
  }
  // (d) opposite differences: n_e - n_opp = (f_g1 + f_g2 - f_h1 - f_h2)/2
  //     ->  (2s n_e - 2s n_opp) - s(f_g1 + f_g2 - f_h1 - f_h2) = 0
  for (int e = 0; e < 3; ++e) {
    const int opp = kOppositeEdge[e];
    const T rhs = a.fe[kEdgeFaces[e][0]] + a.fe[kEdgeFaces[e][1]] -
                  a.fe[kEdgeFaces[opp][0]] - a.fe[kEdgeFaces[opp][1]];
    out[idx++] = {"opposite-difference", p01[e] - p01[opp] - s * rhs, 2};
  }
  // (e) interior squares: (sum of other four n - Xi/s)^2 - 4 n_e n_opp = F_int
  //     cleared by (2s)^2:
  //     (sum(2s n_other) - 2 Xi)^2 - 4 (2s n_e)(2s n_opp) - 4 s^2 F_int = 0
  for (int e = 0; e < 3; ++e) {
    const int opp = kOppositeEdge[e];
    T others = T(0);
    for (int g = 0; g < 6; ++g)
      if (g != e && g != opp) others += p01[g];
    const T lhs = (others - T(2) * xi) * (others - T(2) * xi) -
                  T(4) * p01[e] * p01[opp];
    out[idx++] = {"interior-square",
                  lhs - T(4) * s * s * a.Fi[kEdgeInterior[e] - 4], 4};
  }
  // (f) (n_e + n~_e) s = 2 f_g1 f_g2
  //     ->  (2s n_e + 2s n~_e)/2 - 2 f_g1 f_g2 = 0
  for (int e = 0; e < 6; ++e) {
    const T lhs = (p01[e] + p23[e]) / T(2);
    out[idx++] = {"pair-sum",
                  lhs - T(2) * a.fe[kEdgeFaces[e][0]] * a.fe[kEdgeFaces[e][1]], 2};
  }
  // (h) s^2 - 2 s sum(n~) = 2 (F5 + F6 + F7) + 4 Xi
  //     ->  s^2 - sum(2s n~) - 2 (F5+F6+F7) - 4 Xi = 0
  {
    T acc = T(0);
    for (int e = 0; e < 6; ++e) acc += p23[e];
    out[idx++] = {"inverse-sum",
                  s * s - acc - T(2) * (a.Fi[0] + a.Fi[1] + a.Fi[2]) - T(4) * xi, 2};
  }
  // The sigma-signed dot-product identities need coordinates; they live in
  // the coordinate-level suite, not here.
  return out;
}

// Complementary-parameter recurrence, valid exactly on the Xi = 0 locus:
//   s^2 (2s n~_e) = (2s n_ac + 2s n_bc)(2s n_ad + 2s n_bd)
//                   - (2s n_e)(2s n_opp)  ... divided consistently:
// returns s^2 p23[e] - (p_ac+p_bc)(p_ad+p_bd) + p01[e] p01[opp], which is
// zero whenever xi_of(a) == 0.
template <class T>
std::array<T, 6> inverse_recurrence_cleared(const EvenAreas<T>& a) {
  std::array<T, 6> out{};
  const T s = pseudo_perimeter_of(a);
  const std::array<T, 6> p01 = tau01_products(a);
  const std::array<T, 6> p23 = tau23_products(a);
  for (int e = 0; e < 6; ++e) {
    const int va = kEdgeVerts[e][0];
    const int vb = kEdgeVerts[e][1];
    const int opp = kOppositeEdge[e];
    const int vc = kEdgeVerts[opp][0];
    const int vd = kEdgeVerts[opp][1];
    const T pac = p01[edge_index(va, vc)];
    const T pbc = p01[edge_index(vb, vc)];
    const T pad = p01[edge_index(va, vd)];
    const T pbd = p01[edge_index(vb, vd)];
    out[e] = s * s * p23[e] - (pac + pbc) * (pad + pbd) + p01[e] * p01[opp];
  }
  return out;
}

// ---------------------------------------------------------------------------
// X-factor: s (u-z)(v-y)(w-x) (u+v+w)(u+x+y)(v+x+z)(w+y+z)
// ---------------------------------------------------------------------------

template <class T>
T x_factor_generic(const Edge6T<T>& n) {
  const T &u = n[0], &v = n[1], &w = n[2], &x = n[3], &y = n[4], &z = n[5];
  const T s = T(2) * (u + v + w + x + y + z);
  return s * (u - z) * (v - y) * (w - x) * (u + v + w) * (u + x + y) *
         (v + x + z) * (w + y + z);
}

}  // namespace hedron
