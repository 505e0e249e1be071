#pragma once

// Core value types and labeling conventions.
//
// Vertex labels:  0=A, 1=B, 2=C, 3=D.
// Edge order:     AB, AC, AD, BC, BD, CD   (indices 0..5); opposite edge
//                 pairs are (AB,CD), (AC,BD), (AD,BC) = (0,5), (1,4), (2,3).
// Face order:     ABC, ABD, ACD, BCD (indices 0..3); face k omits vertex 3-k.
// Area vector f:  [f_ABC, f_ABD, f_ACD, f_BCD, f_AB|CD, f_AC|BD, f_AD|BC].
//                 Exterior entries are *doubled* triangle areas
//                 (f_abc = 2*|abc| = |ab x ac|); the three interior entries
//                 are *quadrupled* medial-parallelogram areas
//                 (f_ab|cd = 4*|ab|cd| = |ab x cd|).
// Natural params: edge-keyed [u,v,w,x,y,z] <-> [AB,AC,AD,BC,BD,CD].

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "hedron/linalg.hpp"

namespace hedron {

// ---------------------------------------------------------------------------
// Labeling tables
// ---------------------------------------------------------------------------

inline constexpr std::size_t kNumEdges = 6;
inline constexpr std::size_t kNumFaces = 4;

inline constexpr const char* kVertexNames[4] = {"A", "B", "C", "D"};
inline constexpr const char* kEdgeNames[6] = {"AB", "AC", "AD", "BC", "BD", "CD"};
inline constexpr const char* kFaceNames[4] = {"ABC", "ABD", "ACD", "BCD"};
inline constexpr const char* kInteriorNames[3] = {"AB|CD", "AC|BD", "AD|BC"};
inline constexpr const char* kNaturalNames[6] = {"u", "v", "w", "x", "y", "z"};

// Endpoints of each edge.
inline constexpr int kEdgeVerts[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                         {1, 2}, {1, 3}, {2, 3}};
// Opposite (vertex-disjoint) edge.
inline constexpr int kOppositeEdge[6] = {5, 4, 3, 2, 1, 0};
// The two faces containing each edge.  The first entry is the face that
// contains the *smaller* of the two complementary vertex labels.
inline constexpr int kEdgeFaces[6][2] = {{0, 1}, {0, 2}, {1, 2},
                                         {0, 3}, {1, 3}, {2, 3}};
// The medial (interior) area associated with each edge, as an index into the
// 7-entry area vector: AB,CD -> AB|CD (4); AC,BD -> AC|BD (5); AD,BC -> AD|BC (6).
inline constexpr int kEdgeInterior[6] = {4, 5, 6, 6, 5, 4};
// The three edges incident to each vertex.
inline constexpr int kVertexEdges[4][3] = {{0, 1, 2},   // A: AB, AC, AD
                                           {0, 3, 4},   // B: AB, BC, BD
                                           {1, 3, 5},   // C: AC, BC, CD
                                           {2, 4, 5}};  // D: AD, BD, CD
// The three edges spanning each face.
inline constexpr int kFaceEdges[4][3] = {{0, 1, 3},   // ABC: AB, AC, BC
                                         {0, 2, 4},   // ABD: AB, AD, BD
                                         {1, 2, 5},   // ACD: AC, AD, CD
                                         {3, 4, 5}};  // BCD: BC, BD, CD
// Vertices of each face.
inline constexpr int kFaceVerts[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
// The vertex omitted by each face (face k omits vertex 3-k).
inline constexpr int kFaceOppositeVertex[4] = {3, 2, 1, 0};
// Face opposite a vertex (contains the other three vertices).
inline constexpr int kVertexOppositeFace[4] = {3, 2, 1, 0};

constexpr int edge_index(int va, int vb) {
  for (int e = 0; e < 6; ++e)
    if ((kEdgeVerts[e][0] == va && kEdgeVerts[e][1] == vb) ||
        (kEdgeVerts[e][0] == vb && kEdgeVerts[e][1] == va))
      return e;
  return -1;
}

// ---------------------------------------------------------------------------
// Value types
// ---------------------------------------------------------------------------

struct Tetrahedron {
  Vec3 a, b, c, d;
  const Vec3& vertex(std::size_t i) const {
    return i == 0 ? a : (i == 1 ? b : (i == 2 ? c : d));
  }
  Vec3& vertex(std::size_t i) { return i == 0 ? a : (i == 1 ? b : (i == 2 ? c : d)); }
};

// Squared distances in edge order [AB, AC, AD, BC, BD, CD].
struct SquaredDistances {
  std::array<double, 6> d{};
  double operator[](std::size_t i) const { return d[i]; }
  double& operator[](std::size_t i) { return d[i]; }
};

// Seven-entry area vector (doubled exterior / quadrupled interior).
struct FacialAreas {
  std::array<double, 7> f{};
  double operator[](std::size_t i) const { return f[i]; }
  double& operator[](std::size_t i) { return f[i]; }
  // Pseudo-perimeter: sum of the four (doubled) exterior areas.
  double pseudo_perimeter() const { return f[0] + f[1] + f[2] + f[3]; }
};

// Natural (in-touch) parameters in edge order [u, v, w, x, y, z].
struct NaturalParams {
  std::array<double, 6> n{};
  double operator[](std::size_t i) const { return n[i]; }
  double& operator[](std::size_t i) { return n[i]; }
  double pseudo_perimeter() const {
    return 2.0 * (n[0] + n[1] + n[2] + n[3] + n[4] + n[5]);
  }
};

// Inverse natural parameters [u~, v~, w~, x~, y~, z~], same edge order.
struct InverseParams {
  std::array<double, 6> n{};
  double operator[](std::size_t i) const { return n[i]; }
  double& operator[](std::size_t i) { return n[i]; }
};

enum class Validity {
  NonDegenerate3D,  // realizable with positive volume
  Rank2Degenerate,  // flat (planar) but two-dimensional
  Rank1Planar,      // collinear-degenerate area data (rank <= 1)
  Invalid,          // not realizable at all
};

inline const char* to_string(Validity v) {
  switch (v) {
    case Validity::NonDegenerate3D: return "nondegenerate";
    case Validity::Rank2Degenerate: return "rank2-degenerate";
    case Validity::Rank1Planar: return "rank1-planar";
    case Validity::Invalid: return "invalid";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Base class for all domain errors; `code` is a stable machine-readable name.
struct Error : std::runtime_error {
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define HEDRON_DEFINE_ERROR(NAME, CODE)                       \
  struct NAME : Error {                                       \
    explicit NAME(const std::string& message)                 \
        : Error(CODE, message) {}                             \
  }

HEDRON_DEFINE_ERROR(DegenerateTetrahedron, "degenerate-tetrahedron");
HEDRON_DEFINE_ERROR(ExSphereUndefined, "ex-sphere-undefined");
HEDRON_DEFINE_ERROR(NegativeParameter, "negative-parameter");
HEDRON_DEFINE_ERROR(DegenerateParameters, "degenerate-parameters");
HEDRON_DEFINE_ERROR(InvalidParameters, "invalid-parameters");
HEDRON_DEFINE_ERROR(InvalidAreas, "invalid-areas");
HEDRON_DEFINE_ERROR(NotRealizable, "not-realizable");
HEDRON_DEFINE_ERROR(YetterViolated, "yetter-violated");
HEDRON_DEFINE_ERROR(DegenerateGramian, "degenerate-gramian");
HEDRON_DEFINE_ERROR(WrongRank, "wrong-rank");
HEDRON_DEFINE_ERROR(NotDegenerate, "not-degenerate");
HEDRON_DEFINE_ERROR(NotRank1, "not-rank-1");
HEDRON_DEFINE_ERROR(InconsistentAreas, "inconsistent-areas");
HEDRON_DEFINE_ERROR(DegenerateBase, "degenerate-base");
HEDRON_DEFINE_ERROR(CoincidentPoints, "coincident-points");
HEDRON_DEFINE_ERROR(DegenerateSimplex, "degenerate-simplex");
HEDRON_DEFINE_ERROR(DegenerateInput, "degenerate-input");
HEDRON_DEFINE_ERROR(NoSolution, "no-solution");
HEDRON_DEFINE_ERROR(ParseError, "parse-error");
HEDRON_DEFINE_ERROR(ToleranceFailure, "tolerance-failure");

#undef HEDRON_DEFINE_ERROR

// sqrt with a guard band for roundoff: radicands in [-1e-12 * eps_scale, 0)
// are clamped to zero; anything more negative throws NegativeParameter.
// `eps_scale` is the natural magnitude of the radicand (e.g. s^2 for squared
// areas), so the clamp window is resolution-relative, not absolute.
inline double guarded_sqrt(double x, double eps_scale,
                           const char* what = "radicand") {
  if (x < 0.0) {
    if (x >= -1e-12 * eps_scale) return 0.0;
    throw NegativeParameter(std::string(what) + " = " + std::to_string(x));
  }
  return std::sqrt(x);
}

// ---------------------------------------------------------------------------
// Vertex relabeling
// ---------------------------------------------------------------------------

// perm[i] = new label of old vertex i.  Edges, faces and naturals are
// re-keyed accordingly (areas are label-symmetric within each simplex).
struct VertexPermutation {
  std::array<int, 4> perm{0, 1, 2, 3};
};

inline Tetrahedron permute(const Tetrahedron& t, const VertexPermutation& p) {
  Tetrahedron r;
  for (std::size_t i = 0; i < 4; ++i) r.vertex(p.perm[i]) = t.vertex(i);
  return r;
}

inline SquaredDistances permute(const SquaredDistances& d, const VertexPermutation& p) {
  SquaredDistances r;
  for (int e = 0; e < 6; ++e) {
    const int ne = edge_index(p.perm[kEdgeVerts[e][0]], p.perm[kEdgeVerts[e][1]]);
    r[ne] = d[e];
  }
  return r;
}

inline NaturalParams permute(const NaturalParams& n, const VertexPermutation& p) {
  NaturalParams r;
  for (int e = 0; e < 6; ++e) {
    const int ne = edge_index(p.perm[kEdgeVerts[e][0]], p.perm[kEdgeVerts[e][1]]);
    r[ne] = n[e];
  }
  return r;
}

inline InverseParams permute(const InverseParams& n, const VertexPermutation& p) {
  InverseParams r;
  for (int e = 0; e < 6; ++e) {
    const int ne = edge_index(p.perm[kEdgeVerts[e][0]], p.perm[kEdgeVerts[e][1]]);
    r[ne] = n[e];
  }
  return r;
}

inline FacialAreas permute(const FacialAreas& f, const VertexPermutation& p) {
  FacialAreas r;
  for (int k = 0; k < 4; ++k) {
    // face k omits vertex 3-k; the image face omits perm[3-k]
    const int nf = kVertexOppositeFace[p.perm[kFaceOppositeVertex[k]]];
    r[nf] = f[k];
  }
  for (int e : {0, 1, 2}) {  // interior areas are keyed by edge pairs {e, opp}
    const int ne = edge_index(p.perm[kEdgeVerts[e][0]], p.perm[kEdgeVerts[e][1]]);
    const int slot = kEdgeInterior[e];
    const int nslot = kEdgeInterior[ne];
    r[nslot] = f[slot];
  }
  return r;
}

}  // namespace hedron
