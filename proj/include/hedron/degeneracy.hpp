#pragma once

// Flat (zero-volume) area families: the squeeze limit that produces them,
// the rank stratification of the areal Gram with the vanishing pattern of
// the complementary parameter products, the factorization of a flat family
// through a vertex-keyed pair of 4-vectors (m, n), the associated Pluecker
// coordinates on the Klein quadric with their sign-flip group action, and
// the four collinear points whose squared gaps are the complementary
// products.

#include <array>
#include <vector>

#include "hedron/linalg.hpp"
#include "hedron/types.hpp"

namespace hedron {

// Line coordinates keyed by edge (AB, AC, AD, BC, BD, CD).  Every vector
// produced by this module satisfies the Klein-quadric membership test
// p_AB p_CD - p_AC p_BD + p_AD p_BC = 0 within 1e-9 * |p|^2.
struct PluckerVector {
  std::array<double, 6> p{};

  double quadric_residual() const {  // p_AB p_CD - p_AC p_BD + p_AD p_BC
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
  }
  double norm2() const {
    double acc = 0.0;
    for (double v : p) acc += v * v;
    return acc;
  }
};

// Vertex-keyed pair of 4-vectors encoding a flat area family: in a basis of
// the plane spanned by the areal vectors, the signed exterior rows in face
// order are the complex squares (m_v + i n_v)^2, v the vertex opposite the
// face.  Invariants (implied by the Minkowski closure of the rows):
// dot(m, n) = 0 and |m|^2 = |n|^2 = s / 2, each within 1e-9 * s.
struct MNPair {
  std::array<double, 4> m{}, n{};
  // Rank of the factored Gram: 2 for a genuine plane, 1 when the areal rows
  // lie on a line (the second embedding column is zero), 0 for no area.
  int rank = 2;

  double pseudo_perimeter() const {  // s = |m|^2 + |n|^2
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) acc += m[i] * m[i] + n[i] * n[i];
    return acc;
  }
};

// Placement of an area/parameter family in the stratification of the zero
// set of the volume quartic by which complementary products n_e * n~_e
// vanish.  Vanishing products mark coincidences among the four collinear
// points, so a clean pattern is transitively closed (0, 1, 2, 3 or 6 of
// them) and all six vanish exactly on the rank <= 1 stratum.
struct LatticeNode {
  bool degenerate = false;          // volume quartic ~ 0 at tolerance
  int rank = 3;                     // rank of the areal Gram at a vertex
  std::array<bool, 6> vanishing{};  // |n_e * n~_e| <= 1e-8 * s^2, edge-keyed
  int vanishing_count = 0;
  bool consistent_pattern = true;   // transitive closure adds no new pair
  // Generic dimension of the stratum: 6 off the zero set, else 5 / 4 / 3
  // for 0 / 1 / >= 2 vanishing products.
  int generic_dimension = 6;
};

// Areas after flattening along `axis`: each doubled/quadrupled areal vector
// loses its component along the axis, and the output areas are the norms of
// the projections (the limit of the volume-squeezing maps that contract the
// two directions orthogonal to the axis and stretch the axis to compensate).
// Throws InvalidParameters on a zero axis and DegenerateInput when every
// projection vanishes (the configuration lies in a plane perpendicular to
// the axis, so no area survives).
FacialAreas squeeze_limit(const Tetrahedron& t, const Vec3& axis);

LatticeNode rank_and_lattice(const FacialAreas& f);
LatticeNode rank_and_lattice(const NaturalParams& n);

// Factor the signed exterior areal Gram of a flat family as W W^T through
// its top two eigenpairs and read each row of W as a complex square (the
// principal square root: nonnegative real part, and nonnegative imaginary
// part on the negative real axis).  Throws WrongRank when the Gram has rank
// above 2 or a significantly negative eigenvalue, ToleranceFailure when the
// factor violates the MNPair invariants.
MNPair mn_from_degenerate(const FacialAreas& f);

// Rows of the planar embedding in face order: ((m_v^2 - n_v^2), 2 m_v n_v)
// with v the vertex opposite the face.  These are the signed areal vectors
// AB x AC, -AB x AD, AC x AD, -BC x BD in the plane basis; they sum to zero.
std::array<Vec2, 4> planar_areal_rows(const MNPair& mn);

// All seven areas of the encoded flat family: exterior f_k = m_v^2 + n_v^2
// for the vertex v opposite face k, interior by
//   F_ab|cd = (f_opp(a) + f_opp(b))^2 - 4 p_ab^2.
FacialAreas areas_from_mn(const MNPair& mn);

// p_ab = m_a n_b - m_b n_a, edge-keyed.
PluckerVector plucker_from_mn(const MNPair& mn);

// n_e = 2 p_opp(e)^2 / s; all-zero when s = 0 (throws InvalidParameters on
// negative s).
NaturalParams natural_from_plucker(const PluckerVector& p, double s);

// n~_e = 2 q_opp(e)^2 / s with q_ab = m_a m_b + n_a n_b; all-zero when the
// pair has no area.
InverseParams inverse_from_mn(const MNPair& mn);

// Pluecker coordinates of a degenerate parameter vector: sqrt(s/2) times
// the square roots (z^, y^, x^, w^, v^, u^) of the reversed parameters,
// with the signs of the last three entries fixed by which signed factor of
// the volume quartic vanishes (nearest factor wins, ties to the lowest
// index).  Throws NegativeParameter on negative input and NotDegenerate
// when the quartic is not near zero.
PluckerVector plucker_from_natural(const NaturalParams& n);

// Orbit of the sign-flip action
//   [e0 e1 p_AB, e0 e2 p_AC, e0 e3 p_AD, e3 p_BC, e2 p_BD, e1 p_CD]
// over all (e0, e1, e2, e3) in {-1, +1}^4, duplicates collapsed and the
// members sorted lexicographically: 16 members generically, fewer when some
// coordinates vanish.  The action preserves quadric membership and the
// parameters recovered by natural_from_plucker; the three opposite-pair
// products p_AB p_CD, p_AC p_BD, p_AD p_BC keep their signs or flip all
// three together.
std::vector<PluckerVector> z24_orbit(const PluckerVector& p);

// Four signed positions on a line whose squared gaps are the complementary
// products n_e * n~_e (gap over edge ab between positions a and b).
struct CollinearQuadruple {
  std::array<double, 4> x{};              // positions of A, B, C, D
  int branch = 0;                         // vanishing quartic factor (0..3)
  std::array<double, 6> gap_sq{};         // (x_a - x_b)^2, edge-keyed
  std::array<double, 6> complementary{};  // n_e * n~_e, edge-keyed
  double max_residual = 0.0;              // max |gap_sq - complementary|
};

// Positions have magnitudes (u^v^w^, u^x^y^, v^x^z^, w^y^z^) / sqrt(s/2)
// and signs (+,+,+,+), (+,+,-,-), (+,-,+,-) or (+,-,-,+) according to the
// vanishing quartic factor.  Throws as plucker_from_natural.
CollinearQuadruple collinear_quadruple(const NaturalParams& n);

}  // namespace hedron
