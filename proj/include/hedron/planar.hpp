#pragma once

#include <array>
#include <vector>

#include "hedron/types.hpp"

namespace hedron {

// ---------------------------------------------------------------------------
// Classification of planar (rank-1) four-point configurations.
//
// A family whose signed areal Gram has rank 1 realizes four coplanar points,
// determined up to area-preserving affine maps.  Exactly sixteen combinations
// of saturated triangle-type deviations (one of T1, T2, T3 per edge) are
// mutually consistent; they split into seven groups by which vanishing
// pattern the natural / inverse natural parameters follow, which in turn
// matches the seven four-point chirotopes of the affine plane:
//   - classes 0..3: one vertex lies in the convex span of the other three
//     (A, B, C, D respectively); three parameters at that vertex vanish.
//   - classes 4..7, 8..11, 12..15: all four points are extreme; one opposite
//     pair of natural parameters vanishes (AB|CD, AC|BD, AD|BC respectively,
//     naming the pair of edges that cross), four inverses vanish with it.
// Within each convex group the four classes are told apart by which of the
// deviations T2 / T3 saturate on the four edges carrying vanishing inverses.
// ---------------------------------------------------------------------------

// Frozen per-class data.
struct PlanarClassSpec {
  // Per edge (AB, AC, AD, BC, BD, CD): which deviation (1, 2 or 3) vanishes.
  std::array<int, 6> saturated{};
  // Signed interior sums U_k := e1*f_int[0] + e2*f_int[1] + e3*f_int[2] with
  // e_k = -1 and the other two +1 (U_0 = sum of all three).  Entry [i] gives
  // the k whose +-U_k / 2 equals exterior area i (faces ABC, ABD, ACD, BCD).
  std::array<int, 4> upsilon_index{};
  // Which U_k enters with a minus sign (-1 when none does).
  int negated_upsilon = -1;
  // Signs of the barycentric coordinates (alpha_B, alpha_C, alpha_D) of A
  // with respect to triangle BCD.
  std::array<int, 3> alpha_signs{};
  // 0..6: 0-3 = vertex A/B/C/D inside the hull, 4/5/6 = convex with crossing
  // edge pair AB|CD, AC|BD, AD|BC.
  int chirotope_case = -1;
};

const PlanarClassSpec& planar_class_spec(int class_id);

struct PlanarClass {
  int class_id = -1;      // 0..15, or -1 when the input sits on a boundary
  int chirotope_case = -1;  // common chirotope of the candidates, else -1
  std::array<int, 3> alpha_signs{};
  std::array<int, 4> upsilon_index{};
  int negated_upsilon = -1;
  // Every class whose saturation requirements hold within tolerance, sorted.
  // Size 1 away from boundaries; boundary inputs list all adjacent classes.
  std::vector<int> candidates;
};

// Classify a planar family by its natural and inverse natural parameters.
// A parameter counts as vanishing when it is at most 1e-7 * s (s the
// pseudo-perimeter); deviations saturate at the same relative tolerance.
// Throws NotRank1 if some edge has neither parameter vanishing (the family
// is not planar) or no class pattern is consistent.
PlanarClass classify_planar(const NaturalParams& n, const InverseParams& inv);

// Exterior areas (faces ABC, ABD, ACD, BCD; doubled-area units) from the
// three interior areas (slots AB|CD, AC|BD, AD|BC; quadrupled-parallelogram
// units) via the class's signed sums.  Throws InconsistentAreas when a
// signed sum is negative, i.e. the interior triple is not realizable in the
// requested class.
std::array<double, 4> exterior_from_interior(int class_id,
                                             const std::array<double, 3>& interior);

// Barycentric coordinates (alpha_B, alpha_C, alpha_D) of vertex A with
// respect to triangle BCD: magnitudes are ratios of exterior areas, signs
// come from the class.  Throws DegenerateBase when f_BCD vanishes and
// InconsistentAreas when the signed coordinates fail to sum to 1.
std::array<double, 3> barycentric_from_areas(const FacialAreas& f, int class_id);

// Periodic sequence of the orderings of four labeled points obtained by
// projecting them onto a rotating oriented line.  The order changes exactly
// when the line crosses a direction orthogonal to one of the six connecting
// segments; one permutation is recorded per arc between consecutive critical
// directions.  The cycle is returned in canonical form: lexicographically
// minimal over cyclic rotation, inversion of every permutation, and reversal
// of the sequence.  Throws CoincidentPoints when two points coincide.
struct AllowableSequence {
  std::vector<std::array<int, 4>> perms;
};
AllowableSequence allowable_sequence(const std::array<Vec2, 4>& pts);

// The planar realization of a consistent rank-1 squared-area vector that
// minimizes the squared radius of gyration about the centroid (equal to the
// sum of the six squared distances divided by 16).  The base triangle BCD is
// solved in closed form from a Lagrangian with the area constraint; A is
// placed barycentrically.  The same distances result from any choice of
// base.  Throws InconsistentAreas when the areas cannot be realized.
struct CanonicalPlanarConfig {
  SquaredDistances d_star;
  std::array<Vec2, 4> coordinates;  // A, B, C, D
  double gyration = 0.0;
};
CanonicalPlanarConfig canonical_planar(const std::array<double, 7>& F, int class_id);

}  // namespace hedron
