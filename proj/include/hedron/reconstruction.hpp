#pragma once

// Inverse problems: recovering vertex coordinates from the seven facial
// areas, recovering coordinates from squared distances, and inverting the
// quadratic polynomial map from squared distances to squared areas.

#include <array>

#include "hedron/types.hpp"

namespace hedron {

// ---------------------------------------------------------------------------
// Areas -> coordinates
// ---------------------------------------------------------------------------

struct ReconstructionResult {
  Tetrahedron vertices;    // vertex A at the origin
  FacialAreas achieved_f;  // areas recomputed from `vertices`
  double residual = 0.0;   // max relative deviation of achieved_f from input
  int chirality = +1;      // sign of det[AB, AC, AD] of the output; the input
                           // areas cannot distinguish the two mirror images
};

// Builds the 3x3 areal Gram matrix at vertex A from the squared areas,
// diagonalizes it, reads the three cross-product vectors off the factor, and
// converts them back to vertex coordinates.  The output is unique up to
// isometry; `chirality` records which mirror image was produced.
//
// Throws InvalidAreas when the areas are not those of a solid tetrahedron:
// balance residual beyond 1e-8 * (sum of squared areas), a negative
// triangle-type deviation beyond 1e-9 * s, or a non-positive Gramian.
ReconstructionResult reconstruct_from_areas(const FacialAreas& f);

// ---------------------------------------------------------------------------
// Distances -> coordinates
// ---------------------------------------------------------------------------

// Embeds the four points in R^dim (dim = 1, 2 or 3) with vertex A at the
// origin, via the eigendecomposition of the Gram matrix of edge vectors at A:
// G[i][j] = (D_Ai + D_Aj - D_ij) / 2.  Unused coordinates are zero.
//
// Throws ParseError for dim outside 1..3 and NotRealizable when the Gram
// matrix has a significantly negative eigenvalue or more than `dim`
// significantly positive ones (the embedded distances would not reproduce
// the input within 1e-8 relative).
Tetrahedron coords_from_distances(const SquaredDistances& d, int dim);

// ---------------------------------------------------------------------------
// The quadratic map from squared distances to squared areas
// ---------------------------------------------------------------------------

enum class AreaMapBranch { plus, minus };

inline const char* to_string(AreaMapBranch b) {
  return b == AreaMapBranch::plus ? "plus" : "minus";
}

// The seven homogeneous quadratics in the squared distances: four triangle
// terms (ABC, ABD, ACD, BCD) followed by three opposite-edge terms
// (AB|CD, AC|BD, AD|BC), all negated on the minus branch.  On genuine
// squared distances the plus branch returns the squared area vector F.
std::array<double, 7> area_polynomial_map(const SquaredDistances& d,
                                          AreaMapBranch branch);

// Coefficient matrices of those seven quadratic forms: component k of the
// map is d^T * matrix[k] * d.  Exposed for exact-arithmetic checks.
std::array<SqMat<double, 6>, 7> area_map_forms();

struct AreaMapJacobian {
  std::array<std::array<double, 6>, 7> rows{};  // rows[k][e] = dF_k / dD_e
  double det_jtj = 0.0;   // det(J^T J) = 28 * four_point^4
  double four_point = 0.0;  // 4-point distance determinant (t^2 when solid)
};

// Analytic Jacobian of the plus branch at d; rows are the gradients
// 2 * matrix[k] * d.  [1,1,1,1,-1,-1,-1] is always a left null vector.
AreaMapJacobian area_map_jacobian(const SquaredDistances& d);

struct AreaMapWitness {
  SquaredDistances d_star;  // preimage of F under the selected branch
  AreaMapBranch branch = AreaMapBranch::plus;
  double delta_star = 0.0;  // scale factor applied to the distance forms
  double residual = 0.0;    // max relative deviation of p_branch(d_star) - F
};

// Closed-form inversion of the map: the six quadratic forms of the squared
// areas give the squared distances up to one overall scale delta*, which the
// fourth root of the 4-point determinant fixes.  The branch is selected by
// the sign of the areal Gramian at A.
//
// Throws YetterViolated when the balance residual exceeds
// 1e-8 * (sum |F_k|); DegenerateGramian when the Gramian at A vanishes (the
// map has no critical point there); ToleranceFailure when the verification
// p_branch(d_star) = F misses 1e-8 relative.
AreaMapWitness invert_area_map(const std::array<double, 7>& F);

}  // namespace hedron
