#pragma once

// Algebra on the 7-vector of facial areas: saturation deviations, the
// quadratic exterior/interior balance, areal Gram matrices and their
// determinants, and the distance-polynomial determinants.

#include <array>

#include "hedron/linalg.hpp"
#include "hedron/types.hpp"

namespace hedron {

// Per-edge deviations (T0, T1, T2, T3) of the 18 triangle-like inequalities
// from saturation; T0 = T1 + T2 + T3 identically.
struct TauTable {
  std::array<std::array<double, 4>, 6> tau{};  // [edge][k]
  double min_deviation() const {               // min over the 18 T1,T2,T3
    double m = tau[0][1];
    for (const auto& row : tau)
      for (int k = 1; k < 4; ++k) m = std::min(m, row[k]);
    return m;
  }
};

TauTable tau_table(const FacialAreas& f);

// Xi = f1^2+f2^2+f3^2+f4^2 - f5^2 - f6^2 - f7^2 (zero for Euclidean areas).
double yetter_xi(const FacialAreas& f);

struct ArealGram {
  Mat4 g_ext{};                      // signed exterior areal-vector Gram
  std::array<Mat3, 4> g_vertex{};    // principal submatrices for A, B, C, D
  Mat3 g_int{};                      // interior areal-vector Gram
  std::array<double, 4> gramians{};  // det g_vertex[A..D]
  double gramian = 0.0;              // det g_vertex[A] (the Gramian)
  double xi = 0.0;
};

ArealGram areal_gram(const FacialAreas& f);

// 2x2 principal minor of the signed exterior Gram on the faces meeting at
// `edge`; factors as (1/4) T0 T1 T2 T3 = D_edge * t^2 for Euclidean inputs.
double gram_minor(const FacialAreas& f, int edge);

struct MinorFactorizationReport {
  std::array<double, 6> minor{};
  std::array<double, 6> quarter_tau_product{};  // (1/4) T0 T1 T2 T3 per edge
  double max_relative_residual = 0.0;
};

MinorFactorizationReport minor_factorization_check(const FacialAreas& f);

// All distance-polynomial determinants of a squared-distance 6-vector.
struct CmDeterminants {
  std::array<double, 4> face{};      // squared doubled face areas F_1..F_4
  std::array<double, 3> interior{};  // squared quadrupled interior areas
  std::array<double, 6> edge_dot{};  // ab . cd per edge (asymmetric 2-point)
  double four_point = 0.0;           // t^2
};

CmDeterminants cm_determinants(const SquaredDistances& d);

// Classify a 7-vector of would-be areas:
//   NonDegenerate3D  -- realizable with positive volume,
//   Rank2Degenerate  -- flat limit (areal Gram rank 2),
//   Rank1Planar      -- planar/collinear stratum (rank <= 1),
//   Invalid          -- not realizable (balance violated, a deviation
//                       negative, or negative Gramian).
Validity euclidean_area_validity(const FacialAreas& f);

}  // namespace hedron
