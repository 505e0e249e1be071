#pragma once

// Natural and inverse parameters: the six edge-keyed contact-triangle areas
// as rational functions of the facial areas, the quartic Omega with
// t^4 = s^2 * Omega, the Ptolemy-style factorization, distances and areas
// back from the parameters, the identity suite, and the X-factor.

#include <array>
#include <string>
#include <vector>

#include "hedron/types.hpp"

namespace hedron {

// n_e = T0[e] T1[e] / (2s); all-zero when s = 0.
NaturalParams natural_from_areas(const FacialAreas& f);

// n~_e = T2[e] T3[e] / (2s); all-zero when s = 0.
InverseParams inverse_from_areas(const FacialAreas& f);

// n~_e = 2((n_ac+n_bc)(n_ad+n_bd) - n_e n_opp)/s with s = 2 sum(n);
// total on arbitrary reals with s != 0 (all-zero when s = 0).
InverseParams inverse_from_natural(const NaturalParams& n);

// Omega = 2vwxy + 2uwxz + 2uvyz - u^2z^2 - v^2y^2 - w^2x^2.
double omega(const NaturalParams& n);
// Same value as minus the determinant of the hollow symmetric matrix
// [[0,u,v,w],[u,0,x,y],[v,x,0,z],[w,y,z,0]].
double omega_det(const NaturalParams& n);

// t^4 = s^2 Omega and r^2 = sqrt(Omega)/s (in-radius squared).
double t4_from_natural(const NaturalParams& n);
double r2_from_natural(const NaturalParams& n);

// (O0, O1, O2, O3) with O0 = sqrt(uz) + sqrt(vy) + sqrt(wx) and the three
// signed variants; their product equals Omega.  Requires n >= 0.
std::array<double, 4> ptolemy_factors(const NaturalParams& n);

// D_ab = n_e n~_e / r^2; requires Omega > 0.
SquaredDistances distances_from_natural(const NaturalParams& n);

// Exterior areas as face sums; interior areas from the square roots of
// (sum of the other four)^2 - 4 * opposite product.  The output satisfies
// the quadratic balance Xi = 0 identically.
FacialAreas areas_from_natural(const NaturalParams& n);

struct IdentityReport {
  struct Entry {
    std::string name;
    double residual = 0.0;  // normalized by s^degree
  };
  std::vector<Entry> entries;
  double max_residual = 0.0;
};

// Evaluates the full identity suite on the given areas (parameters are
// derived internally).  The overload taking coordinates additionally checks
// the six sign-adjusted dot-product identities
//   dot(areal_g1, areal_g2) = sigma_e (n_e - n~_e) s / 2.
IdentityReport identity_suite(const FacialAreas& f);
IdentityReport identity_suite(const Tetrahedron& t);

// s (u-z)(v-y)(w-x) (u+v+w)(u+x+y)(v+x+z)(w+y+z); zero for equi-facial input.
double x_factor(const NaturalParams& n);

// Per-edge sign of the dot-product identity: -epsilon_g1 epsilon_g2 for the
// signed areal-vector family, concretely (+1,-1,+1,+1,-1,+1).
inline constexpr double kEdgeDotSign[6] = {+1, -1, +1, +1, -1, +1};

}  // namespace hedron
