#pragma once

// Five-parameter description (alpha, beta, gamma, delta; sigma) of the
// degenerate families: parameter extraction with collinear sign assignment,
// the resolvent cubic for the leading natural parameter, the discriminant
// bound on the family size, and the two-branch recovery of full parameter
// six-tuples.

#include <array>
#include <cstddef>
#include <vector>

#include "hedron/types.hpp"

namespace hedron {

// Signed quadruple (alpha, beta, gamma, delta) together with the family size
// it was derived from.  Degenerate families carry the signs of their
// collinear realization; nondegenerate ones carry plain magnitudes.
struct ABGDParams {
  std::array<double, 4> value{};      // alpha, beta, gamma, delta
  double varsigma = 0.0;              // family size s at extraction time
  std::array<int, 4> sign_pattern{};  // entry signs (-1, 0, +1)
  int branch = -1;                    // vanishing quartic factor; -1 if none
  double operator[](std::size_t i) const { return value[i]; }
  double& operator[](std::size_t i) { return value[i]; }
};

// alpha^2 = 2uvw/s, beta^2 = 2uxy/s, gamma^2 = 2vxz/s, delta^2 = 2wyz/s.
// Degenerate input (|Omega| <= 1e-8 (s/2)^4) is routed through the collinear
// realization, whose signed positions are exactly this quadruple; otherwise
// the entries are the positive magnitudes, which equal the in-radius times
// the three coincident vertex-to-touch-point distances at each vertex.
// Throws NegativeParameter for clearly negative input entries.
ABGDParams abgd_from_natural(const NaturalParams& n);

struct CubicPsi {
  std::array<double, 4> coef{};  // a, b, c, d of  a u^3 + b u^2 + c u + d
  double discriminant = 0.0;     // 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
  std::vector<double> roots;     // real roots, ascending (with multiplicity)
};

// Resolvent cubic for the leading parameter u at the given family size.
// Requires generic parameters (nonzero squares, pairwise distinct) and a
// positive size; throws DegenerateParameters otherwise.
CubicPsi cubic_psi(const ABGDParams& abgd, double varsigma);

// The unique positive root rho+ of the quadratic (in sigma^2) carried by the
// cubic's discriminant: the cubic has three real roots iff sigma^2 > rho+.
// Also covers the symmetric collapse to a quadratic (vanishing leading
// coefficient).  Throws DegenerateParameters when no positive root exists.
double sigma_bound(const ABGDParams& abgd);

struct Solve2to2Result {
  std::vector<NaturalParams> solutions;  // 0..2, by ascending leading entry
  std::vector<double> roots;             // real roots of the resolvent cubic
  bool conditioning_warning = false;     // clustered roots; tolerances x100
};

// Recovers the degenerate six-tuples with the given signed quadruple and
// size: cubic roots, linear back-substitution for v and w, ratio relations
// for x, y, z, filtered to fully positive tuples that verify as degenerate
// with size sigma.  Throws NoSolution when sigma^2 <= rho+, InvalidParameters
// for sigma <= 0, and DegenerateParameters for non-generic or sign-invalid
// quadruples.
Solve2to2Result solve_2to2(const ABGDParams& abgd, double varsigma);

}  // namespace hedron
