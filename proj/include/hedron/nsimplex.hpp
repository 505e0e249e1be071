#pragma once

// Generalized contact-simplex volume formula for n-simplices (n = 2, 3, 4):
//
//   (n! V)^{2(n-1)} = (-1)^n (2 sum_{i<j} P_ij)^{n-1} det(P)
//
// where P is the hollow symmetric (n+1)x(n+1) matrix whose (i,j) entry is
// (n-1)! times the (n-1)-volume of the contact simplex containing the
// vertices other than i and j (built on the in-sphere touch point of facet i
// or, congruently, facet j).  For n = 3 this is the Heron-type identity
// t^4 = s^2 * Omega; for n = 2 it reduces to Heron's formula.

#include <array>
#include <vector>

#include "hedron/types.hpp"

namespace hedron {

struct NSimplexReport {
  int dim = 0;
  double volume = 0.0;     // n-volume
  double in_radius = 0.0;  // n V / (sum of facet volumes)
  double lhs = 0.0;        // (n! V)^{2(n-1)}
  double rhs = 0.0;        // (-1)^n (2 sum P_ij)^{n-1} det(P)
  double relative_residual = 0.0;
  // Worst relative volume mismatch between the two congruent representatives
  // of each contact simplex (facet i omitting j vs facet j omitting i).
  double max_pair_mismatch = 0.0;
  // Hollow matrix; only the top-left (dim+1)x(dim+1) block is meaningful.
  std::array<std::array<double, 5>, 5> hollow{};
};

// `vertices` must hold dim+1 points of dim coordinates each.
// Throws DegenerateSimplex for (near-)flat input, ParseError on shape errors.
NSimplexReport nsimplex_conjecture_check(
    int dim, const std::vector<std::vector<double>>& vertices);

}  // namespace hedron
