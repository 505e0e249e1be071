#include "hedron/nsimplex.hpp"

#include <algorithm>
#include <cmath>

#include "hedron/linalg.hpp"

namespace hedron {

namespace {

using Point = std::array<double, 4>;  // zero-padded to 4 coordinates

double pdot(const Point& a, const Point& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Point psub(const Point& a, const Point& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

double pdist2(const Point& a, const Point& b) {
  const Point d = psub(a, b);
  return pdot(d, d);
}

// Gram determinant of the edge vectors from points[0]; k = points.size()-1.
double gram_det(const std::vector<Point>& points) {
  const std::size_t k = points.size() - 1;
  std::vector<Point> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = psub(points[i + 1], points[0]);
  auto fill = [&](auto& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = pdot(v[i], v[j]);
  };
  switch (k) {
    case 1: return pdot(v[0], v[0]);
    case 2: { SqMat<double, 2> m{}; fill(m); return det<double, 2>(m); }
    case 3: { SqMat<double, 3> m{}; fill(m); return det<double, 3>(m); }
    case 4: { SqMat<double, 4> m{}; fill(m); return det<double, 4>(m); }
    default: throw ParseError("unsupported simplex order");
  }
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// k-volume of the k-simplex spanned by the given k+1 points.
double simplex_volume(const std::vector<Point>& points) {
  const int k = static_cast<int>(points.size()) - 1;
  const double g = gram_det(points);
  return std::sqrt(std::max(g, 0.0)) / factorial(k);
}

// Orthogonal projection of p onto the affine hull of `base` (k+1 points,
// k <= 3) via the normal equations, solved with the cofactor inverse.
Point project_onto_hull(const Point& p, const std::vector<Point>& base) {
  const std::size_t k = base.size() - 1;
  std::vector<Point> b(k);
  for (std::size_t i = 0; i < k; ++i) b[i] = psub(base[i + 1], base[0]);
  const Point rel = psub(p, base[0]);

  std::array<double, 3> coeff{};
  if (k == 1) {
    coeff[0] = pdot(b[0], rel) / pdot(b[0], b[0]);
  } else if (k == 2) {
    SqMat<double, 2> g{};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) g[i][j] = pdot(b[i], b[j]);
    const double dg = det<double, 2>(g);
    const double r0 = pdot(b[0], rel), r1 = pdot(b[1], rel);
    coeff[0] = (g[1][1] * r0 - g[0][1] * r1) / dg;
    coeff[1] = (g[0][0] * r1 - g[1][0] * r0) / dg;
  } else if (k == 3) {
    SqMat<double, 3> g{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g[i][j] = pdot(b[i], b[j]);
    const double dg = det<double, 3>(g);
    const SqMat<double, 3> adj = adjugate3(g);
    for (std::size_t i = 0; i < 3; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < 3; ++j) acc += adj[i][j] * pdot(b[j], rel);
      coeff[i] = acc / dg;
    }
  } else {
    throw ParseError("unsupported hull order");
  }

  Point t = base[0];
  for (std::size_t i = 0; i < k; ++i)
    for (int c = 0; c < 4; ++c) t[c] += coeff[i] * b[i][c];
  return t;
}

}  // namespace

NSimplexReport nsimplex_conjecture_check(
    int dim, const std::vector<std::vector<double>>& vertices) {
  if (dim < 2 || dim > 4) throw ParseError("dimension must be 2, 3 or 4");
  const int nv = dim + 1;
  if (static_cast<int>(vertices.size()) != nv)
    throw ParseError("need dim+1 vertices");
  std::vector<Point> pts(nv);
  for (int i = 0; i < nv; ++i) {
    if (static_cast<int>(vertices[i].size()) != dim)
      throw ParseError("each vertex needs dim coordinates");
    Point p{};
    for (int c = 0; c < dim; ++c) p[c] = vertices[i][c];
    pts[i] = p;
  }

  double max_d = 0.0;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      max_d = std::max(max_d, std::sqrt(pdist2(pts[i], pts[j])));

  NSimplexReport rep;
  rep.dim = dim;
  rep.volume = simplex_volume(pts);
  double scale = 1.0;
  for (int i = 0; i < dim; ++i) scale *= max_d;
  if (factorial(dim) * rep.volume <= 1e-9 * scale)
    throw DegenerateSimplex("flat simplex: contact construction undefined");

  // Facet volumes and the in-sphere.
  std::vector<std::vector<Point>> facets(nv);
  std::vector<double> fvol(nv);
  double fsum = 0.0;
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j)
      if (j != i) facets[i].push_back(pts[j]);
    fvol[i] = simplex_volume(facets[i]);
    if (fvol[i] <= 0.0) throw DegenerateSimplex("flat facet");
    fsum += fvol[i];
  }
  Point center{};
  for (int i = 0; i < nv; ++i)
    for (int c = 0; c < 4; ++c) center[c] += fvol[i] / fsum * pts[i][c];
  rep.in_radius = dim * rep.volume / fsum;

  // Touch points: feet of the perpendiculars from the in-center.
  std::vector<Point> touch(nv);
  for (int i = 0; i < nv; ++i) touch[i] = project_onto_hull(center, facets[i]);

  // Contact simplices: on facet i, replace vertex j by touch[i].
  auto contact_volume = [&](int i, int j) {
    std::vector<Point> simplex;
    simplex.push_back(touch[i]);
    for (int k = 0; k < nv; ++k)
      if (k != i && k != j) simplex.push_back(pts[k]);
    return simplex_volume(simplex);
  };

  const double fac = factorial(dim - 1);
  double psum = 0.0;
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      const double cij = contact_volume(i, j);
      const double cji = contact_volume(j, i);
      const double ref = std::max({cij, cji, 1e-300});
      rep.max_pair_mismatch =
          std::max(rep.max_pair_mismatch, std::abs(cij - cji) / ref);
      const double entry = fac * 0.5 * (cij + cji);
      rep.hollow[i][j] = rep.hollow[j][i] = entry;
      psum += entry;
    }
  }

  double det_p = 0.0;
  if (dim == 2) {
    SqMat<double, 3> m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = rep.hollow[i][j];
    det_p = det<double, 3>(m);
  } else if (dim == 3) {
    SqMat<double, 4> m{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] = rep.hollow[i][j];
    det_p = det<double, 4>(m);
  } else {
    SqMat<double, 5> m{};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m[i][j] = rep.hollow[i][j];
    det_p = det<double, 5>(m);
  }

  rep.lhs = std::pow(factorial(dim) * rep.volume, 2.0 * (dim - 1));
  const double sign = (dim % 2 == 0) ? 1.0 : -1.0;
  rep.rhs = sign * std::pow(2.0 * psum, dim - 1) * det_p;
  const double ref = std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1e-300});
  rep.relative_residual = std::abs(rep.lhs - rep.rhs) / ref;
  return rep;
}

}  // namespace hedron
