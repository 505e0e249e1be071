#include "hedron/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hedron/areal.hpp"
#include "hedron/identities.hpp"
#include "hedron/linalg.hpp"
#include "hedron/tetra.hpp"

namespace hedron {

namespace {

// Relative deviation of `got` from `want`, with `floor` guarding the
// denominator for entries that are legitimately zero.
double rel_dev(double got, double want, double floor_scale) {
  return std::abs(got - want) / std::max(std::abs(want), floor_scale);
}

}  // namespace

// ---------------------------------------------------------------------------
// Areas -> coordinates
// ---------------------------------------------------------------------------

ReconstructionResult reconstruct_from_areas(const FacialAreas& f) {
  Areas7T<double> F{};
  double sum_f = 0.0;
  for (int k = 0; k < 7; ++k) {
    F[k] = f[k] * f[k];
    sum_f += F[k];
  }
  const double s = f.pseudo_perimeter();
  if (sum_f <= 0.0) throw InvalidAreas("all areas are zero");
  if (std::abs(xi_of_squared_areas(F)) > 1e-8 * sum_f)
    throw InvalidAreas("area balance violated");
  if (tau_table(f).min_deviation() < -1e-9 * s)
    throw InvalidAreas("triangle-type inequality violated");

  const SqMat<double, 3> ga = gram_at_vertex_from_F<double>(F, 0);
  const double gamma = det<double, 3>(ga);
  if (!(gamma > 0.0))
    throw InvalidAreas("non-positive Gramian at A: " + std::to_string(gamma));

  const EigenResult<3> eig = sym_eigen<3>(ga);
  if (!(eig.values[2] > 0.0))
    throw InvalidAreas("areal Gram at A is not positive definite");

  // Factor G_A = V^T V with V = Lambda^(1/2) U^T; column c of V realizes the
  // c-th cross product (AB x AC, AD x AB, AC x AD) as a coordinate vector.
  std::array<double, 3> sq{};
  for (int r = 0; r < 3; ++r) sq[r] = std::sqrt(eig.values[r]);
  auto column = [&](int c) -> Vec3 {
    return {sq[0] * eig.vectors[c][0], sq[1] * eig.vectors[c][1],
            sq[2] * eig.vectors[c][2]};
  };
  const Vec3 p = column(0), q = column(1), r = column(2);

  const double t = std::sqrt(std::sqrt(gamma));

  ReconstructionResult res;
  res.vertices.a = Vec3{0, 0, 0};
  res.vertices.b = cross(p, q) / t;
  res.vertices.c = cross(r, p) / t;
  res.vertices.d = cross(q, r) / t;
  res.chirality =
      dot(res.vertices.b, cross(res.vertices.c, res.vertices.d)) >= 0.0 ? +1
                                                                        : -1;
  res.achieved_f = facial_areas(res.vertices);
  res.residual = 0.0;
  for (int k = 0; k < 7; ++k)
    res.residual =
        std::max(res.residual, rel_dev(res.achieved_f[k], f[k], 1e-12 * s));
  return res;
}

// ---------------------------------------------------------------------------
// Distances -> coordinates
// ---------------------------------------------------------------------------

Tetrahedron coords_from_distances(const SquaredDistances& d, int dim) {
  if (dim < 1 || dim > 3) throw ParseError("dimension must be 1, 2 or 3");

  // Gram matrix of the edge vectors AB, AC, AD.
  SqMat<double, 3> g{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double d_ai = d[edge_index(0, i + 1)];
      const double d_aj = d[edge_index(0, j + 1)];
      const double d_ij = (i == j) ? 0.0 : d[edge_index(i + 1, j + 1)];
      g[i][j] = 0.5 * (d_ai + d_aj - d_ij);
    }
  }

  const EigenResult<3> eig = sym_eigen<3>(g);
  double lmax = 0.0;
  for (double l : eig.values) lmax = std::max(lmax, std::abs(l));
  for (int k = 0; k < 3; ++k) {
    if (eig.values[k] < -1e-9 * lmax)
      throw NotRealizable("distance Gram matrix has a negative eigenvalue");
    if (k >= dim && eig.values[k] > 1e-9 * lmax)
      throw NotRealizable("distances need more than the requested dimension");
  }

  Tetrahedron t;
  t.a = Vec3{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    double coord[3] = {0, 0, 0};
    for (int k = 0; k < dim; ++k)
      coord[k] = std::sqrt(std::max(eig.values[k], 0.0)) * eig.vectors[i][k];
    t.vertex(i + 1) = Vec3{coord[0], coord[1], coord[2]};
  }

  // Verify the embedding reproduces the input distances.
  const SquaredDistances back = squared_distances(t);
  double scale = 0.0;
  for (int e = 0; e < 6; ++e) scale = std::max(scale, std::abs(d[e]));
  for (int e = 0; e < 6; ++e)
    if (std::abs(back[e] - d[e]) > 1e-8 * scale)
      throw NotRealizable("embedded distances do not reproduce the input");
  return t;
}

// ---------------------------------------------------------------------------
// The quadratic map and its Jacobian
// ---------------------------------------------------------------------------

std::array<double, 7> area_polynomial_map(const SquaredDistances& d,
                                          AreaMapBranch branch) {
  const Areas7T<double> F =
      squared_areas_from_distances<double>(d.d, branch == AreaMapBranch::plus);
  std::array<double, 7> out{};
  for (int k = 0; k < 7; ++k) out[k] = F[k];
  return out;
}

std::array<SqMat<double, 6>, 7> area_map_forms() {
  std::array<SqMat<double, 6>, 7> q{};
  // Triangle terms: for the three edges of face k,
  //   F_k = (1/4) [2 (sum of pairwise products) - (sum of squares)].
  for (int k = 0; k < 4; ++k) {
    for (int a : kFaceEdges[k]) {
      for (int b : kFaceEdges[k]) q[k][a][b] = (a == b) ? -0.25 : 0.25;
    }
  }
  // Opposite-edge terms: F = D_e * D_opp - (1/4) (D_p + D_pbar - D_r - D_rbar)^2
  // where (p, pbar) and (r, rbar) are the two remaining opposite pairs.
  for (int slot = 0; slot < 3; ++slot) {
    const int e = slot;  // interior slot 4+slot pairs edge `slot` with its opposite
    const int eb = kOppositeEdge[e];
    q[4 + slot][e][eb] = q[4 + slot][eb][e] = 0.5;
    std::array<int, 4> rest{};
    int cnt = 0;
    for (int g = 0; g < 6; ++g)
      if (g != e && g != eb) rest[cnt++] = g;
    // rest is sorted; rest[0] pairs with its opposite inside the set
    std::array<double, 6> sigma{};
    sigma[rest[0]] = 1.0;
    sigma[kOppositeEdge[rest[0]]] = 1.0;
    for (int g : rest)
      if (sigma[g] == 0.0) sigma[g] = -1.0;
    for (int ga : rest)
      for (int gb : rest) q[4 + slot][ga][gb] -= 0.25 * sigma[ga] * sigma[gb];
  }
  return q;
}

AreaMapJacobian area_map_jacobian(const SquaredDistances& d) {
  static const std::array<SqMat<double, 6>, 7> forms = area_map_forms();
  AreaMapJacobian out;
  for (int k = 0; k < 7; ++k)
    for (int e = 0; e < 6; ++e) {
      double acc = 0.0;
      for (int g = 0; g < 6; ++g) acc += forms[k][e][g] * d[g];
      out.rows[k][e] = 2.0 * acc;
    }

  SqMat<double, 6> jtj{};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      double acc = 0.0;
      for (int k = 0; k < 7; ++k) acc += out.rows[k][a] * out.rows[k][b];
      jtj[a][b] = acc;
    }
  out.det_jtj = det<double, 6>(jtj);
  out.four_point = volume_det<double>(d.d);
  return out;
}

// ---------------------------------------------------------------------------
// Inverting the map
// ---------------------------------------------------------------------------

AreaMapWitness invert_area_map(const std::array<double, 7>& F) {
  double sum_f = 0.0;
  for (double v : F) sum_f += std::abs(v);
  if (sum_f <= 0.0) throw DegenerateGramian("zero squared-area vector");
  Areas7T<double> Fa{};
  for (int k = 0; k < 7; ++k) Fa[k] = F[k];
  if (std::abs(xi_of_squared_areas(Fa)) > 1e-8 * sum_f)
    throw YetterViolated("squared-area balance violated");

  // The six edge forms: the triangle-type determinant of the two squared
  // face areas flanking the edge and the interior squared area across it.
  SquaredDistances q;
  for (int e = 0; e < 6; ++e) {
    const double fg1 = F[kEdgeFaces[e][0]];
    const double fg2 = F[kEdgeFaces[e][1]];
    const double fi = F[kEdgeInterior[e]];
    q[e] = 0.5 * (fg1 * fg2 + fg1 * fi + fg2 * fi) -
           0.25 * (fg1 * fg1 + fg2 * fg2 + fi * fi);
  }

  // One overall scale remains: delta* = (4-point determinant of q)^(-1/4),
  // and that determinant equals the squared Gramian at A on the balance
  // locus, so it is non-negative there and vanishes only with the Gramian.
  const double delta1 = volume_det<double>(q.d);
  const double gamma = det<double, 3>(gram_at_vertex_from_F<double>(Fa, 0));
  const double scale3 = (sum_f / 7.0) * (sum_f / 7.0) * (sum_f / 7.0);
  if (!(delta1 > 1e-20 * scale3 * scale3) || std::abs(gamma) <= 1e-10 * scale3)
    throw DegenerateGramian("vanishing Gramian: the map has no preimage");

  AreaMapWitness w;
  w.delta_star = 1.0 / std::sqrt(std::sqrt(delta1));
  for (int e = 0; e < 6; ++e) w.d_star[e] = w.delta_star * q[e];
  w.branch = gamma > 0.0 ? AreaMapBranch::plus : AreaMapBranch::minus;

  const std::array<double, 7> back = area_polynomial_map(w.d_star, w.branch);
  w.residual = 0.0;
  for (int k = 0; k < 7; ++k)
    w.residual =
        std::max(w.residual, rel_dev(back[k], F[k], 1e-12 * sum_f));
  if (w.residual > 1e-8)
    throw ToleranceFailure("preimage verification failed: residual " +
                           std::to_string(w.residual));
  return w;
}

}  // namespace hedron
