#include "hedron/areal.hpp"

#include <algorithm>
#include <cmath>

#include "hedron/identities.hpp"

namespace hedron {

namespace {

Areas7T<double> to_array(const FacialAreas& f) {
  return {f[0], f[1], f[2], f[3], f[4], f[5], f[6]};
}

Areas7T<double> squares(const FacialAreas& f) {
  Areas7T<double> F{};
  for (int i = 0; i < 7; ++i) F[i] = f[i] * f[i];
  return F;
}

}  // namespace

TauTable tau_table(const FacialAreas& f) {
  const auto rows = tau_rows(to_array(f));
  TauTable t;
  for (int e = 0; e < 6; ++e)
    t.tau[e] = {rows[e].t0, rows[e].t1, rows[e].t2, rows[e].t3};
  return t;
}

double yetter_xi(const FacialAreas& f) { return xi_of_areas(to_array(f)); }

ArealGram areal_gram(const FacialAreas& f) {
  const Areas7T<double> F = squares(f);
  ArealGram g;
  g.g_ext = gram_ext_from_F(F);
  for (int v = 0; v < 4; ++v) {
    g.g_vertex[v] = gram_at_vertex_from_F(F, v);
    g.gramians[v] = det3(g.g_vertex[v]);
  }
  g.g_int = gram_int_from_F(F);
  g.gramian = g.gramians[0];
  g.xi = xi_of_areas(to_array(f));
  return g;
}

double gram_minor(const FacialAreas& f, int edge) {
  return gram_minor_from_F(squares(f), edge);
}

MinorFactorizationReport minor_factorization_check(const FacialAreas& f) {
  MinorFactorizationReport r;
  const auto rows = tau_rows(to_array(f));
  const double s = f.pseudo_perimeter();
  const double scale = std::max(s * s * s * s, 1e-300);
  for (int e = 0; e < 6; ++e) {
    r.minor[e] = gram_minor(f, e);
    r.quarter_tau_product[e] =
        0.25 * rows[e].t0 * rows[e].t1 * rows[e].t2 * rows[e].t3;
    const double ref =
        std::max({std::abs(r.minor[e]), std::abs(r.quarter_tau_product[e]), scale * 1e-12});
    r.max_relative_residual = std::max(
        r.max_relative_residual, std::abs(r.minor[e] - r.quarter_tau_product[e]) / ref);
  }
  return r;
}

CmDeterminants cm_determinants(const SquaredDistances& d) {
  const Edge6T<double> dd = d.d;
  CmDeterminants r;
  for (int k = 0; k < 4; ++k) r.face[k] = face_area_det(dd, k);
  for (int i = 0; i < 3; ++i) r.interior[i] = interior_area_det(dd, i);
  for (int e = 0; e < 6; ++e) r.edge_dot[e] = edge_pair_dot_det(dd, e);
  r.four_point = volume_det(dd);
  return r;
}

Validity euclidean_area_validity(const FacialAreas& f) {
  const double s = f.pseudo_perimeter();
  if (s == 0.0) {
    // Only the all-zero vector can have s = 0 among non-negative areas; any
    // nonzero entry with zero exterior sum is unbalanced.
    for (int i = 0; i < 7; ++i)
      if (f[i] != 0.0) return Validity::Invalid;
    return Validity::Rank1Planar;
  }
  const double tol_xi = 1e-9 * s * s;
  const double tol_tau = 1e-9 * s;
  if (std::abs(yetter_xi(f)) > tol_xi) return Validity::Invalid;
  if (tau_table(f).min_deviation() < -tol_tau) return Validity::Invalid;

  const ArealGram g = areal_gram(f);
  const EigenResult<3> e = sym_eigen(g.g_vertex[0]);
  double lmax = 0.0;
  for (double l : e.values) lmax = std::max(lmax, std::abs(l));
  int rank = 0;
  for (double l : e.values)
    if (std::abs(l) > 1e-10 * lmax) ++rank;
  if (rank == 3) return g.gramian > 0.0 ? Validity::NonDegenerate3D : Validity::Invalid;
  if (rank == 2) return Validity::Rank2Degenerate;
  return Validity::Rank1Planar;
}

}  // namespace hedron
