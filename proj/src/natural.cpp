#include "hedron/natural.hpp"

#include <algorithm>
#include <cmath>

#include "hedron/identities.hpp"
#include "hedron/tetra.hpp"

namespace hedron {

namespace {

Areas7T<double> to_array(const FacialAreas& f) {
  return {f[0], f[1], f[2], f[3], f[4], f[5], f[6]};
}

}  // namespace

NaturalParams natural_from_areas(const FacialAreas& f) {
  NaturalParams n;
  n.n = natural_from_areas_generic(to_array(f));
  return n;
}

InverseParams inverse_from_areas(const FacialAreas& f) {
  InverseParams q;
  q.n = inverse_from_areas_generic(to_array(f));
  return q;
}

InverseParams inverse_from_natural(const NaturalParams& n) {
  InverseParams q;
  q.n = inverse_from_natural_generic(n.n);
  return q;
}

double omega(const NaturalParams& n) { return omega_quartic(n.n); }

double omega_det(const NaturalParams& n) { return omega_hollow_det(n.n); }

double t4_from_natural(const NaturalParams& n) {
  const double s = n.pseudo_perimeter();
  return s * s * omega(n);
}

double r2_from_natural(const NaturalParams& n) {
  const double s = n.pseudo_perimeter();
  if (s == 0.0) return 0.0;
  const double om = omega(n);
  if (om < 0.0)
    throw DegenerateParameters("Omega < 0: parameters are not realizable");
  return std::sqrt(om) / s;
}

std::array<double, 4> ptolemy_factors(const NaturalParams& n) {
  for (int e = 0; e < 6; ++e)
    if (n[e] < 0.0)
      throw NegativeParameter("factorization requires non-negative parameters");
  const double puz = std::sqrt(n[0] * n[5]);
  const double pvy = std::sqrt(n[1] * n[4]);
  const double pwx = std::sqrt(n[2] * n[3]);
  return {puz + pvy + pwx, pvy + pwx - puz, pwx + puz - pvy, puz + pvy - pwx};
}

SquaredDistances distances_from_natural(const NaturalParams& n) {
  const double om = omega(n);
  if (om <= 0.0)
    throw DegenerateParameters(
        "Omega <= 0: distances are undefined (or infinite) at degeneracy");
  const double s = n.pseudo_perimeter();
  const double r2 = std::sqrt(om) / s;
  const InverseParams q = inverse_from_natural(n);
  SquaredDistances d;
  for (int e = 0; e < 6; ++e) d[e] = n[e] * q[e] / r2;
  return d;
}

FacialAreas areas_from_natural(const NaturalParams& n) {
  const EvenAreas<double> parts = even_from_natural(n.n);
  const double s = parts.fe[0] + parts.fe[1] + parts.fe[2] + parts.fe[3];
  FacialAreas f;
  for (int k = 0; k < 4; ++k) f[k] = parts.fe[k];
  for (int i = 0; i < 3; ++i) {
    const double Fi = parts.Fi[i];
    if (Fi < -1e-12 * s * s)
      throw InvalidParameters("negative interior squared area");
    f[4 + i] = std::sqrt(std::max(Fi, 0.0));
  }
  return f;
}

namespace {

void normalized_push(IdentityReport& rep, const std::string& name, double value,
                     int degree, double s) {
  double scale = 1.0;
  const double base = std::max(s, 1e-300);
  for (int i = 0; i < degree; ++i) scale *= base;
  IdentityReport::Entry e;
  e.name = name;
  e.residual = std::abs(value) / scale;
  rep.max_residual = std::max(rep.max_residual, e.residual);
  rep.entries.push_back(std::move(e));
}

}  // namespace

IdentityReport identity_suite(const FacialAreas& f) {
  IdentityReport rep;
  const double s = f.pseudo_perimeter();
  const EvenAreas<double> ev = even_from_areas(to_array(f));
  const auto suite = identity_suite_cleared(ev);
  int counter = 0;
  for (const auto& id : suite)
    normalized_push(rep, std::string(id.name) + "#" + std::to_string(counter++),
                    id.value, id.degree, s);
  return rep;
}

IdentityReport identity_suite(const Tetrahedron& t) {
  const FacialAreas f = facial_areas(t);
  IdentityReport rep = identity_suite(f);
  const double s = f.pseudo_perimeter();

  // Sign-adjusted dot-product identities:
  //   dot(areal_g1, areal_g2) = sigma_e (n_e - n~_e) s / 2
  // with the unsigned face areal vectors (AB x AC, AB x AD, AC x AD, BC x BD).
  const ArealVectors av = areal_vectors(t);
  const NaturalParams n = natural_from_areas(f);
  const InverseParams q = inverse_from_areas(f);
  for (int e = 0; e < 6; ++e) {
    const Vec3& g1 = av.exterior[kEdgeFaces[e][0]];
    const Vec3& g2 = av.exterior[kEdgeFaces[e][1]];
    const double lhs = dot(g1, g2);
    const double rhs = kEdgeDotSign[e] * (n[e] - q[e]) * s / 2.0;
    normalized_push(rep, std::string("edge-dot#") + kEdgeNames[e], lhs - rhs, 2, s);
  }
  return rep;
}

double x_factor(const NaturalParams& n) { return x_factor_generic(n.n); }

}  // namespace hedron
