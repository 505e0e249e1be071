#include "hedron/param2to2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hedron/degeneracy.hpp"
#include "hedron/natural.hpp"

namespace hedron {

namespace {

// sigma-stripped cubic coefficients: b = bh*sigma, c = ch*sigma^2,
// d = dh*sigma while a carries no sigma.
struct StrippedCoef {
  double a, bh, ch, dh;
};

StrippedCoef stripped_coef(const std::array<double, 4>& p) {
  const double al = p[0], be = p[1], ga = p[2], de = p[3];
  return {4.0 * ga * de * (al - ga) * (al - de) * (be - ga) * (be - de),
          -2.0 * al * be * ga * de *
              ((al - ga) * (be - de) + (al - de) * (be - ga)),
          al * al * be * be * ga * de,
          2.0 * al * al * be * be * (al - be) * (al - be) * (ga - de) *
              (ga - de)};
}

void require_generic(const std::array<double, 4>& v) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, x * x);
  if (!(scale > 0.0))
    throw DegenerateParameters("all four parameters vanish");
  for (int i = 0; i < 4; ++i) {
    if (v[i] * v[i] <= 1e-12 * scale)
      throw DegenerateParameters("parameter " + std::to_string(i) +
                                 " vanishes");
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(v[i] * v[i] - v[j] * v[j]) <= 1e-12 * scale)
        throw DegenerateParameters("coincident squared parameters " +
                                   std::to_string(i) + ", " +
                                   std::to_string(j));
  }
}

// Real roots of a cubic with a clearly nonzero leading coefficient:
// closed form (trigonometric for three real roots, stabilized Cardano for
// one), then two Newton corrections per root against the input polynomial.
std::vector<double> cubic_real_roots(double a, double b, double c, double d) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c),
                                 std::abs(d)});
  a /= scale, b /= scale, c /= scale, d /= scale;
  const double p = b / a, q = c / a, r = d / a;
  // Depressed form t^3 + P t + Q with x = t - p/3.
  const double P = q - p * p / 3.0;
  const double Q = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
  const double disc = -4.0 * P * P * P - 27.0 * Q * Q;

  std::vector<double> roots;
  if (disc > 0.0) {  // three distinct real roots (P < 0 here)
    const double pi = std::acos(-1.0);
    const double m = std::sqrt(-P / 3.0);
    const double arg = std::clamp(3.0 * Q / (2.0 * P * m), -1.0, 1.0);
    const double phi = std::acos(arg);
    for (int k = 0; k < 3; ++k)
      roots.push_back(2.0 * m * std::cos(phi / 3.0 - 2.0 * pi * k / 3.0));
  } else if (disc < 0.0) {  // one real root, stabilized against cancellation
    const double D = std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
    const double big = Q > 0.0 ? -Q / 2.0 - D : -Q / 2.0 + D;
    const double cb = std::cbrt(big);
    roots.push_back(cb == 0.0 ? 0.0 : cb - P / (3.0 * cb));
  } else {  // repeated roots
    if (P == 0.0) {
      roots.assign(3, 0.0);
    } else {
      roots = {3.0 * Q / P, -3.0 * Q / (2.0 * P), -3.0 * Q / (2.0 * P)};
    }
  }
  for (double& t : roots) {
    double x = t - p / 3.0;
    for (int it = 0; it < 2; ++it) {
      const double f = ((a * x + b) * x + c) * x + d;
      const double df = (3.0 * a * x + 2.0 * b) * x + c;
      if (df != 0.0) x -= f / df;
    }
    t = x;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

ABGDParams abgd_from_natural(const NaturalParams& n) {
  const double s = n.pseudo_perimeter();
  ABGDParams out;
  out.varsigma = s;
  if (!(s > 0.0)) return out;

  NaturalParams m = n;  // clamp roundoff noise; reject true negatives
  for (int e = 0; e < 6; ++e) {
    if (m[e] < -1e-12 * s)
      throw NegativeParameter("natural parameter " + std::to_string(e) +
                              " is negative");
    m[e] = std::max(m[e], 0.0);
  }

  const double gate = 1e-8 * std::pow(s / 2.0, 4);
  if (std::abs(omega(m)) <= gate) {
    // Degenerate: the signed collinear positions are the quadruple.
    const CollinearQuadruple cq = collinear_quadruple(m);
    out.value = cq.x;
    out.branch = cq.branch;
  } else {
    const double u = m[0], v = m[1], w = m[2];
    const double x = m[3], y = m[4], z = m[5];
    out.value = {std::sqrt(2.0 * u * v * w / s), std::sqrt(2.0 * u * x * y / s),
                 std::sqrt(2.0 * v * x * z / s), std::sqrt(2.0 * w * y * z / s)};
  }
  const double tiny = 1e-12 * (s / 2.0);
  for (int i = 0; i < 4; ++i)
    out.sign_pattern[i] =
        out.value[i] > tiny ? 1 : (out.value[i] < -tiny ? -1 : 0);
  return out;
}

CubicPsi cubic_psi(const ABGDParams& abgd, double varsigma) {
  require_generic(abgd.value);
  if (!(varsigma > 0.0))
    throw DegenerateParameters("the family size must be positive");
  const StrippedCoef sc = stripped_coef(abgd.value);
  CubicPsi out;
  out.coef = {sc.a, sc.bh * varsigma, sc.ch * varsigma * varsigma,
              sc.dh * varsigma};
  const double a = out.coef[0], b = out.coef[1], c = out.coef[2],
               d = out.coef[3];
  if (!(d > 0.0))  // positive by genericity; guards sign slips upstream
    throw DegenerateParameters("nonpositive constant term");
  out.discriminant = 18.0 * a * b * c * d - 4.0 * b * b * b * d +
                     b * b * c * c - 4.0 * a * c * c * c -
                     27.0 * a * a * d * d;
  out.roots = cubic_real_roots(a, b, c, d);
  return out;
}

double sigma_bound(const ABGDParams& abgd) {
  double scale = 0.0;
  for (double x : abgd.value) scale = std::max(scale, std::abs(x));
  if (!(scale > 0.0))
    throw DegenerateParameters("all four parameters vanish");
  const StrippedCoef sc = stripped_coef(abgd.value);
  // Discriminant = sigma^2 (A X^2 + B X + C) with X = sigma^2.
  const double A = sc.bh * sc.bh * sc.ch * sc.ch - 4.0 * sc.a * sc.ch * sc.ch * sc.ch;
  const double B = 18.0 * sc.a * sc.bh * sc.ch * sc.dh - 4.0 * sc.bh * sc.bh * sc.bh * sc.dh;
  const double C = -27.0 * sc.a * sc.a * sc.dh * sc.dh;
  const double unit = std::pow(scale, 24);  // A is of degree 24 in the values
  if (A <= 1e-300 * unit)
    throw DegenerateParameters("discriminant quadratic is not convex");
  const double rad = B * B - 4.0 * A * C;  // >= B^2 since C <= 0
  if (!(rad >= 0.0))
    throw DegenerateParameters("discriminant quadratic has no real root");
  const double sq = std::sqrt(rad);
  const double root =
      B <= 0.0 ? (-B + sq) / (2.0 * A) : -2.0 * C / (B + sq);
  if (!(root > 0.0))
    throw DegenerateParameters("no positive root of the discriminant");
  return root;
}

Solve2to2Result solve_2to2(const ABGDParams& abgd, double varsigma) {
  if (!(varsigma > 0.0))
    throw InvalidParameters("the family size must be positive");
  const double al = abgd.value[0], be = abgd.value[1];
  const double ga = abgd.value[2], de = abgd.value[3];
  const double prod = al * be * ga * de;
  double abs_sum = 0.0;
  for (double x : abgd.value) abs_sum += std::abs(x);
  if (!(prod > 0.0))
    throw DegenerateParameters("the parameter product must be positive");
  if (abs_sum - std::abs(al + be + ga + de) <= 1e-12 * abs_sum)
    throw DegenerateParameters("the parameters must not all share one sign");
  require_generic(abgd.value);

  const double bound = sigma_bound(abgd);
  if (!(varsigma * varsigma > bound))
    throw NoSolution("family size below the discriminant bound");

  const CubicPsi psi = cubic_psi(abgd, varsigma);
  Solve2to2Result out;
  out.roots = psi.roots;

  // Clustered roots: the recovery degenerates (the regular locus collapses
  // all of them); flag it and verify more loosely.
  double root_scale = 0.0;
  for (double r : psi.roots) root_scale = std::max(root_scale, std::abs(r));
  for (std::size_t i = 0; i + 1 < psi.roots.size(); ++i)
    if (psi.roots[i + 1] - psi.roots[i] <= 1e-6 * root_scale)
      out.conditioning_warning = true;
  const double widen = out.conditioning_warning ? 100.0 : 1.0;

  const double vden = be * (al - be) * (ga - de);
  if (vden == 0.0) return out;  // excluded by genericity; belt and braces
  for (const double u : psi.roots) {
    if (!(u > 0.0)) continue;
    // Linear elimination of the size equation, then of the closing relation.
    const double v =
        (al * be * ga * varsigma / 2.0 - ga * (al - ga) * (be - de) * u) / vden;
    if (!(v > 0.0)) continue;
    const double w = -(ga * de * u + be * de * v) / (be * ga);
    if (!(w > 0.0)) continue;
    // Complementary entries from the ratio relations.
    const double x = w * be * ga / (al * de);
    const double y = v * be * de / (al * ga);
    const double z = u * ga * de / (al * be);
    if (!(x > 0.0 && y > 0.0 && z > 0.0)) continue;
    NaturalParams n;
    n.n = {u, v, w, x, y, z};
    // Keep only tuples that verify as degenerate members of the family.
    const double s = n.pseudo_perimeter();
    if (std::abs(s - varsigma) > 1e-8 * widen * varsigma) continue;
    if (std::abs(omega(n)) > 1e-8 * widen * std::pow(varsigma / 2.0, 4))
      continue;
    if (std::abs(2.0 * u * v * w / s - al * al) >
        1e-8 * widen * std::max(al * al, 1e-300))
      continue;
    out.solutions.push_back(n);
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const NaturalParams& lhs, const NaturalParams& rhs) {
              return lhs[0] < rhs[0];
            });
  return out;
}

}  // namespace hedron
