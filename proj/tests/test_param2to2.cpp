// The five-parameter description of degenerate families: signed quadruple
// extraction, the vertex-to-touch-point interpretation of the magnitudes,
// the resolvent cubic, the discriminant bound on the family size, and the
// two-branch recovery of natural parameters.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "hedron/degeneracy.hpp"
#include "hedron/natural.hpp"
#include "hedron/param2to2.hpp"
#include "hedron/rng.hpp"
#include "hedron/tetra.hpp"
#include "hedron/types.hpp"
#include "helpers.hpp"

namespace {

using namespace hedron;
using hedron::testing::close;
using hedron::testing::random_point;
using hedron::testing::random_tetra;
using hedron::testing::regular_unit;
using hedron::testing::right_corner;

// Degenerate naturals with strictly positive entries from a random squeeze;
// entries are clamped of roundoff noise.  Returns false for thin samples.
bool squeezed_naturals(Rng& rng, NaturalParams& out) {
  const Tetrahedron tet = random_tetra(rng, 1e-2);
  Vec3 axis = random_point(rng);
  if (norm(axis) < 1e-3) return false;
  const FacialAreas flat = squeeze_limit(tet, axis);
  NaturalParams n = natural_from_areas(flat);
  const double s = n.pseudo_perimeter();
  if (!(s > 0.0)) return false;
  double lo = n[0];
  for (int e = 0; e < 6; ++e) {
    n[e] = std::max(n[e], 0.0);
    lo = std::min(lo, n[e]);
  }
  if (lo <= 1e-3 * (s / 12.0)) return false;  // keep generic interior samples
  out = n;
  return true;
}

double psi_at(const CubicPsi& psi, double u) {
  return ((psi.coef[0] * u + psi.coef[1]) * u + psi.coef[2]) * u + psi.coef[3];
}

double psi_scale_at(const CubicPsi& psi, double u) {
  return std::abs(psi.coef[0] * u * u * u) + std::abs(psi.coef[1] * u * u) +
         std::abs(psi.coef[2] * u) + std::abs(psi.coef[3]);
}

}  // namespace

TEST_CASE("parameter quadruple magnitudes and fixtures") {
  SUBCASE("one-triple family") {
    NaturalParams n;
    n.n = {1.0, 1.0, 1.0, 0.0, 0.0, 0.0};  // s = 6, only uvw survives
    const ABGDParams p = abgd_from_natural(n);
    CHECK(p.varsigma == 6.0);
    CHECK(p.value[0] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(p.value[1] == 0.0);
    CHECK(p.value[2] == 0.0);
    CHECK(p.value[3] == 0.0);
    CHECK(p.sign_pattern == std::array<int, 4>{1, 0, 0, 0});
    CHECK(p.branch == 0);  // the all-plus quartic factor vanishes here
  }

  SUBCASE("empty family") {
    const ABGDParams p = abgd_from_natural(NaturalParams{});
    CHECK(p.varsigma == 0.0);
    CHECK(p.value == std::array<double, 4>{0.0, 0.0, 0.0, 0.0});
    CHECK(p.branch == -1);
  }

  SUBCASE("negative parameters are rejected") {
    NaturalParams n;
    n.n = {1.0, 1.0, 1.0, 1.0, 1.0, -0.5};
    CHECK_THROWS_AS(abgd_from_natural(n), NegativeParameter);
  }
}

TEST_CASE("magnitudes are the vertex-to-touch distances times the in-radius") {
  // The three touch points on the faces around a vertex are equidistant from
  // it, and that distance times r is the vertex's quadruple entry.
  auto check_tetra = [](const Tetrahedron& tet, double tol) {
    const FacialAreas f = facial_areas(tet);
    const NaturalParams n = natural_from_areas(f);
    const ABGDParams p = abgd_from_natural(n);
    CHECK(p.branch == -1);
    const InTouchData touch = in_touch(tet);
    const double r = volume_t(tet) / f.pseudo_perimeter();
    CHECK(close(touch.in_radius, r, 1e-10));
    for (int vert = 0; vert < 4; ++vert) {
      for (int face = 0; face < 4; ++face) {
        if (kFaceOppositeVertex[face] == vert) continue;  // not incident
        const double dist = norm(tet.vertex(vert) - touch.touch[face]);
        CHECK(close(r * dist, p.value[vert], tol));
      }
    }
  };

  SUBCASE("regular tetrahedron: all four entries agree") {
    const Tetrahedron tet = regular_unit();
    const ABGDParams p = abgd_from_natural(natural_from_areas(facial_areas(tet)));
    for (int i = 1; i < 4; ++i)
      CHECK(close(p.value[i], p.value[0], 1e-12));
    check_tetra(tet, 1e-10);
  }

  SUBCASE("right corner") { check_tetra(right_corner(), 1e-10); }

  SUBCASE("random tetrahedra") {
    Rng rng(801);
    for (int rep = 0; rep < 40; ++rep) check_tetra(random_tetra(rng, 1e-2), 1e-8);
  }
}

TEST_CASE("degenerate families carry collinear signs that close the system") {
  Rng rng(802);
  int done = 0;
  while (done < 50) {
    NaturalParams n;
    if (!squeezed_naturals(rng, n)) continue;
    ++done;
    const double s = n.pseudo_perimeter();
    const ABGDParams p = abgd_from_natural(n);
    const double al = p.value[0], be = p.value[1];
    const double ga = p.value[2], de = p.value[3];
    CHECK(p.branch >= 1);  // strictly positive entries exclude the rank-1 factor
    CHECK(p.branch <= 3);
    CHECK(al * be * ga * de > 0.0);
    double abs_sum = 0.0;
    for (double x : p.value) abs_sum += std::abs(x);
    CHECK(abs_sum > std::abs(al + be + ga + de) + 1e-9 * abs_sum);

    // The signed quadruple closes the linear relation among u, v, w...
    const double closing =
        ga * de * n[0] + be * de * n[1] + be * ga * n[2];
    const double closing_scale = std::abs(ga * de * n[0]) +
                                 std::abs(be * de * n[1]) +
                                 std::abs(be * ga * n[2]);
    CHECK(std::abs(closing) <= 1e-8 * closing_scale);
    // ...reproduces the family size through the ratio-completed sum...
    const double sum = 2.0 * (n[0] + n[1] + n[2] + n[2] * be * ga / (al * de) +
                              n[1] * be * de / (al * ga) +
                              n[0] * ga * de / (al * be));
    CHECK(close(sum, s, 1e-8));
    // ...and satisfies the ratio relations for the complementary entries.
    CHECK(close(n[3], n[2] * be * ga / (al * de), 1e-8, n[3]));
    CHECK(close(n[4], n[1] * be * de / (al * ga), 1e-8, n[4]));
    CHECK(close(n[5], n[0] * ga * de / (al * be), 1e-8, n[5]));
    // Magnitudes match their defining products.
    CHECK(close(al * al, 2.0 * n[0] * n[1] * n[2] / s, 1e-9, al * al));
    CHECK(close(be * be, 2.0 * n[0] * n[3] * n[4] / s, 1e-9, be * be));
    CHECK(close(ga * ga, 2.0 * n[1] * n[3] * n[5] / s, 1e-9, ga * ga));
    CHECK(close(de * de, 2.0 * n[2] * n[4] * n[5] / s, 1e-9, de * de));
  }
}

TEST_CASE("factor products tie the quadruple to the inter-vertex distances") {
  // For each edge, the products of the size factors relate the edge length,
  // the in-radius, and the two endpoint entries of the quadruple.
  Rng rng(803);
  for (int rep = 0; rep < 20; ++rep) {
    const Tetrahedron tet = random_tetra(rng, 1e-2);
    const FacialAreas f = facial_areas(tet);
    const NaturalParams n = natural_from_areas(f);
    const ABGDParams p = abgd_from_natural(n);
    const std::array<double, 4> fac = ptolemy_factors(n);
    const double s = f.pseudo_perimeter();
    const double r = volume_t(tet) / s;
    const SquaredDistances d = squared_distances(tet);
    for (int e = 0; e < 6; ++e) {
      const double len = std::sqrt(d[e]);
      const double a = p.value[kEdgeVerts[e][0]];
      const double b = p.value[kEdgeVerts[e][1]];
      const int k = kEdgeInterior[e] - 3;  // paired signed factor
      const int i = k == 1 ? 2 : 1, j = k == 3 ? 2 : 3;
      const double scale = s * (a + b + len * r) * (a + b + len * r);
      CHECK(close(2.0 * n[e] * fac[0] * fac[k],
                  s * (len * r - a + b) * (len * r + a - b), 1e-8, scale));
      CHECK(close(2.0 * n[e] * fac[i] * fac[j],
                  s * (a + b + len * r) * (a + b - len * r), 1e-8, scale));
    }
  }
}

TEST_CASE("the resolvent cubic vanishes on the family it came from") {
  Rng rng(804);
  int done = 0;
  while (done < 40) {
    NaturalParams n;
    if (!squeezed_naturals(rng, n)) continue;
    const double s = n.pseudo_perimeter();
    const ABGDParams p = abgd_from_natural(n);
    CubicPsi psi;
    try {
      psi = cubic_psi(p, s);
    } catch (const DegenerateParameters&) {
      continue;  // non-generic sample (coincident squares)
    }
    ++done;
    CHECK(psi.coef[3] > 0.0);  // the constant term is positive
    CHECK(std::abs(psi_at(psi, n[0])) <= 1e-6 * psi_scale_at(psi, n[0]));
    bool found = false;
    for (double rt : psi.roots) found = found || close(rt, n[0], 1e-6);
    CHECK(found);

    // Consistent rescaling moves the roots linearly.
    ABGDParams scaled = p;
    const double lam = 3.7;
    for (int i = 0; i < 4; ++i) scaled.value[i] *= lam;
    const CubicPsi psi2 = cubic_psi(scaled, lam * s);
    REQUIRE(psi2.roots.size() == psi.roots.size());
    for (std::size_t i = 0; i < psi.roots.size(); ++i)
      CHECK(close(psi2.roots[i], lam * psi.roots[i], 1e-9));
  }

  SUBCASE("non-generic parameters are rejected") {
    ABGDParams p;
    p.value = {1.0, 1.0, -0.5, -0.7};  // coincident squares
    CHECK_THROWS_AS(cubic_psi(p, 10.0), DegenerateParameters);
    p.value = {1.0, 0.5, 0.0, -0.7};  // vanishing entry
    CHECK_THROWS_AS(cubic_psi(p, 10.0), DegenerateParameters);
    p.value = {1.0, 0.5, -0.3, -0.7};
    CHECK_THROWS_AS(cubic_psi(p, 0.0), DegenerateParameters);
  }
}

TEST_CASE("the discriminant bound separates one real root from three") {
  Rng rng(805);
  const std::array<std::array<int, 4>, 3> patterns{
      std::array<int, 4>{+1, +1, -1, -1}, std::array<int, 4>{+1, -1, +1, -1},
      std::array<int, 4>{+1, -1, -1, +1}};
  for (int rep = 0; rep < 30; ++rep) {
    ABGDParams p;
    // Distinct magnitudes with a mixed-sign pattern of positive product.
    for (;;) {
      for (int i = 0; i < 4; ++i) p.value[i] = rng.uniform(0.5, 2.0);
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i)
        for (int j = i + 1; j < 4 && ok; ++j)
          ok = std::abs(p.value[i] - p.value[j]) > 5e-2;
      if (ok) break;
    }
    const auto& pat = patterns[static_cast<std::size_t>(rep % 3)];
    for (int i = 0; i < 4; ++i) p.value[i] *= pat[i];

    const double rho = sigma_bound(p);
    CHECK(rho > 0.0);
    // Flipping every sign leaves the bound untouched.
    ABGDParams flipped = p;
    for (int i = 0; i < 4; ++i) flipped.value[i] = -flipped.value[i];
    CHECK(sigma_bound(flipped) == rho);

    const CubicPsi above = cubic_psi(p, std::sqrt(1.01 * rho));
    CHECK(above.discriminant > 0.0);
    CHECK(above.roots.size() == 3);
    const CubicPsi below = cubic_psi(p, std::sqrt(0.99 * rho));
    CHECK(below.discriminant < 0.0);
    CHECK(below.roots.size() == 1);

    // The bound satisfies the factored form of the discriminant quadratic.
    const double al = p.value[0], be = p.value[1];
    const double ga = p.value[2], de = p.value[3];
    const double A = 4.0 * std::pow(al, 6) * std::pow(be, 6) * std::pow(ga, 4) *
                     std::pow(de, 4) * std::pow(al - be, 2) * std::pow(ga - de, 2);
    const double B = 32.0 * std::pow(al, 5) * std::pow(be, 5) * std::pow(ga, 3) *
                     std::pow(de, 3) *
                     ((al - ga) * (be - de) + (al - de) * (be - ga)) *
                     ((al - be) * (ga - de) + (al - ga) * (be - de)) *
                     ((al - be) * (ga - de) - (al - de) * (be - ga)) *
                     std::pow(al - be, 2) * std::pow(ga - de, 2);
    const double C = -1728.0 * std::pow(al, 4) * std::pow(be, 4) * ga * ga *
                     de * de * std::pow(al - be, 4) * std::pow(al - ga, 2) *
                     std::pow(al - de, 2) * std::pow(be - ga, 2) *
                     std::pow(be - de, 2) * std::pow(ga - de, 4);
    const double residual = (A * rho + B) * rho + C;
    CHECK(std::abs(residual) <=
          1e-8 * (std::abs(A) * rho * rho + std::abs(B) * rho + std::abs(C)));
  }

  SUBCASE("symmetric collapse to a quadratic has a closed-form bound") {
    ABGDParams p;
    p.value = {1.3, -0.6, 1.3, -0.6};  // leading cubic coefficient vanishes
    const double diff = 1.3 - (-0.6);
    const double expect = 16.0 * std::pow(diff, 6) / (1.3 * 1.3 * 0.6 * 0.6);
    CHECK(close(sigma_bound(p), expect, 1e-12));
    CHECK_THROWS_AS(sigma_bound(ABGDParams{}), DegenerateParameters);
  }
}

TEST_CASE("two-branch recovery round-trips the degenerate families") {
  Rng rng(806);
  int done = 0, recovered = 0, paired = 0, pair_checked = 0;
  while (done < 120) {
    NaturalParams n;
    if (!squeezed_naturals(rng, n)) continue;
    const double s = n.pseudo_perimeter();
    const ABGDParams p = abgd_from_natural(n);
    Solve2to2Result res;
    try {
      res = solve_2to2(p, s);
    } catch (const DegenerateParameters&) {
      continue;  // non-generic sample
    }
    ++done;
    CHECK(res.solutions.size() >= 1);
    CHECK(res.solutions.size() <= 2);

    bool has_input = false;
    for (const NaturalParams& sol : res.solutions) {
      bool all = true;
      for (int e = 0; e < 6; ++e) all = all && close(sol[e], n[e], 1e-6);
      has_input = has_input || all;
      // Every solution is degenerate with the requested size.
      CHECK(close(sol.pseudo_perimeter(), s, 1e-6));
      CHECK(std::abs(omega(sol)) <= 1e-6 * std::pow(s / 2.0, 4));
    }
    if (has_input) ++recovered;

    if (res.solutions.size() == 2) {
      ++pair_checked;
      const NaturalParams& a = res.solutions[0];
      const NaturalParams& b = res.solutions[1];
      const bool ratios = close(a[0] / b[0], a[5] / b[5], 1e-6) &&
                          close(a[1] / b[1], a[4] / b[4], 1e-6) &&
                          close(a[2] / b[2], a[3] / b[3], 1e-6);
      const bool products =
          close(a[0] * a[1] * a[2], b[0] * b[1] * b[2], 1e-6,
                a[0] * a[1] * a[2]);
      if (ratios && products) ++paired;
    }
  }
  // The recovery and the pairing relation hold in at least 95% of trials.
  CHECK(recovered * 100 >= done * 95);
  CHECK(pair_checked > 0);
  CHECK(paired * 100 >= pair_checked * 95);
}

TEST_CASE("solutions respect the bound, the sign flip, and conditioning") {
  Rng rng(807);
  NaturalParams n;
  ABGDParams p;
  double rho = 0.0;
  for (;;) {  // land on a generic degenerate family
    if (!squeezed_naturals(rng, n)) continue;
    p = abgd_from_natural(n);
    try {
      rho = sigma_bound(p);
    } catch (const DegenerateParameters&) {
      continue;
    }
    break;
  }
  const double s = n.pseudo_perimeter();
  REQUIRE(s * s > rho);

  SUBCASE("below the bound there is no solution") {
    CHECK_THROWS_AS(solve_2to2(p, std::sqrt(0.99 * rho)), NoSolution);
    CHECK_THROWS_AS(solve_2to2(p, 0.0), InvalidParameters);
  }

  SUBCASE("negating the whole quadruple changes nothing") {
    ABGDParams flipped = p;
    for (int i = 0; i < 4; ++i) flipped.value[i] = -flipped.value[i];
    const Solve2to2Result a = solve_2to2(p, s);
    const Solve2to2Result b = solve_2to2(flipped, s);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i)
      for (int e = 0; e < 6; ++e)
        CHECK(a.solutions[i][e] == b.solutions[i][e]);
  }

  SUBCASE("sign-invalid quadruples are rejected") {
    ABGDParams bad = p;
    bad.value[0] = -bad.value[0];  // product now negative
    CHECK_THROWS_AS(solve_2to2(bad, s), DegenerateParameters);
    ABGDParams same;
    same.value = {1.0, 0.7, 0.5, 0.3};  // all one sign
    CHECK_THROWS_AS(solve_2to2(same, 100.0), DegenerateParameters);
  }

  SUBCASE("near the bound the roots cluster and the flag raises") {
    const Solve2to2Result tight = solve_2to2(p, std::sqrt(rho * (1.0 + 1e-13)));
    CHECK(tight.conditioning_warning);
    const Solve2to2Result loose = solve_2to2(p, s);
    CHECK_FALSE(loose.conditioning_warning);
  }
}
