#include "hedron/planar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hedron/areal.hpp"
#include "hedron/identities.hpp"
#include "hedron/natural.hpp"

namespace hedron {

namespace {

// Frozen classification tables, derived by sweeping vertex A over the
// sixteen regions cut out of the plane of a fixed triangle BCD by the three
// edge lines and the three vertex-parallels, and recording the invariant
// saturation / signed-sum / barycentric-sign data of each region.  Within
// each convex group the four classes are ordered by the lexicographic rank
// of their T2/T3 code over the coded edges in edge order.
constexpr std::array<PlanarClassSpec, 16> kClassTable{{
    // 0: A inside BCD
    {{1, 1, 1, 3, 3, 3}, {3, 2, 1, 0}, -1, {+1, +1, +1}, 0},
    // 1: B inside ACD
    {{1, 3, 3, 1, 1, 2}, {2, 3, 0, 1}, -1, {+1, -1, -1}, 1},
    // 2: C inside ABD
    {{3, 1, 2, 1, 2, 1}, {1, 0, 3, 2}, -1, {-1, +1, -1}, 2},
    // 3: D inside ABC
    {{2, 2, 1, 2, 1, 1}, {0, 1, 2, 3}, -1, {-1, -1, +1}, 3},
    // 4..7: convex, edges AB and CD cross
    {{1, 2, 2, 3, 3, 1}, {3, 2, 1, 0}, 1, {-1, +1, +1}, 4},
    {{1, 2, 3, 2, 3, 1}, {0, 1, 2, 3}, 1, {-1, +1, +1}, 4},
    {{1, 3, 2, 3, 2, 1}, {1, 0, 3, 2}, 1, {-1, +1, +1}, 4},
    {{1, 3, 3, 2, 2, 1}, {2, 3, 0, 1}, 1, {-1, +1, +1}, 4},
    // 8..11: convex, edges AC and BD cross
    {{2, 1, 2, 2, 1, 3}, {0, 1, 2, 3}, 2, {+1, -1, +1}, 5},
    {{2, 1, 3, 3, 1, 3}, {3, 2, 1, 0}, 2, {+1, -1, +1}, 5},
    {{3, 1, 2, 2, 1, 2}, {1, 0, 3, 2}, 2, {+1, -1, +1}, 5},
    {{3, 1, 3, 3, 1, 2}, {2, 3, 0, 1}, 2, {+1, -1, +1}, 5},
    // 12..15: convex, edges AD and BC cross
    {{2, 2, 1, 1, 2, 2}, {0, 1, 2, 3}, 3, {+1, +1, -1}, 6},
    {{2, 3, 1, 1, 3, 2}, {2, 3, 0, 1}, 3, {+1, +1, -1}, 6},
    {{3, 2, 1, 1, 2, 3}, {1, 0, 3, 2}, 3, {+1, +1, -1}, 6},
    {{3, 3, 1, 1, 3, 3}, {3, 2, 1, 0}, 3, {+1, +1, -1}, 6},
}};

std::array<double, 4> upsilons(const std::array<double, 3>& interior) {
  const double i0 = interior[0], i1 = interior[1], i2 = interior[2];
  return {i0 + i1 + i2, -i0 + i1 + i2, i0 - i1 + i2, i0 + i1 - i2};
}

void check_class_id(int class_id) {
  if (class_id < 0 || class_id >= 16)
    throw InvalidParameters("planar class id must be in 0..15, got " +
                            std::to_string(class_id));
}

double two_pi() { return 8.0 * std::atan(1.0); }

}  // namespace

const PlanarClassSpec& planar_class_spec(int class_id) {
  check_class_id(class_id);
  return kClassTable[static_cast<std::size_t>(class_id)];
}

PlanarClass classify_planar(const NaturalParams& n, const InverseParams& inv) {
  const double s = n.pseudo_perimeter();
  if (!(s > 0.0))
    throw NotRank1("classification needs a family with positive size");
  const double tol = 1e-7 * s;
  for (int e = 0; e < 6; ++e) {
    if (n[e] < -tol || inv[e] < -tol)
      throw NotRank1("parameters of a planar family cannot be negative");
    if (n[e] > tol && inv[e] > tol)
      throw NotRank1("an edge with neither parameter vanishing is not planar");
  }

  // Saturations are read off the deviations of the reconstructed areas.
  const FacialAreas f = areas_from_natural(n);
  const TauTable tt = tau_table(f);

  PlanarClass out;
  for (int c = 0; c < 16; ++c) {
    const PlanarClassSpec& spec = kClassTable[static_cast<std::size_t>(c)];
    bool ok = true;
    for (int e = 0; e < 6 && ok; ++e)
      ok = std::abs(tt.tau[e][spec.saturated[e]]) <= tol;
    if (ok) out.candidates.push_back(c);
  }
  if (out.candidates.empty())
    throw NotRank1("no consistent combination of saturated deviations");

  if (out.candidates.size() == 1) {
    const PlanarClassSpec& spec =
        kClassTable[static_cast<std::size_t>(out.candidates.front())];
    out.class_id = out.candidates.front();
    out.chirotope_case = spec.chirotope_case;
    out.alpha_signs = spec.alpha_signs;
    out.upsilon_index = spec.upsilon_index;
    out.negated_upsilon = spec.negated_upsilon;
  } else {
    // Boundary input: report whatever the adjacent classes agree on.
    out.chirotope_case =
        kClassTable[static_cast<std::size_t>(out.candidates.front())].chirotope_case;
    out.alpha_signs =
        kClassTable[static_cast<std::size_t>(out.candidates.front())].alpha_signs;
    for (int c : out.candidates) {
      const PlanarClassSpec& spec = kClassTable[static_cast<std::size_t>(c)];
      if (spec.chirotope_case != out.chirotope_case) out.chirotope_case = -1;
      if (spec.alpha_signs != out.alpha_signs) out.alpha_signs = {0, 0, 0};
    }
  }
  return out;
}

std::array<double, 4> exterior_from_interior(int class_id,
                                             const std::array<double, 3>& interior) {
  check_class_id(class_id);
  double scale = 0.0;
  for (double v : interior) {
    if (v < 0.0)
      throw InconsistentAreas("interior areas must be non-negative");
    scale += v;
  }
  const PlanarClassSpec& spec = kClassTable[static_cast<std::size_t>(class_id)];
  const std::array<double, 4> U = upsilons(interior);
  std::array<double, 4> ext{};
  for (int i = 0; i < 4; ++i) {
    const int k = spec.upsilon_index[i];
    double v = U[static_cast<std::size_t>(k)] / 2.0;
    if (k == spec.negated_upsilon) v = -v;
    if (v < -1e-12 * scale)
      throw InconsistentAreas(
          "a signed interior sum is negative: the interior areas are not "
          "realizable in class " + std::to_string(class_id));
    ext[static_cast<std::size_t>(i)] = std::max(v, 0.0);
  }
  return ext;
}

std::array<double, 3> barycentric_from_areas(const FacialAreas& f, int class_id) {
  check_class_id(class_id);
  const double s = f.pseudo_perimeter();
  if (!(f[3] > 1e-12 * s))
    throw DegenerateBase("barycentric coordinates need a nonvanishing BCD");
  const PlanarClassSpec& spec = kClassTable[static_cast<std::size_t>(class_id)];
  const std::array<double, 3> alpha{spec.alpha_signs[0] * f[2] / f[3],
                                    spec.alpha_signs[1] * f[1] / f[3],
                                    spec.alpha_signs[2] * f[0] / f[3]};
  const double sum = alpha[0] + alpha[1] + alpha[2];
  const double scale =
      1.0 + std::abs(alpha[0]) + std::abs(alpha[1]) + std::abs(alpha[2]);
  if (std::abs(sum - 1.0) > 1e-6 * scale)
    throw InconsistentAreas(
        "signed barycentric coordinates fail to sum to 1; the areas are not "
        "consistent with class " + std::to_string(class_id));
  return alpha;
}

AllowableSequence allowable_sequence(const std::array<Vec2, 4>& pts) {
  double diam2 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      diam2 = std::max(diam2, norm2(pts[i] - pts[j]));
  if (!(diam2 > 0.0)) throw CoincidentPoints("all four points coincide");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (norm2(pts[i] - pts[j]) <= 1e-20 * diam2)
        throw CoincidentPoints("two points coincide");

  // Critical sweep directions: orthogonals of the six connecting segments.
  const double tau = two_pi();
  std::vector<double> angles;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Vec2 d = pts[j] - pts[i];
      const double base = std::atan2(d.y, d.x);
      for (const double off : {tau / 4.0, -tau / 4.0}) {
        double a = std::fmod(base + off, tau);
        if (a < 0.0) a += tau;
        angles.push_back(a);
      }
    }
  std::sort(angles.begin(), angles.end());
  const double ang_tol = 1e-9;
  std::vector<double> uniq;
  for (double a : angles)
    if (uniq.empty() || a - uniq.back() > ang_tol) uniq.push_back(a);
  while (uniq.size() > 1 && uniq.back() > uniq.front() + tau - ang_tol)
    uniq.pop_back();

  // One permutation per arc between consecutive critical directions.
  std::vector<std::array<int, 4>> seq;
  const std::size_t L = uniq.size();
  for (std::size_t k = 0; k < L; ++k) {
    const double next = (k + 1 < L) ? uniq[k + 1] : uniq.front() + tau;
    const double mid = (uniq[k] + next) / 2.0;
    const Vec2 dir{std::cos(mid), std::sin(mid)};
    std::array<int, 4> perm{0, 1, 2, 3};
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      return dot(pts[static_cast<std::size_t>(a)], dir) <
             dot(pts[static_cast<std::size_t>(b)], dir);
    });
    seq.push_back(perm);
  }

  // Canonical form: lex-min over cyclic rotation, inversion of every
  // permutation, and reversal of the cycle.
  AllowableSequence best;
  bool first = true;
  for (int invert = 0; invert < 2; ++invert) {
    for (int reverse = 0; reverse < 2; ++reverse) {
      std::vector<std::array<int, 4>> var = seq;
      if (invert)
        for (auto& p : var) std::reverse(p.begin(), p.end());
      if (reverse) std::reverse(var.begin(), var.end());
      for (std::size_t r = 0; r < var.size(); ++r) {
        std::vector<std::array<int, 4>> rot(var.begin() + static_cast<long>(r),
                                            var.end());
        rot.insert(rot.end(), var.begin(), var.begin() + static_cast<long>(r));
        if (first || rot < best.perms) {
          best.perms = std::move(rot);
          first = false;
        }
      }
    }
  }
  return best;
}

CanonicalPlanarConfig canonical_planar(const std::array<double, 7>& F,
                                       int class_id) {
  check_class_id(class_id);
  double Fscale = 0.0;
  for (double v : F) Fscale = std::max(Fscale, std::abs(v));
  FacialAreas f;
  for (int k = 0; k < 7; ++k) {
    if (F[static_cast<std::size_t>(k)] < -1e-9 * Fscale)
      throw InconsistentAreas("squared areas must be non-negative");
    f[k] = std::sqrt(std::max(F[static_cast<std::size_t>(k)], 0.0));
  }

  const std::array<double, 3> alpha = barycentric_from_areas(f, class_id);
  const double aB = alpha[0], aC = alpha[1], aD = alpha[2];
  const double rho_bc = (2 * aB * aB + 2 * aC * aC + aD * aD + aB * aC +
                         3 * aB * aD + 3 * aC * aD) /
                        16.0;
  const double rho_bd = (2 * aB * aB + aC * aC + 2 * aD * aD + 3 * aB * aC +
                         aB * aD + 3 * aC * aD) /
                        16.0;
  const double rho_cd = (aB * aB + 2 * aC * aC + 2 * aD * aD + 3 * aB * aC +
                         3 * aB * aD + aC * aD) /
                        16.0;
  const double q = rho_bc * rho_bd + rho_bc * rho_cd + rho_bd * rho_cd;
  if (!(q > 0.0))
    throw InconsistentAreas("gyration weights admit no positive optimum");
  const double zeta = f[3] / std::sqrt(q);
  const double D_bc = zeta * (rho_bd + rho_cd);
  const double D_bd = zeta * (rho_bc + rho_cd);
  const double D_cd = zeta * (rho_bc + rho_bd);

  // Distances from A to the base vertices via the three-point quadratic form
  // evaluated on barycentric differences.
  const auto spread = [&](double dB, double dC, double dD) {
    return -(D_bc * dB * dC + D_bd * dB * dD + D_cd * dC * dD);
  };
  CanonicalPlanarConfig out;
  out.d_star[0] = spread(aB - 1.0, aC, aD);
  out.d_star[1] = spread(aB, aC - 1.0, aD);
  out.d_star[2] = spread(aB, aC, aD - 1.0);
  out.d_star[3] = D_bc;
  out.d_star[4] = D_bd;
  out.d_star[5] = D_cd;

  double dscale = 0.0, dsum = 0.0;
  for (int e = 0; e < 6; ++e) {
    if (out.d_star[e] < -1e-9 * zeta)
      throw InconsistentAreas("a squared distance came out negative");
    out.d_star[e] = std::max(out.d_star[e], 0.0);
    dscale = std::max(dscale, out.d_star[e]);
    dsum += out.d_star[e];
  }
  out.gyration = dsum / 16.0;

  // The optimum must reproduce every requested squared area and be planar.
  const std::array<double, 7> got = squared_areas_from_distances(out.d_star.d);
  for (int k = 0; k < 7; ++k)
    if (std::abs(got[static_cast<std::size_t>(k)] -
                 F[static_cast<std::size_t>(k)]) > 1e-7 * Fscale)
      throw InconsistentAreas(
          "optimum distances fail to reproduce the requested areas (entry " +
          std::to_string(k) + ")");
  if (std::abs(volume_det(out.d_star.d)) > 1e-7 * dscale * dscale * dscale)
    throw InconsistentAreas("optimum distances are not planar");

  // Cartesian realization: base triangle on the x-axis, A barycentrically.
  const double bc = std::sqrt(D_bc);
  const Vec2 B{0.0, 0.0};
  const Vec2 C{bc, 0.0};
  double dx = 0.0, dy = 0.0;
  if (bc > 0.0) {
    dx = (D_bc + D_bd - D_cd) / (2.0 * bc);
    dy = std::sqrt(std::max(D_bd - dx * dx, 0.0));
  } else {
    dy = std::sqrt(std::max(D_bd, 0.0));
  }
  const Vec2 D{dx, dy};
  const Vec2 A = aB * B + aC * C + aD * D;
  out.coordinates = {A, B, C, D};
  return out;
}

}  // namespace hedron
