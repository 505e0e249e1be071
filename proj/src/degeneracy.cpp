#include "hedron/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "hedron/areal.hpp"
#include "hedron/identities.hpp"
#include "hedron/natural.hpp"
#include "hedron/tetra.hpp"

namespace hedron {

namespace {

std::array<double, 7> squares_of(const FacialAreas& f) {
  std::array<double, 7> F{};
  for (int k = 0; k < 7; ++k) F[k] = f[k] * f[k];
  return F;
}

// Quartic-scaled degeneracy test: the volume quartic is homogeneous of
// degree 4 in the (area-valued) parameters, so its natural scale is (s/2)^4.
bool is_on_zero_set(const NaturalParams& n) {
  const double half_s = n.pseudo_perimeter() / 2.0;
  return std::abs(omega(n)) <= 1e-8 * half_s * half_s * half_s * half_s;
}

LatticeNode lattice_node(const FacialAreas& f, const NaturalParams& n,
                         const InverseParams& inv) {
  LatticeNode node;
  node.rank = sym_rank(areal_gram(f).g_vertex[0]);
  node.degenerate = is_on_zero_set(n);
  if (!node.degenerate) {
    node.generic_dimension = 6;
    return node;
  }

  const double s = f.pseudo_perimeter();
  for (int e = 0; e < 6; ++e) {
    node.vanishing[e] = std::abs(n[e] * inv[e]) <= 1e-8 * s * s;
    if (node.vanishing[e]) ++node.vanishing_count;
  }
  // Vanishing products are coincidences among four points on a line, so the
  // pattern must be closed under transitivity.
  for (int i = 0; i < 4 && node.consistent_pattern; ++i)
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < 4; ++k) {
        if (k == i) continue;
        if (node.vanishing[edge_index(i, j)] &&
            node.vanishing[edge_index(i, k)] &&
            !node.vanishing[edge_index(j, k)])
          node.consistent_pattern = false;
      }
    }
  node.generic_dimension =
      node.vanishing_count == 0 ? 5 : (node.vanishing_count == 1 ? 4 : 3);
  return node;
}

}  // namespace

FacialAreas squeeze_limit(const Tetrahedron& t, const Vec3& axis) {
  const double axis_norm = norm(axis);
  if (axis_norm == 0.0) throw InvalidParameters("squeeze axis must be nonzero");
  const Vec3 a = axis / axis_norm;

  const ArealVectors av = areal_vectors(t);
  const std::array<Vec3, 7> vecs = {av.exterior[0], av.exterior[1],
                                    av.exterior[2], av.exterior[3],
                                    av.interior[0], av.interior[1],
                                    av.interior[2]};
  double scale = 0.0;
  for (const Vec3& v : vecs) scale = std::max(scale, norm2(v));

  FacialAreas out{};
  double largest = 0.0;
  for (int k = 0; k < 7; ++k) {
    const double along = dot(vecs[k], a);
    const double proj2 = norm2(vecs[k]) - along * along;
    out[k] = guarded_sqrt(proj2, scale, "projected squared area");
    largest = std::max(largest, out[k]);
  }
  if (largest * largest <= 1e-24 * scale)
    throw DegenerateInput(
        "no area survives the squeeze: the configuration lies in a plane "
        "perpendicular to the axis");
  return out;
}

LatticeNode rank_and_lattice(const FacialAreas& f) {
  return lattice_node(f, natural_from_areas(f), inverse_from_areas(f));
}

LatticeNode rank_and_lattice(const NaturalParams& n) {
  return lattice_node(areas_from_natural(n), n, inverse_from_natural(n));
}

MNPair mn_from_degenerate(const FacialAreas& f) {
  const EigenResult<4> eig = sym_eigen(gram_ext_from_F(squares_of(f)));
  double lmax = 0.0;
  for (double l : eig.values) lmax = std::max(lmax, std::abs(l));
  const double tol = 1e-10 * lmax;

  if (std::abs(eig.values[2]) > tol || std::abs(eig.values[3]) > tol)
    throw WrongRank("signed exterior areal Gram of a flat family must have "
                    "rank at most 2");
  if (eig.values[0] < 0.0)
    throw WrongRank("signed exterior areal Gram is negative");
  // Eigenvalues at or below the rank tolerance are roundoff noise with
  // arbitrary eigenvectors: zero them outright so their columns drop out.
  const double l0 = eig.values[0] > tol ? eig.values[0] : 0.0;
  const double l1 = eig.values[1] > tol ? eig.values[1] : 0.0;

  MNPair mn;
  mn.rank = (l0 > 0.0 ? 1 : 0) + (l1 > 0.0 ? 1 : 0);
  const double sq0 = std::sqrt(l0), sq1 = std::sqrt(l1);
  for (int row = 0; row < 4; ++row) {
    const double wr = sq0 * eig.vectors[row][0];
    double wi = sq1 * eig.vectors[row][1];
    if (wi == 0.0) wi = 0.0;  // map -0 to +0 so the principal root is stable
    const std::complex<double> root = std::sqrt(std::complex<double>(wr, wi));
    const int v = kFaceOppositeVertex[row];
    mn.m[v] = root.real();
    mn.n[v] = root.imag();
  }

  // The rows of the embedding close up (Minkowski), which forces the factor
  // invariants; verify them against eigensolver roundoff.
  const double s = mn.pseudo_perimeter();
  double mm = 0.0, nn = 0.0, mdotn = 0.0;
  for (int v = 0; v < 4; ++v) {
    mm += mn.m[v] * mn.m[v];
    nn += mn.n[v] * mn.n[v];
    mdotn += mn.m[v] * mn.n[v];
  }
  const double inv_tol = 1e-9 * s;
  if (std::abs(mm - s / 2.0) > inv_tol || std::abs(nn - s / 2.0) > inv_tol ||
      std::abs(mdotn) > inv_tol)
    throw ToleranceFailure("flat-family factor violates its invariants: "
                           "|m|^2 = " + std::to_string(mm) +
                           ", |n|^2 = " + std::to_string(nn) +
                           ", m.n = " + std::to_string(mdotn));
  return mn;
}

std::array<Vec2, 4> planar_areal_rows(const MNPair& mn) {
  std::array<Vec2, 4> rows{};
  for (int k = 0; k < 4; ++k) {
    const int v = kFaceOppositeVertex[k];
    rows[k] = {mn.m[v] * mn.m[v] - mn.n[v] * mn.n[v], 2.0 * mn.m[v] * mn.n[v]};
  }
  return rows;
}

FacialAreas areas_from_mn(const MNPair& mn) {
  std::array<double, 4> opp{};  // opp[v] = doubled area of the face opposite v
  for (int v = 0; v < 4; ++v) opp[v] = mn.m[v] * mn.m[v] + mn.n[v] * mn.n[v];

  FacialAreas f{};
  for (int k = 0; k < 4; ++k) f[k] = opp[kFaceOppositeVertex[k]];

  const PluckerVector p = plucker_from_mn(mn);
  const double s = f.pseudo_perimeter();
  for (int slot = 0; slot < 3; ++slot) {
    const int a = kEdgeVerts[slot][0], b = kEdgeVerts[slot][1];
    const double sum = opp[a] + opp[b];
    const double fi2 = sum * sum - 4.0 * p.p[slot] * p.p[slot];
    f[4 + slot] = guarded_sqrt(fi2, s * s, "squared interior area");
  }
  return f;
}

PluckerVector plucker_from_mn(const MNPair& mn) {
  PluckerVector p;
  for (int e = 0; e < 6; ++e) {
    const int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
    p.p[e] = mn.m[a] * mn.n[b] - mn.m[b] * mn.n[a];
  }
  return p;
}

NaturalParams natural_from_plucker(const PluckerVector& p, double s) {
  if (s < 0.0) throw InvalidParameters("pseudo-perimeter must be nonnegative");
  NaturalParams n{};
  if (s == 0.0) return n;
  for (int e = 0; e < 6; ++e) {
    const double q = p.p[kOppositeEdge[e]];
    n[e] = 2.0 * q * q / s;
  }
  return n;
}

InverseParams inverse_from_mn(const MNPair& mn) {
  const double s = mn.pseudo_perimeter();
  InverseParams r{};
  if (s == 0.0) return r;
  for (int e = 0; e < 6; ++e) {
    const int opp = kOppositeEdge[e];
    const int a = kEdgeVerts[opp][0], b = kEdgeVerts[opp][1];
    const double q = mn.m[a] * mn.m[b] + mn.n[a] * mn.n[b];
    r[e] = 2.0 * q * q / s;
  }
  return r;
}

namespace {

// Square roots of the parameters plus the three signed factor values
// O1 = v^y^ + w^x^ - u^z^, O2 = w^x^ + u^z^ - v^y^, O3 = u^z^ + v^y^ - w^x^.
struct HatFactors {
  std::array<double, 6> hat{};
  std::array<double, 3> factor{};
  int nearest = 1;  // 1-based factor index with the smallest |O_k|
};

HatFactors hat_factors(const NaturalParams& n) {
  if (!is_on_zero_set(n))
    throw NotDegenerate("volume quartic is not zero at tolerance");
  const double s = n.pseudo_perimeter();
  HatFactors h;
  for (int e = 0; e < 6; ++e)
    h.hat[e] = guarded_sqrt(n[e], std::max(s, 0.0), "natural parameter");
  const double a = h.hat[0] * h.hat[5];  // u^ z^
  const double b = h.hat[1] * h.hat[4];  // v^ y^
  const double c = h.hat[2] * h.hat[3];  // w^ x^
  h.factor = {b + c - a, c + a - b, a + b - c};
  for (int k = 1; k < 3; ++k)
    if (std::abs(h.factor[k]) < std::abs(h.factor[h.nearest - 1]))
      h.nearest = k + 1;
  return h;
}

}  // namespace

PluckerVector plucker_from_natural(const NaturalParams& n) {
  const HatFactors h = hat_factors(n);
  const double root_half_s = std::sqrt(n.pseudo_perimeter() / 2.0);

  // Entries in edge order are the reversed square roots; the sign pattern of
  // the last three is fixed by the vanishing factor so that the quadric form
  // evaluates to (s/2) O_nearest.
  PluckerVector p;
  for (int e = 0; e < 3; ++e) p.p[e] = root_half_s * h.hat[5 - e];
  switch (h.nearest) {
    case 1:
      p.p[3] = root_half_s * h.hat[2];
      p.p[4] = -root_half_s * h.hat[1];
      p.p[5] = -root_half_s * h.hat[0];
      break;
    case 2:
      p.p[3] = root_half_s * h.hat[2];
      p.p[4] = root_half_s * h.hat[1];
      p.p[5] = root_half_s * h.hat[0];
      break;
    default:
      p.p[3] = -root_half_s * h.hat[2];
      p.p[4] = -root_half_s * h.hat[1];
      p.p[5] = root_half_s * h.hat[0];
      break;
  }
  return p;
}

std::vector<PluckerVector> z24_orbit(const PluckerVector& p) {
  std::vector<std::array<double, 6>> members;
  members.reserve(16);
  for (int mask = 0; mask < 16; ++mask) {
    const double e0 = (mask & 1) ? -1.0 : 1.0;
    const double e1 = (mask & 2) ? -1.0 : 1.0;
    const double e2 = (mask & 4) ? -1.0 : 1.0;
    const double e3 = (mask & 8) ? -1.0 : 1.0;
    std::array<double, 6> q = {e0 * e1 * p.p[0], e0 * e2 * p.p[1],
                               e0 * e3 * p.p[2], e3 * p.p[3],
                               e2 * p.p[4],      e1 * p.p[5]};
    for (double& v : q)
      if (v == 0.0) v = 0.0;  // collapse -0 for exact de-duplication
    members.push_back(q);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<PluckerVector> orbit;
  orbit.reserve(members.size());
  for (const auto& q : members) orbit.push_back(PluckerVector{q});
  return orbit;
}

CollinearQuadruple collinear_quadruple(const NaturalParams& n) {
  CollinearQuadruple r{};
  const InverseParams inv = inverse_from_natural(n);
  for (int e = 0; e < 6; ++e) r.complementary[e] = n[e] * inv[e];

  const double s = n.pseudo_perimeter();
  if (s == 0.0) {
    if (!is_on_zero_set(n))
      throw NotDegenerate("volume quartic is not zero at tolerance");
    return r;  // no area: all four points sit at the origin
  }

  const HatFactors h = hat_factors(n);
  // The total factor O0 = u^z^ + v^y^ + w^x^ dominates the other three in
  // magnitude, so it is nearest only when all four vanish together; ties
  // resolve to the all-plus row.
  const double o0 =
      (h.factor[0] + h.factor[1] + h.factor[2]);  // = u^z^ + v^y^ + w^x^
  r.branch = h.nearest;
  if (o0 <= std::abs(h.factor[h.nearest - 1])) r.branch = 0;

  static constexpr double kSigns[4][4] = {{+1, +1, +1, +1},
                                          {+1, +1, -1, -1},
                                          {+1, -1, +1, -1},
                                          {+1, -1, -1, +1}};
  const double root_half_s = std::sqrt(s / 2.0);
  const std::array<double, 4> magnitude = {
      h.hat[0] * h.hat[1] * h.hat[2],   // u^ v^ w^  (edges at A)
      h.hat[0] * h.hat[3] * h.hat[4],   // u^ x^ y^  (edges at B)
      h.hat[1] * h.hat[3] * h.hat[5],   // v^ x^ z^  (edges at C)
      h.hat[2] * h.hat[4] * h.hat[5]};  // w^ y^ z^  (edges at D)
  for (int v = 0; v < 4; ++v)
    r.x[v] = kSigns[r.branch][v] * magnitude[v] / root_half_s;

  for (int e = 0; e < 6; ++e) {
    const double gap = r.x[kEdgeVerts[e][0]] - r.x[kEdgeVerts[e][1]];
    r.gap_sq[e] = gap * gap;
    r.max_residual =
        std::max(r.max_residual, std::abs(r.gap_sq[e] - r.complementary[e]));
  }
  return r;
}

}  // namespace hedron
