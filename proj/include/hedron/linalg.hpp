#pragma once

// Small dense linear algebra for symmetric problems of order <= 7.
//
// Everything here is deliberately dependency-free and deterministic:
//  * determinants/adjugates use explicit cofactor expansion and are
//    templated over the scalar type, so they stay exact when instantiated
//    with a rational type;
//  * the symmetric eigensolver is a fixed-order cyclic Jacobi iteration,
//    which is bit-reproducible across runs for a given input.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hedron {

// ---------------------------------------------------------------------------
// 3-vectors (double precision)
// ---------------------------------------------------------------------------

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

// ---------------------------------------------------------------------------
// 2-vectors (planar configurations)
// ---------------------------------------------------------------------------

struct Vec2 {
  double x = 0.0, y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }
constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
// z-component of the 3-D cross product of two in-plane vectors
constexpr double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(const Vec2& v) { return dot(v, v); }
inline double norm(const Vec2& v) { return std::sqrt(norm2(v)); }

// ---------------------------------------------------------------------------
// Square matrices
// ---------------------------------------------------------------------------

// Generic square matrix over an arbitrary scalar (row-major).
template <class T, std::size_t N>
using SqMat = std::array<std::array<T, N>, N>;

template <std::size_t N>
using Mat = SqMat<double, N>;
using Mat3 = Mat<3>;
using Mat4 = Mat<4>;

template <class T, std::size_t N>
SqMat<T, N> zero_mat() {
  SqMat<T, N> m{};
  for (auto& row : m)
    for (auto& v : row) v = T(0);
  return m;
}

template <class T, std::size_t N>
SqMat<T, N> identity_mat() {
  SqMat<T, N> m = zero_mat<T, N>();
  for (std::size_t i = 0; i < N; ++i) m[i][i] = T(1);
  return m;
}

template <class T, std::size_t N>
SqMat<T, N> mat_mul(const SqMat<T, N>& a, const SqMat<T, N>& b) {
  SqMat<T, N> c = zero_mat<T, N>();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const T aik = a[i][k];
      for (std::size_t j = 0; j < N; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

template <class T, std::size_t N>
SqMat<T, N> transpose(const SqMat<T, N>& a) {
  SqMat<T, N> t{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) t[j][i] = a[i][j];
  return t;
}

template <std::size_t N>
double frobenius_norm(const Mat<N>& m) {
  double s = 0.0;
  for (const auto& row : m)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

// Determinant by cofactor expansion along the first row.  Exponential in N,
// but N <= 7 everywhere in this library; the payoff is exactness for
// rational scalars and zero dependencies.
template <class T, std::size_t N>
T det(const SqMat<T, N>& m) {
  if constexpr (N == 1) {
    return m[0][0];
  } else if constexpr (N == 2) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  } else {
    T acc = T(0);
    for (std::size_t j = 0; j < N; ++j) {
      SqMat<T, N - 1> minor{};
      for (std::size_t r = 1; r < N; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < N; ++c) {
          if (c == j) continue;
          minor[r - 1][cc++] = m[r][c];
        }
      }
      const T term = m[0][j] * det<T, N - 1>(minor);
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  }
}

// Adjugate of a 3x3 matrix (transpose of the cofactor matrix):
// m * adjugate3(m) == det(m) * I for any scalar ring.
template <class T>
SqMat<T, 3> adjugate3(const SqMat<T, 3>& m) {
  SqMat<T, 3> a{};
  a[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  a[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  a[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  a[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  a[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  a[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  a[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  a[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  a[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return a;
}

// Determinant of the "bordered" matrix obtained from an N x N matrix D of
// pairwise squared distances by prepending a row and column of ones (with a
// zero in the corner):
//
//   | 0  1   ...  1  |
//   | 1                |
//   | .      D         |
//   | 1                |
//
// Computed by cofactor expansion so it stays exact over rational scalars.
template <class T, std::size_t N>
T bordered_det(const SqMat<T, N>& d) {
  SqMat<T, N + 1> b{};
  b[0][0] = T(0);
  for (std::size_t i = 0; i < N; ++i) {
    b[0][i + 1] = T(1);
    b[i + 1][0] = T(1);
    for (std::size_t j = 0; j < N; ++j) b[i + 1][j + 1] = d[i][j];
  }
  return det<T, N + 1>(b);
}

template <class T>
T det3(const SqMat<T, 3>& m) { return det<T, 3>(m); }
template <class T>
T det4(const SqMat<T, 4>& m) { return det<T, 4>(m); }

// ---------------------------------------------------------------------------
// Symmetric eigen decomposition (cyclic Jacobi)
// ---------------------------------------------------------------------------

struct EigenFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <std::size_t N>
struct EigenResult {
  std::array<double, N> values{};  // descending
  Mat<N> vectors{};                // vectors[r][c] = component r of eigenvector c
};

// Cyclic-by-rows Jacobi with a fixed 50-sweep budget and early exit once the
// off-diagonal mass reaches machine precision.  The rotation order is fixed,
// so results are reproducible for identical inputs.
template <std::size_t N>
EigenResult<N> sym_eigen(Mat<N> a) {
  Mat<N> v = identity_mat<double, N>();
  const double scale = frobenius_norm(a);
  constexpr int kMaxSweeps = 50;

  auto off_diag_sq = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) s += a[i][j] * a[i][j];
    return s;
  };

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diag_sq() <= (1e-15 * scale) * (1e-15 * scale)) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p][q];
        if (std::abs(apq) <= 1e-18 * scale) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a[p][p], aqq = a[q][q];
        a[p][p] = app - t * apq;
        a[q][q] = aqq + t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
          a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = vkp - s * (vkq + tau * vkp);
          v[k][q] = vkq + s * (vkp - tau * vkq);
        }
      }
    }
    converged = off_diag_sq() <= (1e-15 * scale) * (1e-15 * scale);
  }
  if (!converged)
    throw EigenFailure("jacobi eigensolver failed to converge in 50 sweeps");

  EigenResult<N> r;
  std::array<std::size_t, N> order{};
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  // stable selection sort by descending eigenvalue (deterministic)
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < N; ++j)
      if (a[order[j]][order[j]] > a[order[best]][order[best]]) best = j;
    std::swap(order[i], order[best]);
  }
  for (std::size_t c = 0; c < N; ++c) {
    r.values[c] = a[order[c]][order[c]];
    for (std::size_t rr = 0; rr < N; ++rr) r.vectors[rr][c] = v[rr][order[c]];
  }
  return r;
}

// Rank of a symmetric matrix: eigenvalues with |lambda| > tol * max|lambda|.
template <std::size_t N>
int sym_rank(const Mat<N>& m, double rank_tol = 1e-10) {
  const EigenResult<N> e = sym_eigen(m);
  double lmax = 0.0;
  for (double l : e.values) lmax = std::max(lmax, std::abs(l));
  if (lmax == 0.0) return 0;
  int rank = 0;
  for (double l : e.values)
    if (std::abs(l) > rank_tol * lmax) ++rank;
  return rank;
}

// Moore-Penrose pseudo-inverse of a symmetric matrix via the spectral
// decomposition; eigenvalues below rank_tol * max|lambda| are treated as 0.
template <std::size_t N>
Mat<N> pseudo_inverse(const Mat<N>& m, double rank_tol = 1e-10) {
  const EigenResult<N> e = sym_eigen(m);
  double lmax = 0.0;
  for (double l : e.values) lmax = std::max(lmax, std::abs(l));
  Mat<N> r = zero_mat<double, N>();
  for (std::size_t k = 0; k < N; ++k) {
    const double l = e.values[k];
    if (lmax == 0.0 || std::abs(l) <= rank_tol * lmax) continue;
    const double inv = 1.0 / l;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        r[i][j] += inv * e.vectors[i][k] * e.vectors[j][k];
  }
  return r;
}

}  // namespace hedron
