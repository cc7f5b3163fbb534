#pragma once

// Reference implementations used only by the tests. Nothing here calls the
// library: lattice points come from barycentric coordinates, dihedral angles
// from projected edge vectors, vertex angles from Girard's theorem, sums in
// long double. Agreement with the library is therefore evidence, not a
// tautology.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using V3 = std::array<std::int64_t, 3>;
using Tet = std::array<V3, 4>;
using CLD = std::complex<long double>;

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline CLD e(std::int64_t k, std::int64_t m) {
  const long double t = 2 * kPi * static_cast<long double>(mod(k, m)) / static_cast<long double>(m);
  return {std::cos(t), std::sin(t)};
}

// Jacobi symbol from the definition: product of Legendre symbols over the
// prime factorization of b, each by Euler's criterion.
inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

inline int legendre(std::int64_t a, std::int64_t p) {
  const auto r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

inline int jacobi(std::int64_t a, std::int64_t b) {
  int out = 1;
  for (std::int64_t p = 3; b > 1; p += 2)
    while (b % p == 0) {
      out *= legendre(a, p);
      b /= p;
    }
  return out;
}

inline CLD quad_gauss(std::int64_t a, std::int64_t b) {
  CLD s = 0;
  for (std::int64_t k = 0; k < b; ++k) s += e(mod(a, b) * (k * k % b), b);
  return s;
}

inline CLD gauss(std::int64_t n) { return quad_gauss(1, n); }

// ---- geometry in doubles ----

using D3 = std::array<double, 3>;

inline D3 sub(const V3& a, const V3& b) {
  return {double(a[0] - b[0]), double(a[1] - b[1]), double(a[2] - b[2])};
}
inline double dot(const D3& a, const D3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline D3 axpy(double s, const D3& x, const D3& y) { return {y[0] + s * x[0], y[1] + s * x[1], y[2] + s * x[2]}; }

inline std::int64_t det3(const V3& a, const V3& b, const V3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline V3 diff(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Interior dihedral angle at edge v_i v_j as a fraction of the full turn: the
// angle between the other two edges from v_i after projecting out the edge
// direction.
inline double dihedral(const Tet& t, int i, int j) {
  int k = -1, l = -1;
  for (int m = 0; m < 4; ++m)
    if (m != i && m != j) (k < 0 ? k : l) = m;
  const D3 edge = sub(t[j], t[i]);
  const double ee = dot(edge, edge);
  D3 a = sub(t[k], t[i]), b = sub(t[l], t[i]);
  a = axpy(-dot(a, edge) / ee, edge, a);
  b = axpy(-dot(b, edge) / ee, edge, b);
  const double c = dot(a, b) / std::sqrt(dot(a, a) * dot(b, b));
  return std::acos(std::max(-1.0, std::min(1.0, c))) / (2 * double(kPi));
}

// Girard: a trihedral cone with dihedral angles A, B, C (radians) subtends
// A + B + C - pi steradians.
inline double vertex_angle(const Tet& t, int i) {
  double s = 0;
  for (int j = 0; j < 4; ++j)
    if (j != i) s += dihedral(t, i, j);
  return s / 2 - 0.25;  // (2 pi s - pi) / (4 pi)
}

// Weight of a point of nT from the zero pattern of its barycentric
// coordinates.
inline double tet_weight(const Tet& t, const std::array<std::int64_t, 4>& bary) {
  std::vector<int> zero, pos;
  for (int i = 0; i < 4; ++i) (bary[i] == 0 ? zero : pos).push_back(i);
  switch (zero.size()) {
    case 0: return 1.0;
    case 1: return 0.5;
    case 2: return dihedral(t, pos[0], pos[1]);
    default: return vertex_angle(t, pos[0]);
  }
}

// Lattice points of nT for a tetrahedron T with integer vertices, via exact
// barycentric coordinates: x = v_0 + M y, y = adj(M)(x - v_0)/det(M).
struct TetPoint {
  V3 x;
  std::array<std::int64_t, 4> bary;  // scaled by |det|; only the zero pattern matters
};

inline std::vector<TetPoint> tet_lattice_points(const Tet& t, std::int64_t n) {
  const V3 a = diff(t[1], t[0]), b = diff(t[2], t[0]), c = diff(t[3], t[0]);
  const auto det = det3(a, b, c);
  std::vector<TetPoint> out;
  V3 lo = t[0], hi = t[0];
  for (const auto& v : t)
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  for (std::int64_t x = n * lo[0]; x <= n * hi[0]; ++x)
    for (std::int64_t y = n * lo[1]; y <= n * hi[1]; ++y)
      for (std::int64_t z = n * lo[2]; z <= n * hi[2]; ++z) {
        const V3 p{x - n * t[0][0], y - n * t[0][1], z - n * t[0][2]};
        // Cramer: y_1 = det(p, b, c) / det, etc.
        const std::int64_t d1 = det3(p, b, c), d2 = det3(a, p, c), d3 = det3(a, b, p);
        const std::int64_t d0 = n * det - d1 - d2 - d3;
        const bool inside = det > 0 ? (d0 >= 0 && d1 >= 0 && d2 >= 0 && d3 >= 0)
                                    : (d0 <= 0 && d1 <= 0 && d2 <= 0 && d3 <= 0);
        if (!inside) continue;
        const std::int64_t s = det > 0 ? 1 : -1;
        out.push_back({{x, y, z}, {s * d0, s * d1, s * d2, s * d3}});
      }
  return out;
}

inline CLD tet_gauss_sum(const Tet& t, std::int64_t n) {
  CLD s = 0;
  for (const auto& p : tet_lattice_points(t, n)) {
    const std::int64_t q = p.x[0] * p.x[0] + p.x[1] * p.x[1] + p.x[2] * p.x[2];
    s += static_cast<long double>(tet_weight(t, p.bary)) * e(q, n);
  }
  return s;
}

// Unit cube [0,1]^d: weights factor over coordinates (1/2 at 0 and n).
inline CLD cube_gauss_sum(int d, std::int64_t n) {
  CLD one = 0;
  for (std::int64_t k = 0; k <= n; ++k) one += (k == 0 || k == n ? 0.5L : 1.0L) * e(k * k, n);
  CLD out = 1;
  for (int i = 0; i < d; ++i) out *= one;
  return out;
}

// Lattice triangle in the plane: vertex weights are interior angles / 2 pi.
using V2 = std::array<std::int64_t, 2>;
inline CLD triangle_gauss_sum(const std::array<V2, 3>& t, std::int64_t n) {
  auto angle = [&](int i) {
    const auto& p = t[i];
    const auto& q = t[(i + 1) % 3];
    const auto& r = t[(i + 2) % 3];
    const double ax = double(q[0] - p[0]), ay = double(q[1] - p[1]);
    const double bx = double(r[0] - p[0]), by = double(r[1] - p[1]);
    return std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by) / (2 * double(kPi));
  };
  const std::int64_t ax = t[1][0] - t[0][0], ay = t[1][1] - t[0][1];
  const std::int64_t bx = t[2][0] - t[0][0], by = t[2][1] - t[0][1];
  const std::int64_t det = ax * by - ay * bx;
  const std::int64_t s = det > 0 ? 1 : -1;
  std::int64_t lo0 = std::min({t[0][0], t[1][0], t[2][0]}), hi0 = std::max({t[0][0], t[1][0], t[2][0]});
  std::int64_t lo1 = std::min({t[0][1], t[1][1], t[2][1]}), hi1 = std::max({t[0][1], t[1][1], t[2][1]});
  CLD sum = 0;
  for (std::int64_t x = n * lo0; x <= n * hi0; ++x)
    for (std::int64_t y = n * lo1; y <= n * hi1; ++y) {
      const std::int64_t px = x - n * t[0][0], py = y - n * t[0][1];
      const std::int64_t l1 = s * (px * by - py * bx), l2 = s * (ax * py - ay * px);
      const std::int64_t l0 = s * n * det - l1 - l2;
      if (l0 < 0 || l1 < 0 || l2 < 0) continue;
      const std::array<std::int64_t, 3> l{l0, l1, l2};
      int zeros = 0, pos = -1;
      for (int i = 0; i < 3; ++i) {
        if (l[i] == 0) ++zeros;
        else pos = i;
      }
      long double w = zeros == 0 ? 1.0L : zeros == 1 ? 0.5L : angle(pos);
      sum += w * e(x * x + y * y, n);
    }
  return sum;
}

// Fraction of directions inside the cone spanned by g0, g1, g2, by sampling
// isotropic Gaussian vectors and solving for cone coordinates.
inline double monte_carlo_cone(const std::array<D3, 3>& g, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const auto& a = g[0];
  const auto& b = g[1];
  const auto& c = g[2];
  auto det = [](const D3& x, const D3& y, const D3& z) {
    return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) + x[2] * (y[0] * z[1] - y[1] * z[0]);
  };
  const double d = det(a, b, c);
  int hits = 0;
  for (int s = 0; s < samples; ++s) {
    const D3 u{normal(rng), normal(rng), normal(rng)};
    const double l0 = det(u, b, c) / d, l1 = det(a, u, c) / d, l2 = det(a, b, u) / d;
    if (l0 >= 0 && l1 >= 0 && l2 >= 0) ++hits;
  }
  return double(hits) / samples;
}

// Random tetrahedron with integer coordinates in [-bound, bound] and nonzero
// volume.
inline Tet random_tet(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  while (true) {
    Tet t;
    for (auto& v : t)
      for (auto& c : v) c = coord(rng);
    if (det3(diff(t[1], t[0]), diff(t[2], t[0]), diff(t[3], t[0])) != 0) return t;
  }
}

// Random unimodular (volume 1/6) tetrahedron with coordinates in
// [-bound, bound].
inline Tet random_unimodular_tet(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  while (true) {
    Tet t;
    for (auto& v : t)
      for (auto& c : v) c = coord(rng);
    const auto d = det3(diff(t[1], t[0]), diff(t[2], t[0]), diff(t[3], t[0]));
    if (d == 1 || d == -1) return t;
  }
}

}  // namespace oracle
