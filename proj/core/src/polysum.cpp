#include "polygauss/polysum.hpp"

#include <array>
#include <string>

#include "polygauss/angles.hpp"
#include "polygauss/compensated_sum.hpp"
#include "polygauss/error.hpp"
#include "polygauss/weyl.hpp"

namespace polygauss {

namespace {

void require_lattice(const Polytope& p, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::DegenerateInput, "n must be positive");
  if (!p.is_lattice()) throw Error(ErrorCode::NotALatticePolytope, "vertices must be integer points");
}

std::int64_t squared_norm_mod(std::span<const std::int64_t> x, std::int64_t n) {
  std::int64_t s = 0;
  for (auto c : x) s = (s + (c % n) * (c % n)) % n;
  return s;
}

using IntVec3 = std::array<std::int64_t, 3>;

std::array<IntVec3, 4> tetra_vertices(const Polytope& t) {
  if (t.dim() != 3 || t.vertices().size() != 4)
    throw Error(ErrorCode::NotATetrahedron, "expected 4 vertices in dimension 3");
  if (!t.is_lattice()) throw Error(ErrorCode::NotALatticePolytope, "vertices must be integer points");
  if (t.volume() != Rational(1, 6))
    throw Error(ErrorCode::VolumeNotMinimal, "volume is " + format_rational(t.volume()) + ", not 1/6");
  std::array<IntVec3, 4> v;
  for (int i = 0; i < 4; ++i) {
    const auto c = t.vertices()[i].to_integers();
    v[i] = {c[0], c[1], c[2]};
  }
  return v;
}

Complex phase_of(const IntVec3& x, std::int64_t n) { return unit_root(squared_norm_mod(x, n), n); }

GaussSumReport finish(std::int64_t n, Complex value, Route route, std::int64_t count, const Polytope& p) {
  return {n, value, route, count, value - closed_form_value(p, n)};
}

}  // namespace

std::string_view to_string(Route route) {
  switch (route) {
    case Route::Direct: return "direct";
    case Route::Folded: return "folded";
    case Route::TetraFormula: return "tetra";
  }
  return "?";
}

Route parse_route(std::string_view name) {
  if (name == "direct") return Route::Direct;
  if (name == "folded") return Route::Folded;
  if (name == "tetra") return Route::TetraFormula;
  throw Error(ErrorCode::MalformedInput, "unknown route '" + std::string(name) + "'");
}

Complex closed_form_value(const Polytope& p, std::int64_t n) {
  const Complex g = gauss_sum_closed(n);
  Complex power(1.0, 0.0);
  for (int i = 0; i < p.dim(); ++i) power *= g;
  return to_double(p.volume()) * power;
}

GaussSumReport polyhedral_gauss_sum_direct(const Polytope& p, std::int64_t n) {
  require_lattice(p, n);
  const auto weights = face_weights(p);
  const auto points = p.dilated(n).lattice_points();
  ComplexCompensatedSum sum;
  std::int64_t count = 0;
  for (const auto& lp : points) {
    const double w = weights[lp.location.face];
    if (w <= 0.0) continue;
    ++count;
    sum.add(w * unit_root(squared_norm_mod(lp.point, n), n));
  }
  return finish(n, sum.value(), Route::Direct, count, p);
}

GaussSumReport polyhedral_gauss_sum_folded(const Polytope& p, std::int64_t n) {
  require_lattice(p, n);
  const int d = p.dim();
  const auto weights = face_weights(p);
  ComplexCompensatedSum sum;
  std::int64_t count = 0;

  // k = n x with 0 <= k_1 <= ... <= k_d and 2 k_d <= n, in lexicographic order.
  std::vector<std::int64_t> k(d, 0);
  const auto visit = [&] {
    RationalVector x = RationalVector::zero(d);
    for (int i = 0; i < d; ++i) x[i] = Rational(k[i], n);
    CompensatedSum g;
    for (const auto& y : orbit_points_in_box(x, p.lower_corner(), p.upper_corner())) {
      const auto loc = p.classify(y);
      if (loc.kind == LocationKind::Outside) continue;
      const double w = weights[loc.face];
      if (w <= 0.0) continue;
      ++count;
      g.add(w);
    }
    sum.add(g.value() * unit_root(squared_norm_mod(k, n), n));
  };
  const std::int64_t top = n / 2;
  while (true) {
    visit();
    // Advance to the next non-decreasing sequence bounded by `top`.
    int i = d - 1;
    while (i >= 0 && k[i] == top) --i;
    if (i < 0) break;
    ++k[i];
    for (int j = i + 1; j < d; ++j) k[j] = k[i];
  }
  return finish(n, sum.value(), Route::Folded, count, p);
}

Complex kappa(const Polytope& tetra, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::DegenerateInput, "n must be positive");
  const auto v = tetra_vertices(tetra);
  ComplexCompensatedSum faces;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int l = j + 1; l < 4; ++l)
        for (std::int64_t a = 1; a < n; ++a)
          for (std::int64_t b = 1; a + b < n; ++b) {
            const std::int64_t c = n - a - b;
            IntVec3 x;
            for (int m = 0; m < 3; ++m) x[m] = a * v[i][m] + b * v[j][m] + c * v[l][m];
            faces.add(phase_of(x, n));
          }
  ComplexCompensatedSum interior;
  for (std::int64_t a = 1; a < n; ++a)
    for (std::int64_t b = 1; a + b < n; ++b)
      for (std::int64_t c = 1; a + b + c < n; ++c) {
        const std::int64_t e = n - a - b - c;
        IntVec3 x;
        for (int m = 0; m < 3; ++m) x[m] = a * v[0][m] + b * v[1][m] + c * v[2][m] + e * v[3][m];
        interior.add(phase_of(x, n));
      }
  return 0.5 * faces.value() + interior.value();
}

GaussSumReport tetra_gauss_sum_formula(const Polytope& tetra, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::DegenerateInput, "n must be positive");
  tetra_vertices(tetra);
  const auto& vs = tetra.vertices();
  const std::array<RationalVector, 4> verts{vs[0], vs[1], vs[2], vs[3]};
  const auto angles = tetrahedron_angles(verts);
  ComplexCompensatedSum sum;
  sum.add(-1.0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sum.add(angles.dihedral[i][j] * quad_gauss_closed(angles.sq_lengths[i][j], n));
  sum.add(kappa(tetra, n));
  // Lattice points of nT: vertices, edge, facet and interior points.
  const std::int64_t m = n - 1;
  const std::int64_t count = 4 + 6 * m + 4 * (m * (m - 1) / 2) + m * (m - 1) * (m - 2) / 6;
  return finish(n, sum.value(), Route::TetraFormula, count, tetra);
}

GaussSumReport polyhedral_gauss_sum(const Polytope& p, std::int64_t n, Route route) {
  switch (route) {
    case Route::Direct: return polyhedral_gauss_sum_direct(p, n);
    case Route::Folded: return polyhedral_gauss_sum_folded(p, n);
    case Route::TetraFormula: return tetra_gauss_sum_formula(p, n);
  }
  throw Error(ErrorCode::UndefinedCase, "route");
}

Complex closed_form_residual(const Polytope& p, std::int64_t n) { return polyhedral_gauss_sum_direct(p, n).residual; }

}  // namespace polygauss
