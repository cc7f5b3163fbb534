#pragma once

#include <cstdint>
#include <string_view>

#include "polygauss/gauss.hpp"
#include "polygauss/polytope.hpp"

namespace polygauss {

enum class Route { Direct, Folded, TetraFormula };

std::string_view to_string(Route route);
/// Accepts "direct", "folded", "tetra".
Route parse_route(std::string_view name);

/// One evaluation of the polyhedral Gauss sum
///   G_P(n) = sum_{x in Z^d} w_{nP}(x) e(|x|^2 / n).
struct GaussSumReport {
  std::int64_t n = 0;
  Complex value;
  Route route = Route::Direct;
  /// Lattice points of nP counted with nonzero weight.
  std::int64_t point_count = 0;
  /// value - vol(P) G(n)^d.
  Complex residual;
};

/// Enumerates the lattice points of nP in lexicographic order.
GaussSumReport polyhedral_gauss_sum_direct(const Polytope& p, std::int64_t n);

/// Folds the sum onto the fundamental domain {0 <= x_1 <= ... <= x_d <= 1/2}:
/// each point x of (1/n)Z^d there carries the angle sum of P over its full
/// G-orbit.
GaussSumReport polyhedral_gauss_sum_folded(const Polytope& p, std::int64_t n);

/// Face and interior contribution of nT for a unimodular tetrahedron T:
///   (1/2) sum_{i<j<k} sum_{a+b+c=n} e(|a v_i + b v_j + c v_k|^2 / n)
///   + sum_{a+b+c+d=n} e(|a v_0 + b v_1 + c v_2 + d v_3|^2 / n),
/// all coefficients positive. Throws VolumeNotMinimal unless vol(T) = 1/6.
Complex kappa(const Polytope& tetra, std::int64_t n);

/// G_T(n) = -1 + sum_{i<j} w_ij G(n_ij, n) + kappa(n) for vol(T) = 1/6.
GaussSumReport tetra_gauss_sum_formula(const Polytope& tetra, std::int64_t n);

GaussSumReport polyhedral_gauss_sum(const Polytope& p, std::int64_t n, Route route);

/// Direct G_P(n) - vol(P) G(n)^d.
Complex closed_form_residual(const Polytope& p, std::int64_t n);

/// vol(P) G(n)^d.
Complex closed_form_value(const Polytope& p, std::int64_t n);

}  // namespace polygauss
