#pragma once

// Solid, dihedral and external angles. Every angle here is normalized so the
// full circle and the full sphere both measure 1: a half-space is 1/2, an
// octant 1/8, a right dihedral angle 1/4.

#include <array>
#include <cstdint>
#include <span>

#include "polygauss/polytope.hpp"
#include "polygauss/rational.hpp"

namespace polygauss {

inline constexpr double kAngleTolerance = 1e-9;

/// Solid angle of the cone at `apex` spanned by the three generators, each
/// given as a point (the generator is point - apex). Van Oosterom-Strackee:
///   tan(2 pi w) = |det(A,B,C)| / (|A||B||C| + (B.C)|A| + (C.A)|B| + (A.B)|C|),
/// evaluated through atan2 so the result lies in (0, 1/2).
double simplicial_cone_solid_angle(const RationalVector& apex, std::span<const RationalVector, 3> points);

/// Same, with the generators given as direction vectors.
double simplicial_cone_solid_angle(std::span<const RationalVector, 3> generators);

/// External solid angle of a tetrahedron at vertex i along edge v_j - v_i:
/// the cone at v_i spanned by v_i - v_j, v_k - v_i and v_l - v_i.
double external_solid_angle(std::span<const RationalVector, 4> tetra, int i, int j);

/// Interior dihedral angle at an edge of a 3-polytope, from the inward normals
/// of its two facets.
double dihedral_angle(const Polytope& p, std::size_t edge_face);

/// Solid angle of the cone at vertex `vertex` of a 3-polytope. The vertex
/// figure is fanned into simplicial cones starting at the `fan_start`-th edge
/// in cyclic order; the result does not depend on the start up to rounding.
double vertex_solid_angle(const Polytope& p, std::size_t vertex, std::size_t fan_start = 0);

/// Weight w_P(x) of a point whose location is already known.
double face_weight(const Polytope& p, const FaceLocation& where);

/// Weight of every face of `p`, indexed by face id. Weights are invariant
/// under dilation, so these also serve nP.
std::vector<double> face_weights(const Polytope& p);

/// w_P(x): fraction of a small ball around x that lies in P.
double solid_angle(const Polytope& p, const RationalVector& x);

/// All angles of a tetrahedron v_0..v_3. Indexed [i][j]; diagonal entries of
/// the matrices are unused (zero).
struct TetrahedronAngles {
  std::array<double, 4> solid{};
  std::array<std::array<double, 4>, 4> dihedral{};
  std::array<std::array<double, 4>, 4> external{};
  std::array<std::array<std::int64_t, 4>, 4> sq_lengths{};

  /// w_i - (1/2) sum_{j != i} w_ij + 1/4.
  double gram_residual(int i) const;
  /// w_ij - w_i - phi_ij.
  double external_residual(int i, int j) const;
  double solid_sum() const;
  double dihedral_sum() const;
};

/// Requires integer coordinates and affinely independent vertices.
TetrahedronAngles tetrahedron_angles(std::span<const RationalVector, 4> vertices);

}  // namespace polygauss
