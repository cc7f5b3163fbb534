#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polygauss/polytope.hpp"
#include "polygauss/weyl.hpp"

namespace polygauss {

using Tetrahedron = LatticeSimplex<3>;

inline constexpr double kClassificationTolerance = 1e-6;

/// conv{(0,0,0), (1,0,0), (1,1,0), (1,1,1)}.
Tetrahedron fundamental_tetrahedron();

struct OrbitRepresentative {
  Tetrahedron canonical;
  /// First member met by the enumeration, with v_0 = 0.
  Tetrahedron first_seen;
};

struct MinimalTetrahedra {
  /// Unimodular triples v_1 < v_2 < v_3 examined.
  std::int64_t candidates_scanned = 0;
  /// One entry per G-orbit, sorted by canonical form.
  std::vector<OrbitRepresentative> orbits;
};

/// All conv{0, v_1, v_2, v_3} with v_i in [-bound, bound]^3 and
/// |det(v_1, v_2, v_3)| = 1, deduplicated by canonical form. The result does
/// not depend on `threads`.
MinimalTetrahedra enumerate_minimal_tetrahedra(int bound, unsigned threads = 1);

struct RelationTest {
  std::vector<std::int64_t> ns;
  /// |G_T(n) - vol(T) G(n)^3| per n.
  std::vector<double> residuals;
  bool pass = false;
};

RelationTest gauss_relation_test(const Polytope& tetra, std::span<const std::int64_t> ns, double tol);

struct OrbitResult {
  Tetrahedron canonical;
  Tetrahedron first_seen;
  RelationTest test;
};

struct ClassificationReport {
  int bound = 0;
  double tolerance = 0.0;
  std::int64_t candidates_scanned = 0;
  std::int64_t distinct_orbits = 0;
  /// Every orbit with its residuals, in canonical order.
  std::vector<OrbitResult> orbits;
  std::vector<OrbitResult> passing_orbits;
  /// Every passing orbit is the orbit of the fundamental tetrahedron.
  bool theorem_confirmed = false;
  /// Whether each passing orbit's first member, moved so its
  /// lexicographically least vertex is the origin, is a pure signed
  /// permutation of the fundamental tetrahedron.
  std::vector<bool> weyl_equivalent_without_translation;
  /// Smallest max-over-n residual among rejected orbits: the margin by which
  /// the closest failure missed.
  std::optional<double> min_failing_residual;
};

inline const std::vector<std::int64_t> kRelationOrders{1, 2, 3, 4};

ClassificationReport run_theorem2_experiment(int bound, double tol = kClassificationTolerance, unsigned threads = 1);

/// True if some w in W maps the vertex set of `a` onto that of `b`.
bool weyl_equivalent(const Tetrahedron& a, const Tetrahedron& b);

/// Labels the vertices of a tetrahedron in the orbit of the fundamental
/// tetrahedron as v_0..v_3 with v_0 = 0 such that some w in W sends
/// (v_1, v_2, v_3) to ((1,0,0), (1,1,0), (1,1,1)). Empty for other orbits.
std::optional<Tetrahedron> fundamental_labeling(const Tetrahedron& tetra);

}  // namespace polygauss
