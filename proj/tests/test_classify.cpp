#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "polygauss/classify.hpp"
#include "polygauss/polysum.hpp"

using namespace polygauss;
using testing_support::poly;
using testing_support::thrown_code;

namespace {

Tetrahedron as_simplex(const oracle::Tet& t) {
  Tetrahedron s;
  for (int i = 0; i < 4; ++i) s[i] = {t[i][0], t[i][1], t[i][2]};
  return s;
}

const Tetrahedron kFundamentalCanonical{{{-1, -1, -1}, {-1, -1, 0}, {-1, 0, 0}, {0, 0, 0}}};
const Tetrahedron kSecondCanonical{{{-2, -1, -1}, {-1, -1, -1}, {-1, -1, 0}, {0, 0, 0}}};

std::int64_t sq(const std::array<std::int64_t, 3>& a, const std::array<std::int64_t, 3>& b) {
  std::int64_t s = 0;
  for (int c = 0; c < 3; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
  return s;
}

}  // namespace

TEST_CASE("canonical forms of the two known tilers") {
  CHECK(canonical_form<3>(fundamental_tetrahedron()) == kFundamentalCanonical);
  CHECK(canonical_form<3>(as_simplex(testing_support::kSecondTiler)) == kSecondCanonical);
}

TEST_CASE("enumeration at bound 1") {
  const auto r = enumerate_minimal_tetrahedra(1);
  CHECK(r.candidates_scanned == 1160);
  CHECK(r.orbits.size() == 21);
  CHECK(std::is_sorted(r.orbits.begin(), r.orbits.end(),
                       [](const auto& a, const auto& b) { return a.canonical < b.canonical; }));
  for (const auto& o : r.orbits) {
    CHECK(simplex_polytope<3>(o.canonical).volume() == Rational(1, 6));
    CHECK(canonical_form<3>(o.first_seen) == o.canonical);
    CHECK(o.first_seen[0] == std::array<std::int64_t, 3>{0, 0, 0});
  }
  const auto has = [&](const Tetrahedron& c) {
    return std::any_of(r.orbits.begin(), r.orbits.end(), [&](const auto& o) { return o.canonical == c; });
  };
  CHECK(has(kFundamentalCanonical));
  CHECK(has(kSecondCanonical));
  CHECK(has(canonical_form<3>(as_simplex(testing_support::kStandard))));
}

TEST_CASE("enumeration does not depend on the thread count") {
  const auto a = enumerate_minimal_tetrahedra(1, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto b = enumerate_minimal_tetrahedra(1, t);
    CHECK(b.candidates_scanned == a.candidates_scanned);
    REQUIRE(b.orbits.size() == a.orbits.size());
    for (std::size_t k = 0; k < a.orbits.size(); ++k) {
      CHECK(b.orbits[k].canonical == a.orbits[k].canonical);
      CHECK(b.orbits[k].first_seen == a.orbits[k].first_seen);
    }
  }
}

TEST_CASE("relation test") {
  const auto f = gauss_relation_test(poly(testing_support::kFundamental), kRelationOrders, kClassificationTolerance);
  CHECK(f.pass);
  CHECK(f.ns == kRelationOrders);
  for (double r : f.residuals) CHECK(r < 1e-9);
  const auto s = gauss_relation_test(poly(testing_support::kStandard), kRelationOrders, kClassificationTolerance);
  CHECK_FALSE(s.pass);
  CHECK(*std::max_element(s.residuals.begin(), s.residuals.end()) > 0.1);
  const auto cube = polytope_from_integers({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(thrown_code([&] { gauss_relation_test(cube, kRelationOrders, 1e-6); }) == ErrorCode::VolumeNotMinimal);
}

TEST_CASE("two passing orbits at bounds 1 and 2: the fundamental one and a second tiler") {
  for (int bound : {1, 2}) {
    const auto r = run_theorem2_experiment(bound, kClassificationTolerance, 4);
    CHECK(r.distinct_orbits == static_cast<std::int64_t>(r.orbits.size()));
    REQUIRE(r.passing_orbits.size() == 2);
    CHECK(r.passing_orbits[0].canonical == kSecondCanonical);
    CHECK(r.passing_orbits[1].canonical == kFundamentalCanonical);
    CHECK_FALSE(r.theorem_confirmed);
    CHECK(r.weyl_equivalent_without_translation == std::vector<bool>{false, true});
    for (const auto& o : r.passing_orbits) {
      CHECK(multitiling_check(simplex_polytope<3>(o.canonical), 200, 3).is_multitiling);
      for (std::int64_t n = 5; n <= 8; ++n) CHECK(std::abs(closed_form_residual(simplex_polytope<3>(o.canonical), n)) < 1e-8);
    }
    REQUIRE(r.min_failing_residual.has_value());
    const double expected = bound == 1 ? 0.5767897808416119 : 0.23986034993454633;
    CHECK(*r.min_failing_residual == doctest::Approx(expected).epsilon(1e-10));
  }
  const auto b1 = run_theorem2_experiment(1);
  CHECK(b1.candidates_scanned == 1160);
  CHECK(run_theorem2_experiment(2).candidates_scanned == 22568);
  CHECK(run_theorem2_experiment(2).distinct_orbits == 330);
}

TEST_CASE("the second tiler has an all-odd-edge vertex and no fundamental labeling") {
  // At the origin the squared edges are 1, 1, 3: all odd.
  const auto t = as_simplex(testing_support::kSecondTiler);
  std::vector<std::int64_t> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) edges.push_back(sq(t[i], t[j]));
  std::sort(edges.begin(), edges.end());
  CHECK(edges == std::vector<std::int64_t>{1, 1, 2, 2, 3, 6});
  CHECK_FALSE(fundamental_labeling(t).has_value());
  CHECK_FALSE(weyl_equivalent(t, fundamental_tetrahedron()));
}

TEST_CASE("fundamental labeling: n_ij = j - i") {
  std::mt19937_64 rng(6);
  const auto w = weyl_elements(3);
  std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
  std::uniform_int_distribution<int> shift(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& g = w[pick(rng)];
    const std::array<std::int64_t, 3> lam{shift(rng), shift(rng), shift(rng)};
    Tetrahedron moved;
    const auto f = fundamental_tetrahedron();
    for (int i = 0; i < 4; ++i) {
      const auto y = g.apply(f[i]);
      moved[(i + trial) % 4] = {y[0] + lam[0], y[1] + lam[1], y[2] + lam[2]};
    }
    const auto lab = fundamental_labeling(moved);
    REQUIRE(lab.has_value());
    CHECK((*lab)[0] == std::array<std::int64_t, 3>{0, 0, 0});
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(sq((*lab)[i], (*lab)[j]) == j - i);
  }
}

TEST_CASE("weyl_equivalent ignores vertex order but not translation") {
  const auto f = fundamental_tetrahedron();
  Tetrahedron flipped;
  for (int i = 0; i < 4; ++i) flipped[3 - i] = {-f[i][0], f[i][2], f[i][1]};
  CHECK(weyl_equivalent(flipped, f));
  auto moved = f;
  for (auto& v : moved) v[0] += 1;
  CHECK_FALSE(weyl_equivalent(moved, f));
}

TEST_CASE("the three routes agree on every orbit at bound 1") {
  for (const auto& o : enumerate_minimal_tetrahedra(1).orbits) {
    const auto p = simplex_polytope<3>(o.canonical);
    for (std::int64_t n = 1; n <= 4; ++n) {
      const auto d = polyhedral_gauss_sum_direct(p, n);
      CHECK(std::abs(polyhedral_gauss_sum_folded(p, n).value - d.value) < 1e-8 * d.point_count);
      CHECK(std::abs(tetra_gauss_sum_formula(p, n).value - d.value) < 1e-8 * d.point_count);
    }
  }
}

TEST_CASE("experiment rejects a nonpositive tolerance") {
  CHECK(thrown_code([] { run_theorem2_experiment(1, 0.0); }) == ErrorCode::DegenerateInput);
}
