#include "polygauss/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>

#include "polygauss/error.hpp"
#include "polygauss/polysum.hpp"

namespace polygauss {

namespace {

using Vec = std::array<std::int64_t, 3>;

std::int64_t det3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

// Runs body(i) for i in [0, count) split across worker threads, each worker
// taking a strided subset.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  threads = resolve_threads(threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) body(i, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

}  // namespace

Tetrahedron fundamental_tetrahedron() { return {{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}}}; }

MinimalTetrahedra enumerate_minimal_tetrahedra(int bound, unsigned threads) {
  if (bound < 1) throw Error(ErrorCode::DegenerateInput, "bound must be at least 1");
  std::vector<Vec> box;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (std::int64_t z = -bound; z <= bound; ++z) box.push_back({x, y, z});

  threads = resolve_threads(threads);
  struct Local {
    std::map<Tetrahedron, std::pair<Key, Tetrahedron>> seen;
    std::int64_t scanned = 0;
  };
  std::vector<Local> locals(threads);
  parallel_for(box.size(), threads, [&](std::size_t i, unsigned t) {
    auto& local = locals[t];
    for (std::size_t j = i + 1; j < box.size(); ++j)
      for (std::size_t k = j + 1; k < box.size(); ++k) {
        const auto det = det3(box[i], box[j], box[k]);
        if (det != 1 && det != -1) continue;
        ++local.scanned;
        const Tetrahedron t{{{0, 0, 0}, box[i], box[j], box[k]}};
        const auto canon = canonical_form<3>(t);
        const Key key{i, j, k};
        auto [it, inserted] = local.seen.try_emplace(canon, key, t);
        if (!inserted && key < it->second.first) it->second = {key, t};
      }
  });

  // Merge keeping the earliest enumerated member of each orbit.
  std::map<Tetrahedron, std::pair<Key, Tetrahedron>> merged;
  MinimalTetrahedra out;
  for (auto& local : locals) {
    out.candidates_scanned += local.scanned;
    for (auto& [canon, entry] : local.seen) {
      auto [it, inserted] = merged.try_emplace(canon, entry);
      if (!inserted && entry.first < it->second.first) it->second = entry;
    }
  }
  for (const auto& [canon, entry] : merged) out.orbits.push_back({canon, entry.second});
  return out;
}

RelationTest gauss_relation_test(const Polytope& tetra, std::span<const std::int64_t> ns, double tol) {
  if (tetra.volume() != Rational(1, 6))
    throw Error(ErrorCode::VolumeNotMinimal, "relation test needs a volume-1/6 tetrahedron");
  RelationTest out;
  out.ns.assign(ns.begin(), ns.end());
  out.pass = true;
  for (auto n : ns) {
    const double r = std::abs(closed_form_residual(tetra, n));
    out.residuals.push_back(r);
    if (!(r < tol)) out.pass = false;
  }
  return out;
}

bool weyl_equivalent(const Tetrahedron& a, const Tetrahedron& b) {
  static const auto group = weyl_elements(3);
  auto target = b;
  std::sort(target.begin(), target.end());
  for (const auto& w : group) {
    Tetrahedron img;
    for (int v = 0; v < 4; ++v) img[v] = w.apply(a[v]);
    std::sort(img.begin(), img.end());
    if (img == target) return true;
  }
  return false;
}

std::optional<Tetrahedron> fundamental_labeling(const Tetrahedron& tetra) {
  static const auto group = weyl_elements(3);
  const auto fund = fundamental_tetrahedron();
  std::array<int, 4> order{0, 1, 2, 3};
  do {
    Tetrahedron labeled;
    for (int v = 0; v < 4; ++v)
      for (int c = 0; c < 3; ++c) labeled[v][c] = tetra[order[v]][c] - tetra[order[0]][c];
    for (const auto& w : group) {
      bool match = true;
      for (int v = 1; v < 4 && match; ++v) match = w.apply(labeled[v]) == fund[v];
      if (match) return labeled;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

ClassificationReport run_theorem2_experiment(int bound, double tol, unsigned threads) {
  if (!(tol > 0.0)) throw Error(ErrorCode::DegenerateInput, "tolerance must be positive");
  const auto found = enumerate_minimal_tetrahedra(bound, threads);
  ClassificationReport report;
  report.bound = bound;
  report.tolerance = tol;
  report.candidates_scanned = found.candidates_scanned;
  report.distinct_orbits = static_cast<std::int64_t>(found.orbits.size());
  report.orbits.resize(found.orbits.size());
  parallel_for(found.orbits.size(), threads, [&](std::size_t i, unsigned) {
    const auto& o = found.orbits[i];
    report.orbits[i] = {o.canonical, o.first_seen, gauss_relation_test(simplex_polytope<3>(o.canonical), kRelationOrders, tol)};
  });

  const auto fund = canonical_form<3>(fundamental_tetrahedron());
  report.theorem_confirmed = true;
  for (const auto& r : report.orbits) {
    if (r.test.pass) {
      report.passing_orbits.push_back(r);
      if (r.canonical != fund) report.theorem_confirmed = false;

      auto shifted = r.first_seen;
      const auto least = *std::min_element(shifted.begin(), shifted.end());
      for (auto& v : shifted)
        for (int c = 0; c < 3; ++c) v[c] -= least[c];
      report.weyl_equivalent_without_translation.push_back(weyl_equivalent(shifted, fundamental_tetrahedron()));
    } else {
      const double worst = *std::max_element(r.test.residuals.begin(), r.test.residuals.end());
      if (!report.min_failing_residual || worst < *report.min_failing_residual) report.min_failing_residual = worst;
    }
  }
  return report;
}

}  // namespace polygauss
