#include "polygauss_cli/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "polygauss/angles.hpp"
#include "polygauss/gauss.hpp"

namespace polygauss::cli {

namespace {

// Integers as JSON numbers, everything else as "p/q", mirroring the input
// format.
Json coordinate(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return format_rational(r);
}

Json point(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(coordinate(c));
  return out;
}

Json point(const std::array<std::int64_t, 3>& v) { return Json::array({v[0], v[1], v[2]}); }

Json simplex(const Tetrahedron& t) {
  Json out = Json::array();
  for (const auto& v : t) out.push_back(point(v));
  return out;
}

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json orbit_json(const OrbitResult& o, bool weyl_only) {
  Json residuals = Json::array();
  for (std::size_t k = 0; k < o.test.ns.size(); ++k)
    residuals.push_back(Json{{"n", o.test.ns[k]}, {"residual", o.test.residuals[k]}});
  return Json{{"canonical", simplex(o.canonical)},
              {"first_seen", simplex(o.first_seen)},
              {"residuals", residuals},
              {"weyl_equivalent_without_translation", weyl_only}};
}

}  // namespace

Json to_json(const GaussSumReport& r) {
  return Json{{"n", r.n},
              {"re", r.value.real()},
              {"im", r.value.imag()},
              {"route", std::string(to_string(r.route))},
              {"point_count", r.point_count},
              {"residual_re", r.residual.real()},
              {"residual_im", r.residual.imag()}};
}

Json to_json(const MultiTilingReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(Json{{"sample", point(w.sample)}, {"observed", w.observed}});
  return Json{{"is_multitiling", r.is_multitiling},
              {"multiplicity", r.multiplicity ? Json(*r.multiplicity) : Json(nullptr)},
              {"expected_multiplicity", coordinate(r.expected_multiplicity)},
              {"samples_checked", r.samples_checked},
              {"boundary_resamples", r.boundary_resamples},
              {"witnesses", witnesses}};
}

Json to_json(const ClassificationReport& r) {
  Json passing = Json::array();
  for (std::size_t i = 0; i < r.passing_orbits.size(); ++i)
    passing.push_back(orbit_json(r.passing_orbits[i], r.weyl_equivalent_without_translation[i]));
  return Json{{"bound", r.bound},
              {"tolerance", r.tolerance},
              {"candidates_scanned", r.candidates_scanned},
              {"distinct_orbits", r.distinct_orbits},
              {"theorem_confirmed", r.theorem_confirmed},
              {"min_failing_residual", r.min_failing_residual ? Json(*r.min_failing_residual) : Json(nullptr)},
              {"passing_orbits", passing}};
}

Json angles_json(const Polytope& p) {
  const auto weights = face_weights(p);
  Json vertices = Json::array();
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    vertices.push_back(Json{{"vertex", point(p.vertices()[v])}, {"angle", weights[p.vertex_face(v)]}});
  Json out{{"dim", p.dim()}, {"volume", coordinate(p.volume())}, {"vertices", vertices}};
  if (p.dim() == 3) {
    Json edges = Json::array();
    for (auto e : p.faces_of_dim(1)) {
      const auto& f = p.face(e);
      edges.push_back(Json{{"vertices", Json::array({f.vertices[0], f.vertices[1]})}, {"dihedral", weights[e]}});
    }
    out["edges"] = edges;
    double total = 0.0;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) total += weights[p.vertex_face(v)];
    out["vertex_angle_sum"] = total;
  }
  return out;
}

std::string format_vertices(const Tetrahedron& t) {
  std::string out;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (v) out += ';';
    out += std::to_string(t[v][0]) + ' ' + std::to_string(t[v][1]) + ' ' + std::to_string(t[v][2]);
  }
  return out;
}

std::string classification_csv(const ClassificationReport& r) {
  std::ostringstream out;
  out << "canonical_vertices,n,abs_residual,pass\n";
  for (const auto& o : r.orbits)
    for (std::size_t k = 0; k < o.test.ns.size(); ++k)
      out << format_vertices(o.canonical) << ',' << o.test.ns[k] << ',' << shortest(o.test.residuals[k]) << ','
          << (o.test.pass ? "true" : "false") << '\n';
  return out.str();
}

std::string gauss_table_csv(std::int64_t max_n) {
  std::ostringstream out;
  out << "n,re,im,branch\n";
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const auto g = gauss_sum_direct(n);
    out << n << ',' << shortest(g.real()) << ',' << shortest(g.imag()) << ',' << gauss_sum_branch(n) << '\n';
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace polygauss::cli
