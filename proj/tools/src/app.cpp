#include "polygauss_cli/app.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "polygauss/classify.hpp"
#include "polygauss/error.hpp"
#include "polygauss/polysum.hpp"
#include "polygauss/weyl.hpp"
#include "polygauss_cli/config.hpp"
#include "polygauss_cli/input.hpp"
#include "polygauss_cli/report.hpp"

namespace polygauss::cli {

namespace {

std::ostream& full(std::ostream& os) { return os << std::setprecision(17); }

void print_sum(std::ostream& out, const GaussSumReport& r) {
  full(out) << "G_P(" << r.n << ") = " << r.value.real() << " + " << r.value.imag() << "i  [" << to_string(r.route)
            << ", " << r.point_count << " points]\n"
            << "residual = " << r.residual.real() << " + " << r.residual.imag() << "i  (|r| = " << std::abs(r.residual)
            << ")\n";
}

void print_tiling(std::ostream& out, const MultiTilingReport& r) {
  out << (r.is_multitiling ? "multi-tiles" : "does not multi-tile") << " (expected multiplicity "
      << format_rational(r.expected_multiplicity) << ", " << r.samples_checked << " samples, " << r.boundary_resamples
      << " boundary redraws)\n";
  for (const auto& w : r.witnesses) out << "  witness " << w.sample << " covered " << w.observed << " times\n";
}

void print_classification(std::ostream& out, const ClassificationReport& r) {
  full(out) << "bound " << r.bound << ": " << r.candidates_scanned << " unimodular triples, " << r.distinct_orbits
            << " orbits, " << r.passing_orbits.size() << " passing\n";
  const auto fund = canonical_form<3>(fundamental_tetrahedron());
  for (std::size_t i = 0; i < r.passing_orbits.size(); ++i) {
    const auto& o = r.passing_orbits[i];
    out << "  " << format_vertices(o.canonical) << "  max|r| = "
        << *std::max_element(o.test.residuals.begin(), o.test.residuals.end())
        << (o.canonical != fund                               ? "  (not the fundamental orbit)"
            : r.weyl_equivalent_without_translation[i] ? ""
                                                        : "  (needs a translation)")
        << '\n';
  }
  if (r.min_failing_residual) out << "closest rejected orbit misses by " << *r.min_failing_residual << '\n';
  out << "theorem " << (r.theorem_confirmed ? "confirmed" : "NOT confirmed") << '\n';
}

void print_angles(std::ostream& out, const Json& j) {
  full(out) << "volume " << (j["volume"].is_string() ? j["volume"].get<std::string>() : j["volume"].dump()) << '\n';
  for (const auto& v : j["vertices"]) out << "vertex " << v["vertex"].dump() << "  " << v["angle"].get<double>() << '\n';
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) out << "edge " << e["vertices"].dump() << "  " << e["dihedral"].get<double>() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* threads_env) {
  CLI::App app{"Polyhedral Gauss sums, solid angles and multi-tilings of lattice polytopes", "polygauss"};
  app.require_subcommand(1);

  RunConfig config;
  std::string polytope_path;
  std::int64_t n = 1;
  std::string route_name = "direct";
  bool json = false;

  auto* sum = app.add_subcommand("sum", "Evaluate G_P(n) by one route");
  sum->add_option("--polytope", polytope_path, "Polytope JSON file")->required();
  sum->add_option("--n", n, "Dilation / modulus")->required()->check(CLI::PositiveNumber);
  sum->add_option("--route", route_name, "direct, folded or tetra")
      ->check(CLI::IsMember({"direct", "folded", "tetra"}));
  sum->add_flag("--json", json);

  std::int64_t samples = 200;
  auto* tiling = app.add_subcommand("check-tiling", "Sample the G-covering multiplicity of P");
  tiling->add_option("--polytope", polytope_path, "Polytope JSON file")->required();
  tiling->add_option("--samples", samples)->check(CLI::PositiveNumber);
  tiling->add_option("--seed", config.seed);
  tiling->add_flag("--json", json);

  int bound = 2;
  std::string csv_path;
  double classify_tol = kClassificationTolerance;
  auto* classify = app.add_subcommand("classify", "Search volume-1/6 tetrahedra for the Gauss relations");
  classify->add_option("--bound", bound, "Coordinate bound B")->check(CLI::PositiveNumber);
  classify->add_option("--tol", classify_tol, "Pass threshold on |residual|")->check(CLI::PositiveNumber);
  classify->add_option("--threads", config.thread_count, "Worker threads, 0 for all cores");
  classify->add_option("--csv", csv_path, "Also write per-orbit residuals to this CSV file");
  classify->add_flag("--json", json);

  auto* angles = app.add_subcommand("angles", "Vertex and edge angles of a polytope");
  angles->add_option("--polytope", polytope_path, "Polytope JSON file")->required();
  angles->add_flag("--json", json);

  std::int64_t max_n = 20;
  auto* table = app.add_subcommand("gauss-table", "CSV of G(n) for n = 1..max");
  table->add_option("--max", max_n)->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  if (json) config.output = OutputFormat::Json;

  try {
    config.thread_count = effective_threads(config.thread_count, threads_env);
    if (*sum) {
      const auto p = load_polytope_file(polytope_path);
      const auto r = polyhedral_gauss_sum(p, n, parse_route(route_name));
      if (config.output == OutputFormat::Json) out << dump(to_json(r)) << '\n';
      else print_sum(out, r);
    } else if (*tiling) {
      const auto p = load_polytope_file(polytope_path);
      const auto r = multitiling_check(p, samples, config.seed);
      if (config.output == OutputFormat::Json) out << dump(to_json(r)) << '\n';
      else print_tiling(out, r);
    } else if (*classify) {
      config.tolerance = classify_tol;
      const auto r = run_theorem2_experiment(bound, config.tolerance, config.thread_count);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw InputError("--csv", "cannot write '" + csv_path + "'");
        csv << classification_csv(r);
      }
      if (config.output == OutputFormat::Json) out << dump(to_json(r)) << '\n';
      else print_classification(out, r);
    } else if (*angles) {
      const auto j = angles_json(load_polytope_file(polytope_path));
      if (config.output == OutputFormat::Json) out << dump(j) << '\n';
      else print_angles(out, j);
    } else if (*table) {
      out << gauss_table_csv(max_n);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? kInternal : kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace polygauss::cli
