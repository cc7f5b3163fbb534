#include "polygauss_cli/input.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polygauss/error.hpp"

namespace polygauss::cli {

namespace {

using nlohmann::json;

std::string at_index(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Rational parse_coordinate(const json& c, const std::string& path) {
  if (c.is_number_integer()) return Rational(c.get<std::int64_t>());
  if (c.is_string()) {
    try {
      return parse_rational(c.get<std::string>());
    } catch (const Error& e) {
      throw InputError(path, e.what());
    }
  }
  throw InputError(path, "expected an integer or a \"p/q\" string");
}

}  // namespace

Polytope parse_polytope_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("$", "expected an object");

  if (!doc.contains("dim")) throw InputError("dim", "missing");
  const auto& dim_field = doc["dim"];
  if (!dim_field.is_number_integer()) throw InputError("dim", "expected an integer");
  const auto dim = dim_field.get<std::int64_t>();
  if (dim < 1 || dim > 3) throw InputError("dim", "must be 1, 2 or 3, got " + std::to_string(dim));

  if (!doc.contains("vertices")) throw InputError("vertices", "missing");
  const auto& verts = doc["vertices"];
  if (!verts.is_array()) throw InputError("vertices", "expected an array");
  if (verts.empty()) throw InputError("vertices", "empty");

  std::vector<RationalVector> points;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto path = at_index("vertices", i);
    const auto& v = verts[i];
    if (!v.is_array()) throw InputError(path, "expected an array of coordinates");
    if (v.size() != static_cast<std::size_t>(dim))
      throw InputError(path, "has " + std::to_string(v.size()) + " coordinates, dim is " + std::to_string(dim));
    std::vector<Rational> coords;
    for (std::size_t c = 0; c < v.size(); ++c) coords.push_back(parse_coordinate(v[c], at_index(path, c)));
    points.emplace_back(std::move(coords));
  }
  try {
    return Polytope::build(points);
  } catch (const Error& e) {
    if (e.is_internal()) throw;
    throw InputError("vertices", e.what());
  }
}

Polytope load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("$", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_polytope_json(buf.str());
  } catch (const InputError& e) {
    throw InputError(e.field(), std::string(e.what()).substr(e.field().size() + 2) + " (in " + path + ")");
  }
}

}  // namespace polygauss::cli
