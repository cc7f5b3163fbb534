#pragma once

// JSON and CSV renderings of library reports. Keys are emitted in a fixed
// order and doubles in shortest round-trip form, so equal inputs give
// byte-identical output and parse -> dump reproduces the text exactly.

#include <string>

#include <json.hpp>

#include "polygauss/classify.hpp"
#include "polygauss/polysum.hpp"
#include "polygauss/weyl.hpp"

namespace polygauss::cli {

using Json = nlohmann::ordered_json;

Json to_json(const GaussSumReport& r);
Json to_json(const MultiTilingReport& r);
Json to_json(const ClassificationReport& r);
/// Vertex, edge (d = 3) and volume data of a polytope.
Json angles_json(const Polytope& p);

/// One row per (orbit, n): canonical vertices, n, |residual|, pass.
std::string classification_csv(const ClassificationReport& r);
/// n, Re G, Im G, closed-form branch for n = 1..max_n.
std::string gauss_table_csv(std::int64_t max_n);

std::string format_vertices(const Tetrahedron& t);
std::string dump(const Json& j);

}  // namespace polygauss::cli
