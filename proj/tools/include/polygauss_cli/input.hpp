#pragma once

#include <stdexcept>
#include <string>

#include "polygauss/polytope.hpp"

namespace polygauss::cli {

/// Bad user input, tagged with the JSON path of the offending field
/// ("vertices[2][1]"), or "$" for the document as a whole.
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// {"dim": d, "vertices": [[c, ...], ...]} where each coordinate is an
/// integer or a "p/q" string in lowest terms.
Polytope parse_polytope_json(const std::string& text);

Polytope load_polytope_file(const std::string& path);

}  // namespace polygauss::cli
