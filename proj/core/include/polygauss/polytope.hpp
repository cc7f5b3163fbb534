#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polygauss/rational.hpp"

namespace polygauss {

/// Half-space <normal, x> <= offset. The normal is a primitive integer vector
/// pointing out of the polytope.
struct Facet {
  std::vector<std::int64_t> normal;
  Rational offset;

  /// <normal, x> - offset; positive means x violates the facet.
  Rational slack(const RationalVector& x) const;
};

/// A face of the polytope: its dimension, the polytope vertices it contains,
/// and the facets it lies on. The polytope itself is a face with no facets.
struct Face {
  int dim = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> facets;
};

enum class LocationKind { Outside, Interior, OnFace };

/// Where a point sits relative to a polytope. For OnFace, `face` is the
/// smallest face containing the point, so the point is in its relative
/// interior.
struct FaceLocation {
  LocationKind kind = LocationKind::Outside;
  std::size_t face = 0;
  int face_dim = -1;

  static FaceLocation outside() { return {}; }
  static FaceLocation interior(std::size_t face, int dim) { return {LocationKind::Interior, face, dim}; }
  static FaceLocation on_face(std::size_t face, int dim) { return {LocationKind::OnFace, face, dim}; }

  friend bool operator==(const FaceLocation&, const FaceLocation&) = default;
};

struct LatticePoint {
  std::vector<std::int64_t> point;
  FaceLocation location;
};

/// Full-dimensional convex polytope in Q^d, d in {1, 2, 3}, carrying both its
/// V- and H-representation and the complete face lattice. Immutable.
class Polytope {
 public:
  /// Hull of the given points. Points that are not vertices are dropped;
  /// the remaining vertices keep their input order.
  static Polytope build(std::span<const RationalVector> points);

  int dim() const { return dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t id) const { return faces_.at(id); }

  /// Face id of the 0-dimensional face at vertex `v`.
  std::size_t vertex_face(std::size_t v) const { return vertex_faces_.at(v); }
  /// Face id of the whole polytope.
  std::size_t body_face() const { return faces_.size() - 1; }
  std::vector<std::size_t> faces_of_dim(int d) const;
  /// Face id whose vertex set is exactly `vertices` (sorted), if any.
  std::optional<std::size_t> find_face(const std::vector<std::size_t>& vertices) const;

  bool is_lattice() const;
  const RationalVector& lower_corner() const { return lower_; }
  const RationalVector& upper_corner() const { return upper_; }

  /// Scale by a positive integer. Face ids and vertex order are preserved.
  Polytope dilated(std::int64_t n) const;

  FaceLocation classify(const RationalVector& x) const;
  std::vector<LatticePoint> lattice_points() const;
  Rational volume() const;

 private:
  Polytope() = default;
  FaceLocation locate_from_tight(const std::vector<std::size_t>& tight) const;
  void finish_bounds();

  int dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::vector<std::size_t> vertex_faces_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::map<std::vector<std::size_t>, std::size_t> face_index_;
  RationalVector lower_;
  RationalVector upper_;
};

Polytope build_polytope(std::span<const RationalVector> vertices);
Polytope dilate(const Polytope& p, std::int64_t n);
FaceLocation classify_point(const Polytope& p, const RationalVector& x);
/// Integer points of the closed polytope in lexicographic order.
std::vector<LatticePoint> lattice_points(const Polytope& p);
Rational volume(const Polytope& p);

/// Convenience for integer input.
Polytope polytope_from_integers(const std::vector<std::vector<std::int64_t>>& points);

}  // namespace polygauss
