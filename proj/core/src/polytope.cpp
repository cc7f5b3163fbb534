#include "polygauss/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polygauss/error.hpp"

namespace polygauss {

namespace {

// Scales a nonzero rational vector to the primitive integer vector with the
// same direction.
std::vector<std::int64_t> primitive_direction(const RationalVector& v) {
  std::int64_t l = 1;
  for (const auto& c : v.coords()) l = std::lcm(l, c.denominator());
  std::vector<std::int64_t> out;
  out.reserve(v.dim());
  std::int64_t g = 0;
  for (const auto& c : v.coords()) {
    const auto k = c.numerator() * (l / c.denominator());
    out.push_back(k);
    g = std::gcd(g, k);
  }
  if (g == 0) return {};
  for (auto& k : out) k /= g;
  return out;
}

// A vector orthogonal to the affine span of `pts` (exactly dim - 1 points
// after the base point), or the zero vector if they are dependent.
RationalVector hyperplane_normal(const std::vector<const RationalVector*>& pts, int dim) {
  switch (dim) {
    case 1:
      return RationalVector{Rational(1)};
    case 2: {
      const auto e = *pts[1] - *pts[0];
      return RationalVector{-e[1], e[0]};
    }
    case 3: {
      const auto a = *pts[1] - *pts[0];
      const auto b = *pts[2] - *pts[0];
      return RationalVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    }
    default:
      throw Error(ErrorCode::UnsupportedDimension, "dimension " + std::to_string(dim));
  }
}

Rational dot_int(const std::vector<std::int64_t>& a, const RationalVector& x) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

// Calls f on every k-subset of {0..n-1}, as a sorted index vector.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Rational Facet::slack(const RationalVector& x) const { return dot_int(normal, x) - offset; }

Polytope Polytope::build(std::span<const RationalVector> input) {
  if (input.empty()) throw Error(ErrorCode::DegenerateInput, "no points");
  const int d = static_cast<int>(input.front().dim());
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "dimension " + std::to_string(d));
  std::vector<RationalVector> pts;
  for (const auto& p : input) {
    if (static_cast<int>(p.dim()) != d) throw Error(ErrorCode::DimensionMismatch, "mixed point dimensions");
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  if (affine_dimension(pts) < d)
    throw Error(ErrorCode::DegenerateInput, "points do not span dimension " + std::to_string(d));

  // Brute-force facet search over d-subsets; fine for the small vertex
  // counts this library is meant for.
  std::vector<Facet> facets;
  for_each_subset(pts.size(), static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& idx) {
    std::vector<const RationalVector*> sub;
    for (auto i : idx) sub.push_back(&pts[i]);
    auto normal = primitive_direction(hyperplane_normal(sub, d));
    if (normal.empty()) return;
    Rational offset = dot_int(normal, *sub[0]);
    bool any_pos = false, any_neg = false;
    for (const auto& p : pts) {
      const auto s = dot_int(normal, p) - offset;
      if (s > 0) any_pos = true;
      if (s < 0) any_neg = true;
    }
    if (any_pos && any_neg) return;
    if (any_pos) {
      for (auto& c : normal) c = -c;
      offset = -offset;
    }
    for (const auto& f : facets)
      if (f.normal == normal && f.offset == offset) return;
    facets.push_back({std::move(normal), offset});
  });

  // A point is a vertex iff its tight facet normals span R^d.
  std::vector<RationalVector> vertices;
  for (const auto& p : pts) {
    std::vector<RationalVector> normals;
    for (const auto& f : facets)
      if (f.slack(p).numerator() == 0) normals.push_back(RationalVector::from_integers(f.normal));
    if (rank(std::move(normals)) == static_cast<std::size_t>(d)) vertices.push_back(p);
  }

  Polytope poly;
  poly.dim_ = d;
  poly.vertices_ = std::move(vertices);
  poly.facets_ = std::move(facets);

  for (const auto& f : poly.facets_) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < poly.vertices_.size(); ++v)
      if (f.slack(poly.vertices_[v]).numerator() == 0) vs.push_back(v);
    poly.facet_vertices_.push_back(std::move(vs));
  }

  // Faces are the intersections of facets; close the facet family under
  // pairwise intersection.
  std::set<std::vector<std::size_t>> sets(poly.facet_vertices_.begin(), poly.facet_vertices_.end());
  for (std::size_t v = 0; v < poly.vertices_.size(); ++v) sets.insert({v});
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<std::size_t>> current(sets.begin(), sets.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        auto s = intersect(current[i], current[j]);
        if (!s.empty() && sets.insert(std::move(s)).second) grew = true;
      }
  }
  std::vector<std::size_t> all(poly.vertices_.size());
  std::iota(all.begin(), all.end(), 0);
  sets.insert(all);

  for (const auto& vs : sets) {
    Face face;
    face.vertices = vs;
    std::vector<RationalVector> vp;
    for (auto v : vs) vp.push_back(poly.vertices_[v]);
    face.dim = affine_dimension(vp);
    if (vs != all)
      for (std::size_t f = 0; f < poly.facet_vertices_.size(); ++f)
        if (std::includes(poly.facet_vertices_[f].begin(), poly.facet_vertices_[f].end(), vs.begin(), vs.end()))
          face.facets.push_back(f);
    poly.faces_.push_back(std::move(face));
  }
  // Order by dimension then vertex set; the body ends up last.
  std::stable_sort(poly.faces_.begin(), poly.faces_.end(),
                   [](const Face& a, const Face& b) { return a.dim < b.dim; });
  for (std::size_t id = 0; id < poly.faces_.size(); ++id) poly.face_index_[poly.faces_[id].vertices] = id;
  for (std::size_t v = 0; v < poly.vertices_.size(); ++v) poly.vertex_faces_.push_back(poly.face_index_.at({v}));
  if (poly.faces_.back().dim != d || poly.faces_.back().vertices != all)
    throw Error(ErrorCode::InvariantViolation, "face lattice does not end with the body");

  poly.finish_bounds();
  return poly;
}

void Polytope::finish_bounds() {
  lower_ = vertices_.front();
  upper_ = vertices_.front();
  for (const auto& v : vertices_)
    for (int i = 0; i < dim_; ++i) {
      lower_[i] = std::min(lower_[i], v[i]);
      upper_[i] = std::max(upper_[i], v[i]);
    }
}

std::vector<std::size_t> Polytope::faces_of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < faces_.size(); ++id)
    if (faces_[id].dim == d) out.push_back(id);
  return out;
}

std::optional<std::size_t> Polytope::find_face(const std::vector<std::size_t>& vertices) const {
  const auto it = face_index_.find(vertices);
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const RationalVector& v) { return v.is_integral(); });
}

Polytope Polytope::dilated(std::int64_t n) const {
  if (n < 1) throw Error(ErrorCode::DegenerateInput, "dilation factor must be positive");
  Polytope out = *this;
  for (auto& v : out.vertices_) v *= Rational(n);
  for (auto& f : out.facets_) f.offset *= n;
  out.finish_bounds();
  return out;
}

FaceLocation Polytope::locate_from_tight(const std::vector<std::size_t>& tight) const {
  if (tight.empty()) return FaceLocation::interior(body_face(), dim_);
  auto vs = facet_vertices_[tight.front()];
  for (std::size_t i = 1; i < tight.size(); ++i) vs = intersect(vs, facet_vertices_[tight[i]]);
  const auto id = find_face(vs);
  if (!id) throw Error(ErrorCode::InvariantViolation, "tight facets do not meet in a face");
  return FaceLocation::on_face(*id, faces_[*id].dim);
}

FaceLocation Polytope::classify(const RationalVector& x) const {
  if (static_cast<int>(x.dim()) != dim_) throw Error(ErrorCode::DimensionMismatch, "point vs polytope dimension");
  std::vector<std::size_t> tight;
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    const auto s = facets_[f].slack(x);
    if (s > 0) return FaceLocation::outside();
    if (s.numerator() == 0) tight.push_back(f);
  }
  return locate_from_tight(tight);
}

std::vector<LatticePoint> Polytope::lattice_points() const {
  // Integer fast path: <a, x> * den(b) against num(b).
  struct Row {
    std::vector<std::int64_t> a;
    std::int64_t num, den;
  };
  std::vector<Row> rows;
  for (const auto& f : facets_) rows.push_back({f.normal, f.offset.numerator(), f.offset.denominator()});

  std::vector<std::int64_t> lo(dim_), hi(dim_);
  for (int i = 0; i < dim_; ++i) {
    lo[i] = ceil(lower_[i]);
    hi[i] = floor(upper_[i]);
  }
  std::vector<LatticePoint> out;
  std::vector<std::int64_t> x = lo;
  std::vector<std::size_t> tight;
  const auto visit = [&] {
    tight.clear();
    for (std::size_t f = 0; f < rows.size(); ++f) {
      std::int64_t s = 0;
      for (int i = 0; i < dim_; ++i) s += rows[f].a[i] * x[i];
      s = s * rows[f].den - rows[f].num;
      if (s > 0) return;
      if (s == 0) tight.push_back(f);
    }
    out.push_back({x, locate_from_tight(tight)});
  };
  if (std::any_of(lo.begin(), lo.end(), [&, i = 0](std::int64_t l) mutable { return l > hi[i++]; })) return out;
  // Odometer over the box, last coordinate fastest, giving lexicographic order.
  while (true) {
    visit();
    int i = dim_ - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

Rational Polytope::volume() const {
  const auto& p0 = vertices_.front();
  if (dim_ == 1) return upper_[0] - lower_[0];
  Rational total(0);
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    const auto& fv = facet_vertices_[f];
    if (std::binary_search(fv.begin(), fv.end(), std::size_t{0})) continue;
    if (dim_ == 2) {
      const auto det = determinant({vertices_[fv[0]] - p0, vertices_[fv[1]] - p0});
      total += abs(det) / 2;
      continue;
    }
    // Fan the facet from its first vertex over the facet's edges.
    const std::size_t q = fv.front();
    for (auto e : faces_of_dim(1)) {
      const auto& ev = faces_[e].vertices;
      if (!std::includes(fv.begin(), fv.end(), ev.begin(), ev.end())) continue;
      if (ev[0] == q || ev[1] == q) continue;
      const auto det =
          determinant({vertices_[q] - p0, vertices_[ev[0]] - p0, vertices_[ev[1]] - p0});
      total += abs(det) / 6;
    }
  }
  return total;
}

Polytope build_polytope(std::span<const RationalVector> vertices) { return Polytope::build(vertices); }
Polytope dilate(const Polytope& p, std::int64_t n) { return p.dilated(n); }
FaceLocation classify_point(const Polytope& p, const RationalVector& x) { return p.classify(x); }
std::vector<LatticePoint> lattice_points(const Polytope& p) { return p.lattice_points(); }
Rational volume(const Polytope& p) { return p.volume(); }

Polytope polytope_from_integers(const std::vector<std::vector<std::int64_t>>& points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(RationalVector::from_integers(p));
  return Polytope::build(pts);
}

}  // namespace polygauss
