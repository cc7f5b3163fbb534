#include "polygauss/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polygauss/error.hpp"

namespace polygauss {

namespace {

using Vec3 = std::array<double, 3>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec3 to_vec3(const RationalVector& v) { return {to_double(v[0]), to_double(v[1]), to_double(v[2])}; }
Vec3 to_vec3(const std::vector<std::int64_t>& v) {
  return {static_cast<double>(v[0]), static_cast<double>(v[1]), static_cast<double>(v[2])};
}

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

RationalVector cross(const RationalVector& a, const RationalVector& b) {
  return RationalVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Interior dihedral angle between two facets given their outward normals.
double dihedral_from_outward_normals(const Vec3& n1, const Vec3& n2) {
  const double between = std::atan2(norm3(cross3(n1, n2)), dot3(n1, n2));
  return 0.5 - between / kTwoPi;
}

void require_dim3(const Polytope& p, const char* what) {
  if (p.dim() != 3) throw Error(ErrorCode::UnsupportedDimension, std::string(what) + " needs a 3-polytope");
}

// Vertices adjacent to `vertex` along edges of the polytope.
std::vector<std::size_t> neighbours(const Polytope& p, std::size_t vertex) {
  std::vector<std::size_t> out;
  for (auto e : p.faces_of_dim(1)) {
    const auto& ev = p.face(e).vertices;
    if (ev[0] == vertex) out.push_back(ev[1]);
    else if (ev[1] == vertex) out.push_back(ev[0]);
  }
  return out;
}

double planar_vertex_angle(const Polytope& p, std::size_t vertex) {
  const auto nb = neighbours(p, vertex);
  if (nb.size() != 2) throw Error(ErrorCode::InvariantViolation, "polygon vertex without two edges");
  const auto u = p.vertices()[nb[0]] - p.vertices()[vertex];
  const auto w = p.vertices()[nb[1]] - p.vertices()[vertex];
  const double c = to_double(u[0] * w[1] - u[1] * w[0]);
  const double d = to_double(dot(u, w));
  return std::atan2(std::abs(c), d) / kTwoPi;
}

}  // namespace

double simplicial_cone_solid_angle(std::span<const RationalVector, 3> g) {
  for (const auto& v : g)
    if (v.dim() != 3) throw Error(ErrorCode::UnsupportedDimension, "simplicial cones are 3-dimensional");
  const Rational det = determinant({g[0], g[1], g[2]});
  if (det.numerator() == 0) throw Error(ErrorCode::DegenerateCone, "generators are linearly dependent");
  const double la = std::sqrt(to_double(squared_norm(g[0])));
  const double lb = std::sqrt(to_double(squared_norm(g[1])));
  const double lc = std::sqrt(to_double(squared_norm(g[2])));
  const double num = la * lb * lc + to_double(dot(g[1], g[2])) * la + to_double(dot(g[2], g[0])) * lb +
                     to_double(dot(g[0], g[1])) * lc;
  return std::atan2(std::abs(to_double(det)), num) / kTwoPi;
}

double simplicial_cone_solid_angle(const RationalVector& apex, std::span<const RationalVector, 3> points) {
  const std::array<RationalVector, 3> g{points[0] - apex, points[1] - apex, points[2] - apex};
  return simplicial_cone_solid_angle(std::span<const RationalVector, 3>(g));
}

double external_solid_angle(std::span<const RationalVector, 4> t, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3) throw Error(ErrorCode::DegenerateInput, "bad vertex pair");
  int k = -1, l = -1;
  for (int m = 0; m < 4; ++m)
    if (m != i && m != j) (k < 0 ? k : l) = m;
  const auto ej = t[j] - t[i];
  const auto ek = t[k] - t[i];
  const auto el = t[l] - t[i];
  const Rational det = determinant({ej, ek, el});
  if (det.numerator() == 0) throw Error(ErrorCode::DegenerateCone, "tetrahedron is flat");
  const double nij = to_double(squared_norm(ej));
  const double nik = to_double(squared_norm(ek));
  const double nil = to_double(squared_norm(el));
  const double num = std::sqrt(nij * nik * nil) + to_double(dot(ek, el)) * std::sqrt(nij) -
                     to_double(dot(el, ej)) * std::sqrt(nik) - to_double(dot(ej, ek)) * std::sqrt(nil);
  return std::atan2(std::abs(to_double(det)), num) / kTwoPi;
}

double dihedral_angle(const Polytope& p, std::size_t edge_face) {
  require_dim3(p, "dihedral_angle");
  const auto& f = p.face(edge_face);
  if (f.dim != 1 || f.facets.size() != 2) throw Error(ErrorCode::NotAnEdge, "face " + std::to_string(edge_face));
  return dihedral_from_outward_normals(to_vec3(p.facets()[f.facets[0]].normal),
                                       to_vec3(p.facets()[f.facets[1]].normal));
}

double vertex_solid_angle(const Polytope& p, std::size_t vertex, std::size_t fan_start) {
  require_dim3(p, "vertex_solid_angle");
  const auto& apex = p.vertices().at(vertex);
  std::vector<RationalVector> gens;
  for (auto w : neighbours(p, vertex)) gens.push_back(p.vertices()[w] - apex);
  const std::size_t m = gens.size();
  if (m < 3) throw Error(ErrorCode::InvariantViolation, "vertex of a 3-polytope with fewer than 3 edges");

  // Cyclic order around an axis strictly inside the cone.
  Vec3 axis{0, 0, 0};
  std::vector<Vec3> dirs;
  for (const auto& g : gens) {
    auto d = to_vec3(g);
    const double len = norm3(d);
    for (auto& c : d) c /= len;
    dirs.push_back(d);
    for (int i = 0; i < 3; ++i) axis[i] += d[i];
  }
  const double alen = norm3(axis);
  for (auto& c : axis) c /= alen;
  Vec3 e1 = dirs[0];
  const double along = dot3(e1, axis);
  for (int i = 0; i < 3; ++i) e1[i] -= along * axis[i];
  const double e1len = norm3(e1);
  for (auto& c : e1) c /= e1len;
  const Vec3 e2 = cross3(axis, e1);
  std::vector<std::pair<double, std::size_t>> order;
  for (std::size_t k = 0; k < m; ++k) order.emplace_back(std::atan2(dot3(dirs[k], e2), dot3(dirs[k], e1)), k);
  std::sort(order.begin(), order.end());

  double total = 0.0;
  const std::size_t s = fan_start % m;
  for (std::size_t t = 1; t + 1 < m; ++t) {
    const std::array<RationalVector, 3> cone{gens[order[s].second], gens[order[(s + t) % m].second],
                                             gens[order[(s + t + 1) % m].second]};
    total += simplicial_cone_solid_angle(std::span<const RationalVector, 3>(cone));
  }
  return total;
}

double face_weight(const Polytope& p, const FaceLocation& where) {
  switch (where.kind) {
    case LocationKind::Outside: return 0.0;
    case LocationKind::Interior: return 1.0;
    case LocationKind::OnFace: break;
  }
  const int d = p.dim();
  if (where.face_dim == d) return 1.0;
  if (where.face_dim == d - 1) return 0.5;
  const auto& f = p.face(where.face);
  if (d == 3 && where.face_dim == 1) return dihedral_angle(p, where.face);
  if (where.face_dim == 0) {
    if (d == 2) return planar_vertex_angle(p, f.vertices.front());
    if (d == 3) return vertex_solid_angle(p, f.vertices.front());
  }
  throw Error(ErrorCode::UndefinedCase, "no weight rule for this face");
}

std::vector<double> face_weights(const Polytope& p) {
  std::vector<double> out;
  out.reserve(p.faces().size());
  for (std::size_t id = 0; id < p.faces().size(); ++id) {
    const int fd = p.face(id).dim;
    out.push_back(face_weight(p, fd == p.dim() ? FaceLocation::interior(id, fd) : FaceLocation::on_face(id, fd)));
  }
  return out;
}

double solid_angle(const Polytope& p, const RationalVector& x) { return face_weight(p, p.classify(x)); }

double TetrahedronAngles::gram_residual(int i) const {
  double s = 0.0;
  for (int j = 0; j < 4; ++j)
    if (j != i) s += dihedral[i][j];
  return solid[i] - 0.5 * s + 0.25;
}

double TetrahedronAngles::external_residual(int i, int j) const { return dihedral[i][j] - solid[i] - external[i][j]; }

double TetrahedronAngles::solid_sum() const { return solid[0] + solid[1] + solid[2] + solid[3]; }

double TetrahedronAngles::dihedral_sum() const {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) s += dihedral[i][j];
  return s;
}

TetrahedronAngles tetrahedron_angles(std::span<const RationalVector, 4> v) {
  for (const auto& p : v)
    if (p.dim() != 3 || !p.is_integral())
      throw Error(ErrorCode::DegenerateTetrahedron, "vertices must be integer points of Z^3");
  if (determinant({v[1] - v[0], v[2] - v[0], v[3] - v[0]}).numerator() == 0)
    throw Error(ErrorCode::DegenerateTetrahedron, "vertices are coplanar");

  TetrahedronAngles out;
  for (int i = 0; i < 4; ++i) {
    std::array<RationalVector, 3> others;
    int n = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) others[n++] = v[j];
    out.solid[i] = simplicial_cone_solid_angle(v[i], std::span<const RationalVector, 3>(others));
  }

  // Outward normal of the face opposite vertex `opp`.
  const auto outward = [&](int a, int b, int c, int opp) {
    auto n = cross(v[b] - v[a], v[c] - v[a]);
    if (dot(n, v[opp] - v[a]) > 0) n = -n;
    return to_vec3(n);
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      out.sq_lengths[i][j] = squared_norm(v[i] - v[j]).numerator();
      out.external[i][j] = external_solid_angle(v, i, j);
      if (j < i) continue;
      int k = -1, l = -1;
      for (int m = 0; m < 4; ++m)
        if (m != i && m != j) (k < 0 ? k : l) = m;
      // Faces (i,j,k) and (i,j,l) meet at edge ij.
      const double w = dihedral_from_outward_normals(outward(i, j, k, l), outward(i, j, l, k));
      out.dihedral[i][j] = w;
      out.dihedral[j][i] = w;
    }
  return out;
}

}  // namespace polygauss
