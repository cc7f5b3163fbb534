#include "polygauss/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "polygauss/angles.hpp"
#include "polygauss/error.hpp"

namespace polygauss {

WeylElement::WeylElement(std::vector<int> permutation, std::vector<int> signs)
    : perm_(std::move(permutation)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw Error(ErrorCode::DimensionMismatch, "permutation vs signs");
  std::vector<int> seen(perm_.size(), 0);
  for (auto p : perm_) {
    if (p < 0 || p >= dim() || seen[p]++) throw Error(ErrorCode::DegenerateInput, "not a permutation");
  }
  for (auto s : signs_)
    if (s != 1 && s != -1) throw Error(ErrorCode::DegenerateInput, "signs must be +1 or -1");
}

WeylElement WeylElement::identity(int dim) {
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  return WeylElement(std::move(perm), std::vector<int>(dim, 1));
}

RationalVector WeylElement::apply(const RationalVector& x) const {
  if (static_cast<int>(x.dim()) != dim()) throw Error(ErrorCode::DimensionMismatch, "Weyl action");
  RationalVector out = RationalVector::zero(x.dim());
  for (int i = 0; i < dim(); ++i) out[i] = signs_[i] * x[perm_[i]];
  return out;
}

WeylElement WeylElement::compose(const WeylElement& inner) const {
  // this(inner(x))_i = s_i * inner(x)_{p_i} = s_i * t_{p_i} * x_{q_{p_i}}
  std::vector<int> perm(dim()), signs(dim());
  for (int i = 0; i < dim(); ++i) {
    perm[i] = inner.perm_[perm_[i]];
    signs[i] = signs_[i] * inner.signs_[perm_[i]];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

WeylElement WeylElement::inverse() const {
  // y_i = s_i x_{p_i}  =>  x_{p_i} = s_i y_i
  std::vector<int> perm(dim()), signs(dim());
  for (int i = 0; i < dim(); ++i) {
    perm[perm_[i]] = i;
    signs[perm_[i]] = signs_[i];
  }
  return WeylElement(std::move(perm), std::move(signs));
}

std::vector<WeylElement> weyl_elements(int dim) {
  if (dim < 1 || dim > 3) throw Error(ErrorCode::UnsupportedDimension, "Weyl group of dimension " + std::to_string(dim));
  std::vector<WeylElement> out;
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << dim); ++mask) {
      std::vector<int> signs(dim);
      for (int i = 0; i < dim; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
      out.emplace_back(perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Polytope transform(const Polytope& p, const WeylElement& w, const std::vector<std::int64_t>& shift) {
  const auto lambda = RationalVector::from_integers(shift);
  std::vector<RationalVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(w.apply(v) + lambda);
  return Polytope::build(pts);
}

namespace {

const std::vector<WeylElement>& cached_weyl(int d) {
  static const std::array<std::vector<WeylElement>, 3> groups{weyl_elements(1), weyl_elements(2), weyl_elements(3)};
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "Weyl group of dimension " + std::to_string(d));
  return groups[d - 1];
}

// Calls f(y) for every y = w x + lambda in the box, once per group element.
template <class F>
void for_each_group_image(const RationalVector& x, const RationalVector& lower, const RationalVector& upper, F&& f) {
  const int d = static_cast<int>(x.dim());
  for (const auto& w : cached_weyl(d)) {
    const auto wx = w.apply(x);
    std::vector<std::int64_t> lo(d), hi(d);
    bool empty = false;
    for (int i = 0; i < d; ++i) {
      lo[i] = ceil(lower[i] - wx[i]);
      hi[i] = floor(upper[i] - wx[i]);
      if (lo[i] > hi[i]) empty = true;
    }
    if (empty) continue;
    std::vector<std::int64_t> lam = lo;
    while (true) {
      f(wx + RationalVector::from_integers(lam));
      int i = d - 1;
      while (i >= 0 && lam[i] == hi[i]) {
        lam[i] = lo[i];
        --i;
      }
      if (i < 0) break;
      ++lam[i];
    }
  }
}

}  // namespace

std::vector<RationalVector> orbit_points_in_box(const RationalVector& x, const RationalVector& lower,
                                                const RationalVector& upper) {
  std::vector<RationalVector> out;
  for_each_group_image(x, lower, upper, [&](RationalVector y) { out.push_back(std::move(y)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double group_angle_sum(const Polytope& p, const RationalVector& x) {
  if (static_cast<int>(x.dim()) != p.dim()) throw Error(ErrorCode::DimensionMismatch, "sample vs polytope");
  const auto weights = face_weights(p);
  double total = 0.0;
  for_each_group_image(x, p.lower_corner(), p.upper_corner(), [&](const RationalVector& y) {
    const auto loc = p.classify(y);
    if (loc.kind != LocationKind::Outside) total += weights[loc.face];
  });
  return total;
}

MultiTilingReport multitiling_check(const Polytope& p, std::int64_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw Error(ErrorCode::DegenerateInput, "sample_count must be positive");
  const int d = p.dim();
  MultiTilingReport report;
  report.expected_multiplicity = Rational(static_cast<std::int64_t>(cached_weyl(d).size())) * p.volume();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(1, (kSampleDenominator - 1) / 2);
  while (report.samples_checked < sample_count) {
    std::vector<std::int64_t> k;
    while (static_cast<int>(k.size()) < d) {
      const auto c = coord(rng);
      if (std::find(k.begin(), k.end(), c) == k.end()) k.push_back(c);
    }
    std::sort(k.begin(), k.end());
    RationalVector x = RationalVector::zero(d);
    for (int i = 0; i < d; ++i) x[i] = Rational(k[i], kSampleDenominator);

    std::int64_t count = 0;
    bool on_boundary = false;
    for_each_group_image(x, p.lower_corner(), p.upper_corner(), [&](const RationalVector& y) {
      const auto loc = p.classify(y);
      if (loc.kind == LocationKind::Interior) ++count;
      else if (loc.kind == LocationKind::OnFace) on_boundary = true;
    });
    if (on_boundary) {
      ++report.boundary_resamples;
      continue;
    }
    ++report.samples_checked;
    if (Rational(count) != report.expected_multiplicity) report.witnesses.push_back({x, count});
  }
  report.is_multitiling = report.witnesses.empty();
  if (report.is_multitiling) report.multiplicity = report.expected_multiplicity.numerator();
  return report;
}

template <std::size_t D>
LatticeSimplex<D> canonical_form(const LatticeSimplex<D>& simplex) {
  static const std::vector<WeylElement> group = weyl_elements(static_cast<int>(D));
  LatticeSimplex<D> best{};
  bool have = false;
  for (const auto& origin : simplex) {
    for (const auto& w : group) {
      LatticeSimplex<D> img;
      for (std::size_t v = 0; v <= D; ++v) {
        std::array<std::int64_t, D> t;
        for (std::size_t i = 0; i < D; ++i) t[i] = simplex[v][i] - origin[i];
        img[v] = w.apply(t);
      }
      std::sort(img.begin(), img.end());
      if (!have || img < best) {
        best = img;
        have = true;
      }
    }
  }
  return best;
}

template LatticeSimplex<1> canonical_form<1>(const LatticeSimplex<1>&);
template LatticeSimplex<2> canonical_form<2>(const LatticeSimplex<2>&);
template LatticeSimplex<3> canonical_form<3>(const LatticeSimplex<3>&);

}  // namespace polygauss
