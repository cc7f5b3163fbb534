#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "polygauss/polytope.hpp"
#include "polygauss/rational.hpp"

namespace polygauss {

/// Signed permutation of coordinates: (w x)_i = sign_i * x_{perm_i}.
/// These are the elements of the hyperoctahedral group W of type B_d.
class WeylElement {
 public:
  WeylElement(std::vector<int> permutation, std::vector<int> signs);
  static WeylElement identity(int dim);

  int dim() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& permutation() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  RationalVector apply(const RationalVector& x) const;

  template <class T, std::size_t D>
  std::array<T, D> apply(const std::array<T, D>& x) const {
    std::array<T, D> out{};
    for (std::size_t i = 0; i < D; ++i) out[i] = signs_[i] * x[perm_[i]];
    return out;
  }

  /// (*this) o inner, i.e. x -> this(inner(x)).
  WeylElement compose(const WeylElement& inner) const;
  WeylElement inverse() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// All 2^d d! elements, identity first. d in {1, 2, 3}.
std::vector<WeylElement> weyl_elements(int dim);

/// Image of a polytope under x -> w x + shift.
Polytope transform(const Polytope& p, const WeylElement& w, const std::vector<std::int64_t>& shift);

/// Distinct points w x + lambda (w in W, lambda in Z^d) lying in the closed
/// box [lower, upper], sorted lexicographically.
std::vector<RationalVector> orbit_points_in_box(const RationalVector& x, const RationalVector& lower,
                                                const RationalVector& upper);

/// sum over g in G of w_P(g x). Group elements with g x outside the bounding
/// box of P contribute nothing, so the sum is finite.
double group_angle_sum(const Polytope& p, const RationalVector& x);

struct TilingWitness {
  RationalVector sample;
  std::int64_t observed = 0;
};

struct MultiTilingReport {
  bool is_multitiling = false;
  std::optional<std::int64_t> multiplicity;
  /// |W| vol(P), the only value a multi-tiling can have.
  Rational expected_multiplicity;
  std::int64_t samples_checked = 0;
  /// Draws discarded because some orbit point fell on the boundary of P.
  std::int64_t boundary_resamples = 0;
  std::vector<TilingWitness> witnesses;
};

inline constexpr std::int64_t kSampleDenominator = 10007;

/// Sampled test of sum_{g in G} 1_P(g x) = |W| vol(P) at points of the open
/// fundamental domain {0 < x_1 < ... < x_d < 1/2} with denominator
/// kSampleDenominator. A witness refutes multi-tiling; acceptance is
/// probabilistic.
MultiTilingReport multitiling_check(const Polytope& p, std::int64_t sample_count, std::uint64_t seed);

/// Lattice simplex in Z^D as D+1 vertices.
template <std::size_t D>
using LatticeSimplex = std::array<std::array<std::int64_t, D>, D + 1>;

/// Lexicographically least sorted vertex list over all images w(T - v)
/// with v a vertex of T and w in W. Two lattice simplices are equivalent under
/// G = W x Z^D iff their canonical forms agree.
template <std::size_t D>
LatticeSimplex<D> canonical_form(const LatticeSimplex<D>& simplex);

extern template LatticeSimplex<1> canonical_form<1>(const LatticeSimplex<1>&);
extern template LatticeSimplex<2> canonical_form<2>(const LatticeSimplex<2>&);
extern template LatticeSimplex<3> canonical_form<3>(const LatticeSimplex<3>&);

template <std::size_t D>
Polytope simplex_polytope(const LatticeSimplex<D>& simplex) {
  std::vector<std::vector<std::int64_t>> pts;
  for (const auto& v : simplex) pts.emplace_back(v.begin(), v.end());
  return polytope_from_integers(pts);
}

}  // namespace polygauss
