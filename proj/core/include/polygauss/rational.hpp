#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace polygauss {

// Compare against Rational values or numerator(), never bare integers: with
// C++20 rewritten comparisons, boost::rational's mixed "r == int" recurses
// into itself (seen with Boost 1.74).
/// Exact rational in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);
double to_double(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws Error(MalformedInput) on anything else,
/// including fractions not in lowest terms.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

/// A point or vector of Q^d.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalVector zero(std::size_t dim) { return RationalVector(std::vector<Rational>(dim)); }
  static RationalVector from_integers(std::span<const std::int64_t> values);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_integral() const;
  /// Requires is_integral().
  std::vector<std::int64_t> to_integers() const;
  std::vector<double> to_doubles() const;

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
  friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }

  friend bool operator==(const RationalVector& a, const RationalVector& b) = default;
  /// Lexicographic.
  friend bool operator<(const RationalVector& a, const RationalVector& b);

 private:
  std::vector<Rational> coords_;
};

Rational dot(const RationalVector& a, const RationalVector& b);
Rational squared_norm(const RationalVector& a);

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

/// Rank of a set of vectors, exact Gaussian elimination.
std::size_t rank(std::vector<RationalVector> rows);

/// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_dimension(std::span<const RationalVector> points);

/// Determinant of a square matrix given by rows.
Rational determinant(std::vector<RationalVector> rows);

}  // namespace polygauss
