#include "polygauss/rational.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "polygauss/error.hpp"

namespace polygauss {

std::int64_t floor(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();
  auto q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace {

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  const std::string_view view(text);
  if (slash == std::string::npos) {
    if (!parse_int(view, num)) throw Error(ErrorCode::MalformedInput, "not a rational: '" + text + "'");
  } else {
    if (!parse_int(view.substr(0, slash), num) || !parse_int(view.substr(slash + 1), den))
      throw Error(ErrorCode::MalformedInput, "not a rational: '" + text + "'");
    if (den <= 0) throw Error(ErrorCode::MalformedInput, "denominator must be positive: '" + text + "'");
    if (std::gcd(num, den) != 1)
      throw Error(ErrorCode::MalformedInput, "fraction not in lowest terms: '" + text + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RationalVector RationalVector::from_integers(std::span<const std::int64_t> values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  for (auto v : values) c.emplace_back(v);
  return RationalVector(std::move(c));
}

bool RationalVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.denominator() == 1; });
}

std::vector<std::int64_t> RationalVector::to_integers() const {
  std::vector<std::int64_t> out;
  out.reserve(coords_.size());
  for (const auto& r : coords_) {
    if (r.denominator() != 1) throw Error(ErrorCode::InvariantViolation, "coordinate is not an integer");
    out.push_back(r.numerator());
  }
  return out;
}

std::vector<double> RationalVector::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& r : coords_) out.push_back(to_double(r));
  return out;
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  if (other.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  if (other.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Rational s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational squared_norm(const RationalVector& a) { return dot(a, a); }

std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << format_rational(v[i]);
  }
  return os << ')';
}

std::size_t rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().dim();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].numerator() == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].numerator() == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

int affine_dimension(std::span<const RationalVector> points) {
  if (points.empty()) return -1;
  std::vector<RationalVector> diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return static_cast<int>(rank(std::move(diffs)));
}

Rational determinant(std::vector<RationalVector> rows) {
  const std::size_t n = rows.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && rows[pivot][c].numerator() == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      std::swap(rows[c], rows[pivot]);
      det = -det;
    }
    det *= rows[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (rows[i][c].numerator() == 0) continue;
      const Rational f = rows[i][c] / rows[c][c];
      for (std::size_t k = c; k < n; ++k) rows[i][k] -= f * rows[c][k];
    }
  }
  return det;
}

}  // namespace polygauss
