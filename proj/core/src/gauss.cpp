#include "polygauss/gauss.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "polygauss/compensated_sum.hpp"
#include "polygauss/error.hpp"

namespace polygauss {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw Error(ErrorCode::DegenerateInput, std::string(what) + " must be positive");
}

}  // namespace

Complex unit_root(std::int64_t k, std::int64_t m) {
  const auto r = mod(k, m);
  if (r == 0) return {1.0, 0.0};
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
  return {std::cos(theta), std::sin(theta)};
}

int jacobi_symbol(std::int64_t a, std::int64_t b) {
  if (b < 1 || b % 2 == 0) throw Error(ErrorCode::EvenModulus, "Jacobi symbol needs an odd positive modulus");
  a = mod(a, b);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const auto r = b % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, b);
    if (a % 4 == 3 && b % 4 == 3) result = -result;
    a %= b;
  }
  return b == 1 ? result : 0;
}

Complex epsilon(std::int64_t m) {
  if (m % 2 == 0) throw Error(ErrorCode::EvenInput, "epsilon needs an odd argument");
  return mod(m, 4) == 1 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
}

Complex gauss_sum_direct(std::int64_t n) { return quad_gauss_direct(1, n); }

Complex gauss_sum_closed(std::int64_t n) {
  require_positive(n, "n");
  const double r = std::sqrt(static_cast<double>(n));
  switch (n % 4) {
    case 0: return {r, r};
    case 1: return {r, 0.0};
    case 2: return {0.0, 0.0};
    default: return {0.0, r};
  }
}

std::string_view gauss_sum_branch(std::int64_t n) {
  require_positive(n, "n");
  switch (n % 4) {
    case 0: return "(1+i)sqrt(n)";
    case 1: return "sqrt(n)";
    case 2: return "0";
    default: return "i*sqrt(n)";
  }
}

Complex quad_gauss_direct(std::int64_t a, std::int64_t b) {
  require_positive(b, "b");
  const auto ar = mod(a, b);
  ComplexCompensatedSum sum;
  for (std::int64_t k = 0; k < b; ++k) {
    // Both factors are below b, so this stays exact for b < 2^31.
    sum.add(unit_root(ar * mod(k * k, b) % b, b));
  }
  return sum.value();
}

Complex quad_gauss_closed(std::int64_t a, std::int64_t b) {
  require_positive(b, "b");
  a = mod(a, b);
  const auto g = std::gcd(a, b);  // gcd(0, b) = b
  const auto ar = a / g;
  const auto br = b / g;
  const double scale = static_cast<double>(g);
  if (br == 1) return {scale, 0.0};
  const double root = std::sqrt(static_cast<double>(br));
  if (br % 4 == 2) return {0.0, 0.0};
  if (br % 2 == 1) return scale * epsilon(br) * root * static_cast<double>(jacobi_symbol(ar, br));
  if (ar % 2 == 0) throw Error(ErrorCode::UndefinedCase, "4 | b with even a after gcd reduction");
  return scale * Complex(1.0, 1.0) * std::conj(epsilon(ar)) * root * static_cast<double>(jacobi_symbol(br, ar));
}

}  // namespace polygauss
