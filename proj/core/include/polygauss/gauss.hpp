#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace polygauss {

using Complex = std::complex<double>;

/// e(k/m) = exp(2 pi i k/m), with k reduced mod m before any trig.
Complex unit_root(std::int64_t k, std::int64_t m);

/// Jacobi symbol (a/b) for odd b >= 1. Throws EvenModulus otherwise.
int jacobi_symbol(std::int64_t a, std::int64_t b);

/// 1 if m = 1 mod 4, i if m = 3 mod 4. Throws EvenInput for even m.
Complex epsilon(std::int64_t m);

/// G(n) = sum_{k mod n} e(k^2/n), summed term by term.
Complex gauss_sum_direct(std::int64_t n);

/// Gauss's evaluation: (1+i)sqrt(n), sqrt(n), 0, i sqrt(n) for n = 0,1,2,3 mod 4.
Complex gauss_sum_closed(std::int64_t n);

/// Label of the closed-form branch used for n, e.g. "(1+i)sqrt(n)".
std::string_view gauss_sum_branch(std::int64_t n);

/// G(a,b) = sum_{k=0}^{b-1} e(a k^2/b), summed term by term.
Complex quad_gauss_direct(std::int64_t a, std::int64_t b);

/// G(a,b) via G(a,b) = g G(a/g, b/g) with g = gcd(a,b) and the coprime
/// evaluation in terms of epsilon and the Jacobi symbol.
Complex quad_gauss_closed(std::int64_t a, std::int64_t b);

}  // namespace polygauss
