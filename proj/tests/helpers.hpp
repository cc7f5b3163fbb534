#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "oracles.hpp"
#include "polygauss/error.hpp"
#include "polygauss/polytope.hpp"

namespace testing_support {

inline polygauss::RationalVector rv(std::vector<std::int64_t> c) { return polygauss::RationalVector::from_integers(c); }

inline polygauss::Polytope poly(const oracle::Tet& t) {
  std::vector<std::vector<std::int64_t>> pts;
  for (const auto& v : t) pts.push_back({v[0], v[1], v[2]});
  return polygauss::polytope_from_integers(pts);
}

inline std::array<polygauss::RationalVector, 4> verts(const oracle::Tet& t) {
  return {rv({t[0][0], t[0][1], t[0][2]}), rv({t[1][0], t[1][1], t[1][2]}), rv({t[2][0], t[2][1], t[2][2]}),
          rv({t[3][0], t[3][1], t[3][2]})};
}

inline double dist(std::complex<double> a, oracle::CLD b) {
  return static_cast<double>(std::abs(oracle::CLD(a.real(), a.imag()) - b));
}

template <class F>
std::optional<polygauss::ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const polygauss::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline const oracle::Tet kFundamental{{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}}};
inline const oracle::Tet kStandard{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
// Unimodular, multi-tiles with multiplicity 8, yet not congruent to the
// fundamental tetrahedron (squared edges 1,1,2,2,3,6).
inline const oracle::Tet kSecondTiler{{{0, 0, 0}, {1, 0, 0}, {0, 0, -1}, {1, 1, 1}}};

}  // namespace testing_support
