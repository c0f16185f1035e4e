#pragma once

// The three parameterized 4x4 matrices in normalized Schubert form used
// throughout the tests, with pivot permutations [3412], [4123] and [4321].

#include "hessgkm/exactla/rational_matrix.hpp"

namespace hessgkm::testing {

struct CellParams {
  mpq_class a11 = 2, a12 = 3, a13 = 5, a21 = -1, a22 = 7, a31 = 11;
};

inline RationalMatrix m1(const CellParams& p = {}) {
  return {{p.a11, p.a12, 1, 0}, {p.a21, p.a22, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
}

inline RationalMatrix m2(const CellParams& p = {}) {
  return {{p.a11, 1, 0, 0}, {p.a21, 0, 1, 0}, {p.a31, 0, 0, 1}, {1, 0, 0, 0}};
}

inline RationalMatrix m3(const CellParams& p = {}) {
  return {{p.a11, p.a12, p.a13, 1}, {p.a21, p.a22, 1, 0}, {p.a31, 1, 0, 0}, {1, 0, 0, 0}};
}

}  // namespace hessgkm::testing
