#pragma once

#include <vector>

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/skeletal.hpp"
#include "hessgkm/exactla/flag.hpp"

namespace hessgkm {

/// Block decomposition of the span system <g_1 .. g_{h(j)} | X g_j>.
///
/// C lists the columns (among the first h(j)) whose pivots lie in rows
/// 1..l with l = piv(X g_j); R lists those pivot rows. Both are kept in
/// increasing order. A = g[R, C], B = g[{1..l} \ R, C], v = (X g_j)[R] and
/// v' = (X g_j)[{1..l} \ R]. The system is solvable iff B A^{-1} v = v'.
struct ColumnSystem {
  int column = 0;
  int pivot_row = 0;               ///< l; 0 when X g_j = 0
  RationalMatrix pivot_block;      ///< A, |R| x |R|
  RationalMatrix dependent_block;  ///< B, (l - |R|) x |R|
  RationalVector solution;         ///< v
  RationalVector constraint;       ///< v'
  std::vector<int> pivot_rows;     ///< R
  std::vector<int> pivot_columns;  ///< C
  std::vector<int> dependent_rows; ///< {1..l} \ R

  bool image_is_zero() const { return pivot_row == 0; }
};

ColumnSystem column_system(const FlagMatrix& g, const SkeletalNilpotent& x,
                           const HessenbergFunction& h, int j);

/// B A^{-1} v == v'; vacuously true for an empty system.
bool verify_constraint(const ColumnSystem& sys);

}  // namespace hessgkm
