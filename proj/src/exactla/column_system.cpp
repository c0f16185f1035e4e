#include "hessgkm/exactla/column_system.hpp"

#include "hessgkm/errors.hpp"

namespace hessgkm {

namespace {

RationalVector image_column(const SkeletalNilpotent& x, const RationalVector& g) {
  RationalVector out(g.size());
  for (const auto& [row, e] : x.entries()) {
    out[static_cast<std::size_t>(row - 1)] = e.coefficient * g[static_cast<std::size_t>(e.column - 1)];
  }
  return out;
}

}  // namespace

ColumnSystem column_system(const FlagMatrix& g, const SkeletalNilpotent& x,
                           const HessenbergFunction& h, int j) {
  const int n = g.size();
  if (x.size() != n || h.size() != n) throw InvalidArgument("column_system: dimension mismatch");
  if (j < 1 || j > n) throw InvalidArgument("column_system: column out of range");

  ColumnSystem sys;
  sys.column = j;
  const RationalVector image = image_column(x, g.column(j));
  sys.pivot_row = piv(image);
  if (sys.pivot_row == 0) return sys;
  const int l = sys.pivot_row;

  std::vector<bool> in_r(static_cast<std::size_t>(l + 1), false);
  for (int c = 1; c <= h(j); ++c) {
    const int p = g.pivots()(c);
    if (p <= l) {
      sys.pivot_columns.push_back(c);
      in_r[static_cast<std::size_t>(p)] = true;
    }
  }
  for (int r = 1; r <= l; ++r) {
    (in_r[static_cast<std::size_t>(r)] ? sys.pivot_rows : sys.dependent_rows).push_back(r);
  }

  auto zero_based = [](const std::vector<int>& v) {
    std::vector<std::size_t> out;
    out.reserve(v.size());
    for (int i : v) out.push_back(static_cast<std::size_t>(i - 1));
    return out;
  };
  const auto rr = zero_based(sys.pivot_rows);
  const auto dr = zero_based(sys.dependent_rows);
  const auto cc = zero_based(sys.pivot_columns);
  sys.pivot_block = g.matrix().submatrix(rr, cc);
  sys.dependent_block = g.matrix().submatrix(dr, cc);
  for (auto r : rr) sys.solution.push_back(image[r]);
  for (auto r : dr) sys.constraint.push_back(image[r]);
  return sys;
}

bool verify_constraint(const ColumnSystem& sys) {
  if (sys.image_is_zero()) return true;
  const RationalVector coeffs = inverse(sys.pivot_block) * sys.solution;
  const RationalVector lhs = sys.dependent_block.empty()
                                 ? RationalVector(sys.constraint.size())
                                 : sys.dependent_block * coeffs;
  return lhs == sys.constraint;
}

}  // namespace hessgkm
