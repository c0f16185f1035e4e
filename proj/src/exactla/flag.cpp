#include "hessgkm/exactla/flag.hpp"

#include <set>

#include "hessgkm/errors.hpp"

namespace hessgkm {

FlagMatrix normalize_schubert(const RationalMatrix& g) {
  if (!g.is_square()) throw SingularMatrix("flag matrix must be square");
  const std::size_t n = g.rows();
  RationalMatrix m = g;
  std::vector<int> pivots(n);
  for (std::size_t c = 0; c < n; ++c) {
    const int p = piv(m.column(c));
    if (p == 0) throw SingularMatrix("matrix is singular (column " + std::to_string(c + 1) + ")");
    const std::size_t pr = static_cast<std::size_t>(p - 1);
    const mpq_class lead = m(pr, c);
    if (lead != 1) {
      for (std::size_t r = 0; r < n; ++r) m(r, c) /= lead;
    }
    // Clear the pivot row to the right; this is right multiplication by an
    // upper unitriangular matrix, so the flag is unchanged.
    for (std::size_t later = c + 1; later < n; ++later) {
      if (m(pr, later) == 0) continue;
      const mpq_class f = m(pr, later);
      for (std::size_t r = 0; r < n; ++r) {
        if (m(r, c) != 0) m(r, later) -= f * m(r, c);
      }
    }
    pivots[c] = p;
  }
  return FlagMatrix(std::move(m), Permutation(std::move(pivots)));
}

bool is_normalized_schubert(const RationalMatrix& g) {
  if (!g.is_square()) return false;
  const std::size_t n = g.rows();
  std::set<int> seen;
  for (std::size_t c = 0; c < n; ++c) {
    const int p = piv(g.column(c));
    if (p == 0 || !seen.insert(p).second) return false;
    const std::size_t pr = static_cast<std::size_t>(p - 1);
    if (g(pr, c) != 1) return false;
    for (std::size_t later = c + 1; later < n; ++later) {
      if (g(pr, later) != 0) return false;
    }
  }
  return true;
}

RationalMatrix permutation_matrix(const Permutation& w) {
  const auto n = static_cast<std::size_t>(w.size());
  RationalMatrix m(n, n);
  for (int i = 1; i <= w.size(); ++i) {
    m(static_cast<std::size_t>(w(i) - 1), static_cast<std::size_t>(i - 1)) = 1;
  }
  return m;
}

std::vector<CellCoordinate> cell_coordinates(const Permutation& w) {
  std::vector<CellCoordinate> out;
  for (int col = 1; col <= w.size(); ++col) {
    for (int row = 1; row < w(col); ++row) {
      if (w.position(row) > col) out.push_back({row, col});
    }
  }
  return out;
}

FlagMatrix cell_point(const Permutation& w,
                      const std::vector<std::pair<CellCoordinate, mpq_class>>& values) {
  RationalMatrix m = permutation_matrix(w);
  for (const auto& [coord, v] : values) {
    if (coord.col < 1 || coord.col > w.size() || coord.row < 1 || coord.row >= w(coord.col) ||
        w.position(coord.row) <= coord.col) {
      throw InvalidArgument("(" + std::to_string(coord.row) + "," + std::to_string(coord.col) +
                            ") is not a free coordinate of the cell " + w.to_string());
    }
    m(static_cast<std::size_t>(coord.row - 1), static_cast<std::size_t>(coord.col - 1)) = v;
  }
  return FlagMatrix(std::move(m), w);
}

}  // namespace hessgkm
