#pragma once

#include <utility>
#include <vector>

#include "hessgkm/combinat/permutation.hpp"
#include "hessgkm/exactla/rational_matrix.hpp"

namespace hessgkm {

/// A free coordinate of the Schubert cell C_w: matrix entry (row, col),
/// 1-based, with row < w(col) and w^{-1}(row) > col.
struct CellCoordinate {
  int row;
  int col;
  friend auto operator<=>(const CellCoordinate&, const CellCoordinate&) = default;
};

/// An invertible matrix in normalized Schubert form: column i has a 1 in
/// row w(i), zeros below it, and row w(i) is zero to the right of column i.
/// Only `normalize_schubert` and the cell constructors produce one, so every
/// instance satisfies the form.
class FlagMatrix {
 public:
  const RationalMatrix& matrix() const { return matrix_; }
  const Permutation& pivots() const { return pivots_; }
  int size() const { return static_cast<int>(matrix_.rows()); }
  /// Column j (1-based).
  RationalVector column(int j) const { return matrix_.column(static_cast<std::size_t>(j - 1)); }

  friend bool operator==(const FlagMatrix&, const FlagMatrix&) = default;

 private:
  friend FlagMatrix normalize_schubert(const RationalMatrix& g);
  friend FlagMatrix cell_point(const Permutation& w,
                               const std::vector<std::pair<CellCoordinate, mpq_class>>& values);
  FlagMatrix(RationalMatrix m, Permutation w) : matrix_(std::move(m)), pivots_(std::move(w)) {}

  RationalMatrix matrix_;
  Permutation pivots_;
};

/// Canonical representative of the flag gB. Throws SingularMatrix.
FlagMatrix normalize_schubert(const RationalMatrix& g);

/// Checks the three shape conditions directly, without normalizing.
bool is_normalized_schubert(const RationalMatrix& g);

/// The permutation matrix of w (column i is e_{w(i)}).
RationalMatrix permutation_matrix(const Permutation& w);

std::vector<CellCoordinate> cell_coordinates(const Permutation& w);

/// The point of C_w with the given free coordinates set (others zero).
/// Throws InvalidArgument for a position that is not free in the cell.
FlagMatrix cell_point(const Permutation& w,
                      const std::vector<std::pair<CellCoordinate, mpq_class>>& values);

}  // namespace hessgkm
