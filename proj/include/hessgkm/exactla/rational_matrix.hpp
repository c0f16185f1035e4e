#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hessgkm {

using RationalVector = std::vector<mpq_class>;

/// Dense matrix over arbitrary-precision rationals. Element access is
/// 0-based; the domain-level functions elsewhere in the library use the
/// 1-based row and column numbers of the mathematics.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<mpq_class>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns);
  static RationalMatrix diagonal(const RationalVector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  void set_column(std::size_t c, const RationalVector& v);
  /// The first `count` columns.
  RationalMatrix leading_columns(std::size_t count) const;
  RationalMatrix submatrix(const std::vector<std::size_t>& row_idx,
                           const std::vector<std::size_t>& col_idx) const;
  RationalMatrix transpose() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Plain-text rendering, one bracketed row per line.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

bool is_zero(const RationalVector& v);

/// Lowest nonzero row of a column (1-based), or 0 for the zero vector.
int piv(const RationalVector& v);

std::size_t rank(const RationalMatrix& m);
bool is_invertible(const RationalMatrix& m);
/// Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& m);

/// Coefficients c with m c = w, or nullopt when w is outside the column
/// span. Free variables are set to zero.
std::optional<RationalVector> in_span(const RationalMatrix& m, const RationalVector& w);

/// Basis of {x : m x = 0}, one vector per free column of the reduced form.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Same column span for every leading prefix of columns.
bool same_flag(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace hessgkm
