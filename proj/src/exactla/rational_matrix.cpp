#include "hessgkm/exactla/rational_matrix.hpp"

#include <sstream>
#include <utility>

#include "hessgkm/errors.hpp"

namespace hessgkm {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<mpq_class>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (const auto& v : row) data_.push_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void RationalMatrix::set_column(std::size_t c, const RationalVector& v) {
  if (v.size() != rows_) throw InvalidArgument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

RationalMatrix RationalMatrix::leading_columns(std::size_t count) const {
  RationalMatrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, c);
  }
  return m;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                         const std::vector<std::size_t>& col_idx) const {
  RationalMatrix m(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    for (std::size_t c = 0; c < col_idx.size(); ++c) m(r, c) = (*this)(row_idx[r], col_idx[c]);
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
  RationalMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) m(i, j) += aik * b(k, j);
      }
    }
  }
  return m;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
    out << "]\n";
  }
  return out.str();
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

int piv(const RationalVector& v) {
  for (std::size_t i = v.size(); i > 0; --i) {
    if (v[i - 1] != 0) return static_cast<int>(i);
  }
  return 0;
}

namespace {

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    }
    const mpq_class lead = m(row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(row, k) /= lead;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const mpq_class f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (m(row, k) != 0) m(r, k) -= f * m(row, k);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return rref(work, work.cols()).size();
}

bool is_invertible(const RationalMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw SingularMatrix("cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  if (rref(aug, n).size() != n) throw SingularMatrix("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

std::optional<RationalVector> in_span(const RationalMatrix& m, const RationalVector& w) {
  if (w.size() != m.rows()) throw InvalidArgument("in_span: vector length mismatch");
  const std::size_t cols = m.cols();
  RationalMatrix aug(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = w[r];
  }
  const auto pivots = rref(aug, cols);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug(r, cols) != 0) return std::nullopt;
  }
  RationalVector coeffs(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) coeffs[pivots[i]] = aug(i, cols);
  return coeffs;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RationalMatrix work = m;
  const auto pivots = rref(work, work.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool same_flag(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t m = 1; m <= a.cols(); ++m) {
    const RationalMatrix pa = a.leading_columns(m);
    const RationalMatrix pb = b.leading_columns(m);
    RationalMatrix both(a.rows(), 2 * m);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        both(r, c) = pa(r, c);
        both(r, m + c) = pb(r, c);
      }
    }
    const std::size_t ra = rank(pa);
    if (ra != rank(pb) || rank(both) != ra) return false;
  }
  return true;
}

}  // namespace hessgkm
