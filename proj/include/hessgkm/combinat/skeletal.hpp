#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace hessgkm {

class RationalMatrix;

/// A strictly upper-triangular matrix with at most one nonzero entry in
/// each row and each column, stored as row i -> (column X(i), coefficient).
class SkeletalNilpotent {
 public:
  struct Entry {
    int column;
    mpq_class coefficient;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SkeletalNilpotent() = default;
  explicit SkeletalNilpotent(int n) : n_(n) {}
  /// Throws NotSkeletal on a shape violation, InvalidArgument on bad indices
  /// or a zero coefficient.
  SkeletalNilpotent(int n, std::map<int, Entry> entries);

  int size() const { return n_; }
  /// X(i), or 0 for a zero row.
  int column_of(int row) const;
  const mpq_class& coefficient(int row) const;
  /// Number of nonzero rows.
  int rank() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  /// Nonzero rows in increasing order.
  std::vector<int> rows() const;
  std::vector<int> columns() const;
  bool is_row(int i) const { return entries_.contains(i); }
  const std::map<int, Entry>& entries() const { return entries_; }

  RationalMatrix to_matrix() const;
  /// t^{-1} X t for the diagonal matrix t = diag(diagonal); still skeletal.
  SkeletalNilpotent conjugate_by_diagonal(const std::vector<mpq_class>& diagonal) const;

  friend bool operator==(const SkeletalNilpotent&, const SkeletalNilpotent&) = default;

 private:
  int n_ = 0;
  std::map<int, Entry> entries_;
};

/// F_k: ones at (i, n-k+i) for i = 1..k.
SkeletalNilpotent make_fk(int n, int k);

/// The subregular nilpotent sum of E_{i,i+1} for i = 2..n-1.
SkeletalNilpotent make_subregular(int n);

SkeletalNilpotent skeletal_from_matrix(const RationalMatrix& m);

}  // namespace hessgkm
