#pragma once

#include <span>
#include <string>
#include <vector>

namespace hessgkm {

/// A weakly increasing h : {1..n} -> {1..n} with h(i) >= i.
///
/// The associated Hessenberg space is the set of matrices M with
/// M(i,j) = 0 whenever i > h(j); `allows` answers that mask query.
class HessenbergFunction {
 public:
  HessenbergFunction() = default;
  /// Throws InvalidArgument if the values are not a Hessenberg function.
  explicit HessenbergFunction(std::vector<int> values);

  /// h(i) = min(i + step, n); step = 1 gives the Peterson shape.
  static HessenbergFunction shifted(int n, int step);
  static HessenbergFunction identity(int n) { return shifted(n, 0); }
  static HessenbergFunction full(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> values() const { return values_; }

  /// Mask of the Hessenberg space: entry (row, col) may be nonzero.
  bool allows(int row, int col) const { return row <= (*this)(col); }
  /// Pointwise h >= other, i.e. the Hessenberg space contains other's.
  bool contains(const HessenbergFunction& other) const;

  std::string to_string() const;

  friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;
  friend auto operator<=>(const HessenbergFunction& a, const HessenbergFunction& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// Every Hessenberg function on {1..n}, lexicographically ordered.
/// Throws EmptyDomain for n = 0.
std::vector<HessenbergFunction> enumerate_hessenberg_functions(int n);

}  // namespace hessgkm
