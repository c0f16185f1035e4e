#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hessgkm {

/// A permutation of {1,..,n} in one-line notation: w(i) is the image of i.
/// As a matrix, w sends e_i to e_{w(i)}, so column i of w is e_{w(i)}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a bijection on {1,..,n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// 1-based image.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  /// Position of value v, i.e. w^{-1}(v).
  int position(int v) const { return inverse_[static_cast<std::size_t>(v - 1)]; }

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  /// Left multiplication by the transposition swapping values a and b.
  Permutation swap_values(int a, int b) const;

  std::span<const int> images() const { return images_; }
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
  std::vector<int> inverse_;
};

/// All permutations of {1,..,n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace hessgkm
