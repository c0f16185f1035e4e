#include "hessgkm/combinat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hessgkm/errors.hpp"

namespace hessgkm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  inverse_.assign(images_.size(), 0);
  for (int i = 1; i <= n; ++i) {
    const int v = images_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n || inverse_[static_cast<std::size_t>(v - 1)] != 0) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    }
    inverse_[static_cast<std::size_t>(v - 1)] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw InvalidArgument("permutation sizes differ");
  std::vector<int> images(images_.size());
  for (int i = 1; i <= size(); ++i) images[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(images));
}

Permutation Permutation::swap_values(int a, int b) const {
  std::vector<int> images = images_;
  for (int& v : images) {
    if (v == a) {
      v = b;
    } else if (v == b) {
      v = a;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  const bool compact = size() < 10;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!compact && i > 0) out << ',';
    out << images_[i];
  }
  out << ']';
  return out.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace hessgkm
