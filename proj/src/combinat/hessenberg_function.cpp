#include "hessgkm/combinat/hessenberg_function.hpp"

#include <algorithm>
#include <sstream>

#include "hessgkm/errors.hpp"

namespace hessgkm {

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const int v = (*this)(i);
    if (v < i || v > n) {
      throw InvalidArgument("h(" + std::to_string(i) + ") = " + std::to_string(v) +
                            " must lie in [" + std::to_string(i) + ", " + std::to_string(n) + "]");
    }
    if (i > 1 && v < (*this)(i - 1)) {
      throw InvalidArgument("h must be weakly increasing (fails at " + std::to_string(i) + ")");
    }
  }
}

HessenbergFunction HessenbergFunction::shifted(int n, int step) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) values[static_cast<std::size_t>(i - 1)] = std::min(i + step, n);
  return HessenbergFunction(std::move(values));
}

HessenbergFunction HessenbergFunction::full(int n) {
  return HessenbergFunction(std::vector<int>(static_cast<std::size_t>(n), n));
}

bool HessenbergFunction::contains(const HessenbergFunction& other) const {
  if (other.size() != size()) return false;
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) < other(i)) return false;
  }
  return true;
}

std::string HessenbergFunction::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) out << (i ? "," : "") << values_[i];
  out << ')';
  return out.str();
}

namespace {

void extend(int n, std::vector<int>& prefix, std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.emplace_back(prefix);
    return;
  }
  const int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    extend(n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HessenbergFunction> enumerate_hessenberg_functions(int n) {
  if (n <= 0) throw EmptyDomain("Hessenberg functions need n >= 1");
  std::vector<HessenbergFunction> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  extend(n, prefix, out);
  return out;
}

}  // namespace hessgkm
