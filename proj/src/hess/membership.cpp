#include "hessgkm/hess/membership.hpp"

#include "hessgkm/errors.hpp"

namespace hessgkm {

namespace {

bool conjugate_in_mask(const RationalMatrix& g, const RationalMatrix& xg, const HessenbergFunction& h) {
  const RationalMatrix ginv = inverse(g);
  const std::size_t n = g.rows();
  // Only the entries below the mask need computing.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = static_cast<std::size_t>(h(static_cast<int>(j) + 1)); r < n; ++r) {
      mpq_class sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (ginv(r, k) != 0 && xg(k, j) != 0) sum += ginv(r, k) * xg(k, j);
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

void check_dims(std::size_t g_rows, std::size_t g_cols, int x_size, const HessenbergFunction& h) {
  if (g_rows != g_cols) throw InvalidArgument("flag matrix must be square");
  if (static_cast<int>(g_rows) != x_size || h.size() != x_size) {
    throw InvalidArgument("dimension mismatch between g, X and h");
  }
}

RationalMatrix skeletal_times(const SkeletalNilpotent& x, const RationalMatrix& g) {
  RationalMatrix out(g.rows(), g.cols());
  for (const auto& [row, e] : x.entries()) {
    const auto r = static_cast<std::size_t>(row - 1);
    const auto c = static_cast<std::size_t>(e.column - 1);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(c, j) != 0) out(r, j) = e.coefficient * g(c, j);
    }
  }
  return out;
}

}  // namespace

bool member(const RationalMatrix& g, const RationalMatrix& x, const HessenbergFunction& h) {
  if (!x.is_square()) throw InvalidArgument("X must be square");
  check_dims(g.rows(), g.cols(), static_cast<int>(x.rows()), h);
  return conjugate_in_mask(g, x * g, h);
}

bool member(const RationalMatrix& g, const SkeletalNilpotent& x, const HessenbergFunction& h) {
  check_dims(g.rows(), g.cols(), x.size(), h);
  return conjugate_in_mask(g, skeletal_times(x, g), h);
}

bool member(const FlagMatrix& g, const SkeletalNilpotent& x, const HessenbergFunction& h) {
  return member(g.matrix(), x, h);
}

bool member_fixed_point(const Permutation& w, const SkeletalNilpotent& x,
                        const HessenbergFunction& h) {
  if (w.size() != x.size() || h.size() != x.size()) {
    throw InvalidArgument("dimension mismatch between w, X and h");
  }
  for (const auto& [row, e] : x.entries()) {
    if (w.position(row) > h(w.position(e.column))) return false;
  }
  return true;
}

std::vector<Permutation> fixed_points(const SkeletalNilpotent& x, const HessenbergFunction& h) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(x.size())) {
    if (member_fixed_point(w, x, h)) out.push_back(std::move(w));
  }
  return out;
}

RationalMatrix act_by_torus(const std::vector<mpq_class>& t, const RationalMatrix& g) {
  if (t.size() != g.rows()) throw InvalidArgument("torus element has wrong length");
  RationalMatrix out = g;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) out(r, c) *= t[r];
  }
  return out;
}

}  // namespace hessgkm
