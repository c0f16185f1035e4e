#include "hessgkm/hess/sampling.hpp"

#include <array>

#include "hessgkm/errors.hpp"
#include "hessgkm/hess/membership.hpp"

namespace hessgkm {

namespace {

const std::array<mpq_class, 12>& pool() {
  static const std::array<mpq_class, 12> values = {
      mpq_class(1),     mpq_class(-1),   mpq_class(2),    mpq_class(-2),
      mpq_class(3),     mpq_class(-3),   mpq_class(1, 2), mpq_class(-1, 2),
      mpq_class(2, 3),  mpq_class(-3, 2), mpq_class(5),  mpq_class(-5, 3)};
  return values;
}

bool coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

RationalVector random_vector(int n, std::mt19937_64& rng) {
  RationalVector v(static_cast<std::size_t>(n));
  for (auto& x : v) x = random_rational(rng);
  return v;
}

RationalVector image_of(const SkeletalNilpotent& x, const RationalVector& v) {
  RationalVector out(v.size());
  for (const auto& [row, e] : x.entries()) {
    out[static_cast<std::size_t>(row - 1)] = e.coefficient * v[static_cast<std::size_t>(e.column - 1)];
  }
  return out;
}

void add_random_combination(RationalVector& v, const std::vector<RationalVector>& basis,
                            std::mt19937_64& rng) {
  for (const auto& b : basis) {
    const mpq_class c = random_rational(rng);
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
  }
}

bool independent(const std::vector<RationalVector>& cols, const RationalVector& v) {
  if (cols.empty()) return !is_zero(v);
  return !in_span(RationalMatrix::from_columns(cols), v).has_value();
}

/// A random vector v with X v in span(cols), or nullopt.
std::optional<RationalVector> random_preimage(const SkeletalNilpotent& x,
                                              const std::vector<RationalVector>& cols,
                                              std::mt19937_64& rng) {
  const int n = x.size();
  const auto un = static_cast<std::size_t>(n);
  // Kernel of [X | -V] restricted to its first n coordinates.
  RationalMatrix m(un, un + cols.size());
  const RationalMatrix xm = x.to_matrix();
  for (std::size_t r = 0; r < un; ++r) {
    for (std::size_t c = 0; c < un; ++c) m(r, c) = xm(r, c);
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, un + k) = -cols[k][r];
  }
  std::vector<RationalVector> basis;
  for (const auto& v : nullspace(m)) basis.emplace_back(v.begin(), v.begin() + n);
  for (int attempt = 0; attempt < 8; ++attempt) {
    RationalVector v(un);
    add_random_combination(v, basis, rng);
    if (independent(cols, v)) return v;
  }
  return std::nullopt;
}

std::optional<FlagMatrix> build_member(const SkeletalNilpotent& x, const HessenbergFunction& h,
                                       std::mt19937_64& rng) {
  const int n = x.size();
  std::vector<RationalVector> cols;
  std::vector<int> pending;  // columns i whose image is not yet in the span
  for (int m = 1; m <= n; ++m) {
    std::vector<int> due;
    for (int i : pending) {
      if (h(i) == m) due.push_back(i);
    }
    RationalVector next;
    if (!due.empty()) {
      next = image_of(x, cols[static_cast<std::size_t>(due.front() - 1)]);
      add_random_combination(next, cols, rng);
    } else if (h(m) == m) {
      auto v = random_preimage(x, cols, rng);
      if (!v) return std::nullopt;
      next = std::move(*v);
    } else if (!pending.empty() && coin(rng, 0.5)) {
      const int i = pending[rng() % pending.size()];
      next = image_of(x, cols[static_cast<std::size_t>(i - 1)]);
      add_random_combination(next, cols, rng);
    } else {
      next = random_vector(n, rng);
    }
    if (!independent(cols, next)) return std::nullopt;
    cols.push_back(std::move(next));

    pending.push_back(m);
    std::erase_if(pending, [&](int i) {
      return !independent(cols, image_of(x, cols[static_cast<std::size_t>(i - 1)]));
    });
  }
  return normalize_schubert(RationalMatrix::from_columns(cols));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

mpq_class random_nonzero_rational(std::mt19937_64& rng) { return pool()[rng() % pool().size()]; }

mpq_class random_rational(std::mt19937_64& rng) {
  if (rng() % 4 == 0) return 0;
  return random_nonzero_rational(rng);
}

FlagMatrix random_cell_point(const Permutation& w, std::mt19937_64& rng, double zero_bias) {
  std::vector<std::pair<CellCoordinate, mpq_class>> values;
  for (const auto& c : cell_coordinates(w)) {
    if (zero_bias > 0.0 && coin(rng, zero_bias)) continue;
    values.emplace_back(c, random_nonzero_rational(rng));
  }
  return cell_point(w, values);
}

std::optional<FlagMatrix> random_member(const SkeletalNilpotent& x, const HessenbergFunction& h,
                                        std::mt19937_64& rng, int attempts) {
  if (x.size() != h.size()) throw InvalidArgument("dimension mismatch between X and h");
  std::vector<Permutation> cells;
  for (int a = 0; a < attempts; ++a) {
    // Alternate the column construction with sparse points of fixed-point
    // cells; the latter reaches varieties where deadlines collide.
    if (a % 2 == 0) {
      auto g = build_member(x, h, rng);
      if (g && member(*g, x, h)) return g;
      continue;
    }
    if (cells.empty()) cells = fixed_points(x, h);
    FlagMatrix g = random_cell_point(cells[rng() % cells.size()], rng, 0.5);
    if (member(g, x, h)) return g;
  }
  return std::nullopt;
}

std::vector<mpq_class> random_torus_element(int n, std::mt19937_64& rng) {
  std::vector<mpq_class> t(static_cast<std::size_t>(n));
  for (auto& v : t) v = random_nonzero_rational(rng);
  return t;
}

SkeletalNilpotent random_skeletal(int n, std::mt19937_64& rng) {
  std::map<int, SkeletalNilpotent::Entry> entries;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
  for (int i = 1; i < n; ++i) {
    if (!coin(rng, density)) continue;
    std::vector<int> free;
    for (int j = i + 1; j <= n; ++j) {
      if (!used[static_cast<std::size_t>(j)]) free.push_back(j);
    }
    if (free.empty()) continue;
    const int j = free[rng() % free.size()];
    used[static_cast<std::size_t>(j)] = true;
    entries[i] = {j, random_nonzero_rational(rng)};
  }
  return SkeletalNilpotent(n, std::move(entries));
}

HessenbergFunction random_hessenberg_function(int n, std::mt19937_64& rng) {
  std::vector<int> values;
  int prev = 1;
  for (int i = 1; i <= n; ++i) {
    const int lo = std::max(prev, i);
    const int v = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(n - lo + 1));
    values.push_back(v);
    prev = v;
  }
  return HessenbergFunction(std::move(values));
}

}  // namespace hessgkm
