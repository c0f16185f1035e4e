#include "hessgkm/classify/f2.hpp"

#include "hessgkm/errors.hpp"
#include "hessgkm/hess/membership.hpp"
#include "hessgkm/hess/sampling.hpp"

namespace hessgkm {

namespace {

void require_n4(const HessenbergFunction& h) {
  if (h.size() < 4) {
    throw UnsupportedDimension("the F2 classification needs n >= 4, got n = " + std::to_string(h.size()));
  }
}

/// b' at (1, w^{-1}(2)) and a' at (n-1, w^{-1}(n)), set to 1 where free.
FlagMatrix locked_point(const Permutation& w) {
  const int n = w.size();
  std::vector<std::pair<CellCoordinate, mpq_class>> values;
  for (const CellCoordinate c : {CellCoordinate{1, w.position(2)}, CellCoordinate{n - 1, w.position(n)}}) {
    if (c.row < w(c.col) && w.position(c.row) > c.col) values.emplace_back(c, 1);
  }
  return cell_point(w, values);
}

}  // namespace

std::string_view to_string(InstabilityRow row) {
  switch (row) {
    case InstabilityRow::LastFullFirstOne: return "h(n-1)=n, h(1)=1, h(2)<=n-1";
    case InstabilityRow::LastFullFirstMid: return "h(n-1)=n, 2<=h(1)<=n-1";
    case InstabilityRow::LastShortFirstOne: return "h(n-1)=n-1, h(1)=1, h(2)<=n-2";
    case InstabilityRow::LastShortFirstMid: return "h(n-1)=n-1, 2<=h(1)<=n-2";
  }
  return "?";
}

Permutation f2_witness_permutation(int n, int index) {
  if (n < 4) throw UnsupportedDimension("witness permutations need n >= 4");
  if (index < 1 || index > 4) throw InvalidArgument("witness index must be 1..4");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 3; i <= n - 2; ++i) images[static_cast<std::size_t>(i - 1)] = i;
  const bool n_first = index == 2 || index == 4;
  const bool one_last = index == 3 || index == 4;
  images[0] = n_first ? n : 2;
  images[1] = n_first ? 2 : n;
  images[static_cast<std::size_t>(n - 2)] = one_last ? n - 1 : 1;
  images[static_cast<std::size_t>(n - 1)] = one_last ? 1 : n - 1;
  return Permutation(std::move(images));
}

StabilityVerdict classify_f2_tstable(const HessenbergFunction& h) {
  require_n4(h);
  const int n = h.size();
  StabilityVerdict v;
  v.h = h;
  const int h1 = h(1);
  const int h2 = h(2);
  const int hl = h(n - 1);
  if (h1 == n) v.condition = 1;
  else if (h1 == n - 1 && hl == n - 1) v.condition = 2;
  else if (h1 == 1 && h2 == n) v.condition = 3;
  else if (h1 == 1 && h2 == n - 1 && hl == n - 1) v.condition = 4;
  if (v.condition != 0) {
    v.t_stable = true;
    return v;
  }
  if (hl == n) {
    v.row = h1 == 1 ? InstabilityRow::LastFullFirstOne : InstabilityRow::LastFullFirstMid;
    v.witness_index = h1 == 1 ? 3 : 4;
  } else {
    v.row = h1 == 1 ? InstabilityRow::LastShortFirstOne : InstabilityRow::LastShortFirstMid;
    v.witness_index = h1 == 1 ? 1 : 2;
  }
  v.witness = f2_witness_permutation(n, v.witness_index);
  return v;
}

FlagMatrix instability_certificate(const StabilityVerdict& verdict) {
  if (verdict.t_stable || !verdict.witness) {
    throw PreconditionFailed("no instability certificate for a T-stable verdict");
  }
  return locked_point(*verdict.witness);
}

BruteStability brute_f2_tstable(const HessenbergFunction& h, int trials, std::uint64_t seed) {
  require_n4(h);
  const int n = h.size();
  const SkeletalNilpotent x = make_fk(n, 2);
  BruteStability out;
  out.h = h;
  out.seed = seed;
  out.trials = trials;

  auto test = [&](const Permutation& w, const FlagMatrix& g) {
    ++out.points_checked;
    if (!member(g, x, h)) return false;
    const auto report = column_test(g, x, h);
    if (!report.full_torus_obstructed) return false;
    out.cell = w;
    out.witness = g;
    out.obstruction = report.witness;
    return true;
  };

  const auto cells = fixed_points(x, h);
  out.fixed_points = static_cast<int>(cells.size());
  for (const auto& w : cells) {
    if (test(w, locked_point(w))) return out;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto& w = cells[rng() % cells.size()];
    if (test(w, random_cell_point(w, rng, 0.3))) return out;
  }
  out.t_stable = true;
  return out;
}

bool classify_f2_gkm(const HessenbergFunction& h) {
  require_n4(h);
  const int n = h.size();
  for (int i = 1; i <= n - 2; ++i) {
    if (h(i) > i + 2 || h(i + 1) > i + 2) continue;
    bool rest = true;
    for (int j = 1; j <= n && rest; ++j) {
      if (j != i && j != i + 1 && h(j) != j) rest = false;
    }
    if (rest) return true;
  }
  return false;
}

BruteGkm brute_f2_gkm(const HessenbergFunction& h) {
  require_n4(h);
  const int n = h.size();
  BruteGkm out;
  for (const auto& w : fixed_points(make_fk(n, 2), h)) {
    if (w.position(2) > w.position(n) && w.position(1) > w.position(n - 1)) {
      out.gkm = false;
      out.witness = w;
      break;
    }
  }
  return out;
}

}  // namespace hessgkm
