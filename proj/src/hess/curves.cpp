#include "hessgkm/hess/curves.hpp"

#include "hessgkm/errors.hpp"
#include "hessgkm/hess/membership.hpp"
#include "hessgkm/hess/sampling.hpp"

namespace hessgkm {

std::string_view to_string(CoordinateStatus s) {
  return s == CoordinateStatus::Free ? "free" : "forced-zero";
}

bool curve_in_variety(const Permutation& w, RootPosition pos, const SkeletalNilpotent& x,
                      const HessenbergFunction& h, int first_sample) {
  const int n = w.size();
  if (pos.i < 1 || pos.j > n || pos.i >= pos.j) throw InvalidArgument("root position must have i < j");
  if (!member_fixed_point(w, x, h)) throw PreconditionFailed("curve endpoint " + w.to_string() + " is not in H(X, h)");
  // I + s E_{ij} fixes wB when e_i already precedes e_j; the curve to
  // t_{ij} w is then traced by the opposite root I + s E_{ji}.
  const bool upper = w.position(pos.i) > w.position(pos.j);
  const int moved = upper ? pos.i : pos.j;
  const int kept = upper ? pos.j : pos.i;
  const RationalMatrix base = permutation_matrix(w);
  const auto col = static_cast<std::size_t>(w.position(kept) - 1);
  const auto row = static_cast<std::size_t>(moved - 1);
  for (int k = 0; k <= n; ++k) {
    // The curve differs from w only in this one entry.
    RationalMatrix g = base;
    g(row, col) = first_sample + k;
    if (!member(g, x, h)) return false;
  }
  return true;
}

CellProfile cell_profile(const Permutation& w, const SkeletalNilpotent& x,
                         const HessenbergFunction& h, std::mt19937_64& rng, int trials) {
  CellProfile profile;
  profile.w = w;
  const auto coords = cell_coordinates(w);
  std::vector<CellCoordinate> forced;
  for (const auto& c : coords) {
    const bool free = curve_in_variety(w, root_of(w, c), x, h);
    profile.coordinates[c] = free ? CoordinateStatus::Free : CoordinateStatus::ForcedZero;
    if (!free) forced.push_back(c);
  }
  if (forced.empty()) return profile;

  auto check = [&](const FlagMatrix& g) {
    ++profile.samples;
    if (!member(g, x, h)) return false;
    for (const auto& c : forced) {
      if (g.matrix()(static_cast<std::size_t>(c.row - 1), static_cast<std::size_t>(c.col - 1)) != 0) {
        profile.entangled = true;
        profile.entangled_witness = g;
        return true;
      }
    }
    return false;
  };

  for (std::size_t a = 0; a < forced.size(); ++a) {
    for (std::size_t b = a + 1; b < forced.size(); ++b) {
      for (int sign : {1, -1}) {
        if (check(cell_point(w, {{forced[a], mpq_class(1)}, {forced[b], mpq_class(sign)}}))) {
          return profile;
        }
      }
    }
  }
  for (int t = 0; t < trials; ++t) {
    if (check(random_cell_point(w, rng, 0.5))) return profile;
  }
  return profile;
}

}  // namespace hessgkm
