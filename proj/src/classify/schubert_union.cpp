#include "hessgkm/classify/varieties.hpp"

#include "hessgkm/hess/membership.hpp"
#include "hessgkm/hess/sampling.hpp"

namespace hessgkm {

std::string_view to_string(CellContainment c) {
  return c == CellContainment::Contained ? "contained" : "proper-intersection";
}

std::vector<CellContainmentResult> union_of_schubert_check(const SkeletalNilpotent& x,
                                                           const HessenbergFunction& h,
                                                           int trials, std::uint64_t seed) {
  std::vector<CellContainmentResult> out;
  const auto cells = fixed_points(x, h);
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    CellContainmentResult r;
    r.w = cells[idx];
    std::mt19937_64 rng(derive_seed(seed, idx));
    for (int t = 0; t < trials; ++t) {
      // The first sample is fully generic; later ones may zero coordinates.
      FlagMatrix g = random_cell_point(r.w, rng, t == 0 ? 0.0 : 0.25);
      ++r.samples;
      if (!member(g, x, h)) {
        r.status = CellContainment::ProperIntersection;
        r.failing_point = std::move(g);
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hessgkm
