#include "hessgkm/hess/stabilizer.hpp"

#include <set>

#include "hessgkm/errors.hpp"
#include "hessgkm/hess/column_test.hpp"
#include "hessgkm/hess/membership.hpp"
#include "hessgkm/hess/sampling.hpp"

namespace hessgkm {

StabilizerEstimate stabilizer_estimate(const SkeletalNilpotent& x, const HessenbergFunction& h,
                                       int trials, std::uint64_t seed,
                                       const std::vector<FlagMatrix>& known_members) {
  if (trials < 1) throw InvalidArgument("stabilizer_estimate needs at least one trial");
  if (x.size() != h.size()) throw InvalidArgument("dimension mismatch between X and h");
  StabilizerEstimate est;
  est.seed = seed;
  est.trials = trials;
  est.lower = canonical_k(x).torus;

  std::set<Character> found;
  auto absorb = [&](const FlagMatrix& g) {
    ++est.members_tested;
    const auto report = column_test(g, x, h);
    found.insert(report.equalities.begin(), report.equalities.end());
  };

  const auto cells = fixed_points(x, h);
  for (const auto& w : cells) absorb(cell_point(w, {}));
  for (const auto& g : known_members) absorb(g);

  int sampled = 0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    if (auto g = random_member(x, h, rng, 8)) {
      absorb(*g);
      ++sampled;
    }
    const FlagMatrix c = random_cell_point(cells[rng() % cells.size()], rng, 0.5);
    if (member(c, x, h)) {
      absorb(c);
      ++sampled;
    }
  }
  est.inconclusive = sampled == 0;
  est.upper = subtorus_from_characters({found.begin(), found.end()}, x.size());
  return est;
}

}  // namespace hessgkm
