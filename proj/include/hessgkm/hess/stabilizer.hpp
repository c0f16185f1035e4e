#pragma once

#include <cstdint>
#include <vector>

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/skeletal.hpp"
#include "hessgkm/exactla/flag.hpp"
#include "hessgkm/torus/torus.hpp"

namespace hessgkm {

/// Bounds on the largest subtorus of T acting on H(X, h).
struct StabilizerEstimate {
  Subtorus lower;  ///< canonical K, always acts
  Subtorus upper;  ///< cut out by every equality found in the samples
  int members_tested = 0;
  bool inconclusive = false;  ///< no member was found
  std::uint64_t seed = 0;
  int trials = 0;

  bool upper_is_full() const { return upper.is_full(); }
  bool determined() const { return lower == upper; }
};

/// Runs column_test over every permutation fixed point, over
/// `known_members` (which must lie in H(X, h)), and over `trials` random
/// members (cell points and column-by-column constructions).
StabilizerEstimate stabilizer_estimate(const SkeletalNilpotent& x, const HessenbergFunction& h,
                                       int trials, std::uint64_t seed,
                                       const std::vector<FlagMatrix>& known_members = {});

}  // namespace hessgkm
