#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/permutation.hpp"
#include "hessgkm/combinat/skeletal.hpp"
#include "hessgkm/exactla/flag.hpp"
#include "hessgkm/torus/torus.hpp"

namespace hessgkm {

enum class CellContainment {
  Contained,           ///< every sample was a member (probabilistic)
  ProperIntersection,  ///< certified by a failing point
};

std::string_view to_string(CellContainment c);

struct CellContainmentResult {
  Permutation w;
  CellContainment status = CellContainment::Contained;
  std::optional<FlagMatrix> failing_point;
  int samples = 0;
};

/// For each permutation flag w of H(X, h), samples random points of C_w.
std::vector<CellContainmentResult> union_of_schubert_check(const SkeletalNilpotent& x,
                                                           const HessenbergFunction& h,
                                                           int trials, std::uint64_t seed);

struct MaxSubtorusVerdict {
  int n = 0;
  int k = 0;
  HessenbergFunction h;
  Subtorus lower;
  Subtorus upper;
  /// The bounds coincide, certified by the greedy witness flag.
  bool certified = false;
  std::optional<FlagMatrix> witness;
};

/// Largest subtorus acting on H(F_k, h). When h(1) = 2 and h contains
/// h(i) = min(i+1, n), the greedy witness with all-ones seed certifies that
/// it is the canonical K; otherwise the sampled bounds are returned.
MaxSubtorusVerdict max_subtorus_fk(int k, const HessenbergFunction& h, int trials = 16,
                                   std::uint64_t seed = 1);

}  // namespace hessgkm
