#pragma once

#include <map>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/permutation.hpp"
#include "hessgkm/combinat/skeletal.hpp"
#include "hessgkm/exactla/flag.hpp"

namespace hessgkm {

/// Position (i, j), i < j, of the root subgroup u(s) = I + s E_{ij}.
struct RootPosition {
  int i;
  int j;
  friend auto operator<=>(const RootPosition&, const RootPosition&) = default;
};

/// Whether the T-curve joining wB and t_{ij} wB lies in H(X, h). It is the
/// family u(s) w B with u(s) = I + s E_{ij} when that moves wB, that is when
/// w^{-1}(i) > w^{-1}(j), and u(s) = I + s E_{ji} otherwise.
///
/// Each Hessenberg condition along the family is a set of minors of degree
/// at most n in s, so testing n + 1 distinct values decides it. The values
/// used are first_sample, first_sample + 1, ..., first_sample + n.
/// Requires wB in H(X, h); throws PreconditionFailed otherwise.
bool curve_in_variety(const Permutation& w, RootPosition pos, const SkeletalNilpotent& x,
                      const HessenbergFunction& h, int first_sample = 1);

/// The root position that moves the free cell coordinate (row, col) of C_w.
inline RootPosition root_of(const Permutation& w, const CellCoordinate& c) {
  return {c.row, w(c.col)};
}

enum class CoordinateStatus { Free, ForcedZero };
std::string_view to_string(CoordinateStatus s);

struct CellProfile {
  Permutation w;
  std::map<CellCoordinate, CoordinateStatus> coordinates;
  /// The intersection with the cell is not a coordinate subspace: a member
  /// was found with a nonzero value on a forced-zero coordinate.
  bool entangled = false;
  std::optional<FlagMatrix> entangled_witness;
  int samples = 0;
};

/// Classifies every free coordinate of C_w by a curve test, then samples
/// points of the cell to detect entanglement: random points from the pool,
/// and points where pairs of forced-zero coordinates take equal or opposite
/// values. Requires wB in H(X, h).
CellProfile cell_profile(const Permutation& w, const SkeletalNilpotent& x,
                         const HessenbergFunction& h, std::mt19937_64& rng, int trials = 32);

}  // namespace hessgkm
