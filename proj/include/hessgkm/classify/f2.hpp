#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/permutation.hpp"
#include "hessgkm/exactla/flag.hpp"
#include "hessgkm/hess/column_test.hpp"

namespace hessgkm {

/// Rows of the table of non-T-stable H(F_2, h), keyed by h(n-1) and h(1).
enum class InstabilityRow {
  LastFullFirstOne,   ///< h(n-1) = n,   h(1) = 1, h(2) <= n-1
  LastFullFirstMid,   ///< h(n-1) = n,   2 <= h(1) <= n-1
  LastShortFirstOne,  ///< h(n-1) = n-1, h(1) = 1, h(2) <= n-2
  LastShortFirstMid,  ///< h(n-1) = n-1, 2 <= h(1) <= n-2
};

std::string_view to_string(InstabilityRow row);

/// The four witness permutations. Each fixes e_3 .. e_{n-2} and places
/// e_1, e_2, e_{n-1}, e_n in its first two and last two columns:
///   w1: e_2, e_n | e_1, e_{n-1}      w2: e_n, e_2 | e_1, e_{n-1}
///   w3: e_2, e_n | e_{n-1}, e_1      w4: e_n, e_2 | e_{n-1}, e_1
Permutation f2_witness_permutation(int n, int index);

struct StabilityVerdict {
  HessenbergFunction h;
  bool t_stable = false;
  int condition = 0;  ///< 1..4 when t_stable
  std::optional<InstabilityRow> row;
  int witness_index = 0;  ///< 1..4 when not t_stable
  std::optional<Permutation> witness;

  int n() const { return h.size(); }
};

/// Closed-form T-stability of H(F_2, h). Throws UnsupportedDimension for n < 4.
StabilityVerdict classify_f2_tstable(const HessenbergFunction& h);

/// A member of the witness cell with b' = a' = 1: the column with pivot 2
/// carries b' in row 1 and the column with pivot n carries a' in row n-1.
/// Its column test is obstructed. Throws PreconditionFailed for a stable
/// verdict.
FlagMatrix instability_certificate(const StabilityVerdict& verdict);

/// Outcome of the exhaustive T-stability search.
struct BruteStability {
  HessenbergFunction h;
  bool t_stable = false;
  std::optional<Permutation> cell;
  std::optional<FlagMatrix> witness;
  std::optional<ObstructionWitness> obstruction;
  int fixed_points = 0;
  int points_checked = 0;
  std::uint64_t seed = 0;
  int trials = 0;
};

/// Searches every permutation flag w of H(F_2, h): the point of C_w with
/// b' = a' = 1 (where both are free coordinates) is tested for membership
/// and obstruction, then `trials` random cell points of member cells are.
/// Stability is reported only if every tested member is vacuous in every
/// column.
BruteStability brute_f2_tstable(const HessenbergFunction& h, int trials, std::uint64_t seed);

/// Closed-form K-GKM test for H(F_2, h) with K the canonical codimension-one
/// torus. Throws UnsupportedDimension for n < 4.
bool classify_f2_gkm(const HessenbergFunction& h);

struct BruteGkm {
  bool gkm = true;
  /// A permutation flag whose cell admits both locked coordinates
  /// u_{2,n} and u_{1,n-1} nonzero.
  std::optional<Permutation> witness;
};

/// Locked-pair scan: some member w has w^{-1}(2) > w^{-1}(n) and
/// w^{-1}(1) > w^{-1}(n-1).
BruteGkm brute_f2_gkm(const HessenbergFunction& h);

}  // namespace hessgkm
