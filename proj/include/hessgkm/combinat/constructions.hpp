#pragma once

#include <gmpxx.h>

#include <vector>

#include "hessgkm/combinat/permutation.hpp"
#include "hessgkm/combinat/skeletal.hpp"

namespace hessgkm {

class FlagMatrix;

/// A permutation w with w(X(i)) = w(i) + 1 for every nonzero row i, so that
/// the conjugate circle w S w^{-1} scales X by a single character.
///
/// Chains i -> X(i) -> X^2(i) -> ... are numbered consecutively, starting
/// each chain at the smallest row not yet numbered. Unnumbered indices are
/// filled order-preservingly with the unused values.
Permutation circle_permutation(const SkeletalNilpotent& x);

/// The flag built column by column from `seed`: g_{j+1} = F_k g_j while
/// that is nonzero, otherwise the standard basis vector of the largest row
/// not yet used as a pivot. Lies in H(F_k, h) for h(i) = min(i+1, n).
///
/// Throws InvalidWitness if a seed entry is zero or its last entry is not 1.
FlagMatrix greedy_witness(int n, int k, const std::vector<mpq_class>& seed);

}  // namespace hessgkm
