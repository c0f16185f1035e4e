#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/skeletal.hpp"
#include "hessgkm/exactla/flag.hpp"

namespace hessgkm {

/// Deterministic per-task seed derivation (splitmix64 of seed and index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// A small nonzero rational drawn from a fixed pool.
mpq_class random_nonzero_rational(std::mt19937_64& rng);
/// Same pool plus zero, which is drawn with probability about 1/4.
mpq_class random_rational(std::mt19937_64& rng);

/// A random point of the Schubert cell C_w; each free coordinate is drawn
/// from the pool, or zero with probability `zero_bias`.
FlagMatrix random_cell_point(const Permutation& w, std::mt19937_64& rng, double zero_bias = 0.0);

/// A random member of H(X, h) built column by column: a column whose
/// deadline h(i) = m has arrived forces g_m into X g_i + V^{m-1}; a column
/// with h(m) = m is drawn from X^{-1}(V^{m-1}); other columns are either
/// the image of a pending column or random. The result is checked exactly;
/// nullopt if `attempts` tries all failed.
std::optional<FlagMatrix> random_member(const SkeletalNilpotent& x, const HessenbergFunction& h,
                                        std::mt19937_64& rng, int attempts = 32);

/// A random full-rank diagonal torus element with entries from the pool.
std::vector<mpq_class> random_torus_element(int n, std::mt19937_64& rng);

/// A random skeletal nilpotent with random nonzero coefficients.
SkeletalNilpotent random_skeletal(int n, std::mt19937_64& rng);

HessenbergFunction random_hessenberg_function(int n, std::mt19937_64& rng);

}  // namespace hessgkm
