#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each returns how many instances were checked and how many failed.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hessgkm/combinat/constructions.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/exactla/column_system.hpp"
#include "hessgkm/exactla/flag.hpp"
#include "hessgkm/hess/curves.hpp"
#include "hessgkm/hess/membership.hpp"
#include "hessgkm/hess/sampling.hpp"
#include "hessgkm/torus/torus.hpp"

namespace hessgkm::testing {

struct PropertyResult {
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool passed(int minimum) const { return failures == 0 && instances >= minimum; }
};

inline RationalMatrix random_upper_triangular(int n, std::mt19937_64& rng) {
  RationalMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    b(r, r) = random_nonzero_rational(rng);
    for (int c = r + 1; c < n; ++c) b(r, c) = random_rational(rng);
  }
  return b;
}

inline RationalMatrix random_invertible(int n, std::mt19937_64& rng) {
  for (;;) {
    RationalMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) p(r, c) = random_rational(rng);
    }
    if (is_invertible(p)) return p;
  }
}

struct Instance {
  SkeletalNilpotent x;
  HessenbergFunction h;
  RationalMatrix g;
};

// Alternates random members with arbitrary invertible matrices, so both
// outcomes of the membership test are exercised.
inline Instance random_instance(int index, std::mt19937_64& rng) {
  const int n = 2 + index % 5;
  Instance out{random_skeletal(n, rng), random_hessenberg_function(n, rng), {}};
  if (index % 2 == 0) {
    if (auto g = random_member(out.x, out.h, rng, 8)) {
      out.g = g->matrix();
      return out;
    }
  }
  out.g = random_invertible(n, rng);
  return out;
}

inline PropertyResult flag_invariance(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  for (int i = 0; i < count; ++i) {
    const auto in = random_instance(i, rng);
    const int n = in.x.size();
    const bool base = member(in.g, in.x, in.h);
    const bool normalized = member(normalize_schubert(in.g), in.x, in.h);
    const bool moved = member(in.g * random_upper_triangular(n, rng), in.x, in.h);
    res.record(base == normalized && base == moved, "g=" + in.g.to_string());
  }
  return res;
}

inline PropertyResult torus_action_equivalence(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  for (int i = 0; i < count; ++i) {
    const auto in = random_instance(i, rng);
    const auto t = random_torus_element(in.x.size(), rng);
    const bool lhs = member(act_by_torus(t, in.g), in.x, in.h);
    const bool rhs = member(in.g, in.x.conjugate_by_diagonal(t), in.h);
    res.record(lhs == rhs, "g=" + in.g.to_string());
  }
  return res;
}

inline PropertyResult conjugation_invariance(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  for (int i = 0; i < count; ++i) {
    const auto in = random_instance(i, rng);
    const auto p = random_invertible(in.x.size(), rng);
    const RationalMatrix raw = p * in.x.to_matrix() * inverse(p);
    const bool lhs = member(p * in.g, raw, in.h);
    const bool rhs = member(in.g, in.x, in.h);
    res.record(lhs == rhs, "g=" + in.g.to_string());
  }
  return res;
}

inline PropertyResult normalize_idempotence(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + i % 6;
    RationalMatrix g = random_invertible(n, rng);
    if (i % 3 == 0) g = permutation_matrix(all_permutations(n)[rng() % all_permutations(n).size()]) *
                        random_upper_triangular(n, rng);
    const auto once = normalize_schubert(g);
    const auto twice = normalize_schubert(once.matrix());
    const bool ok = once == twice && is_normalized_schubert(once.matrix()) && same_flag(g, once.matrix());
    res.record(ok, "g=" + g.to_string());
  }
  return res;
}

inline PropertyResult saturation(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> scale(2, 6);
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 5;
    std::vector<Character> chars;
    std::vector<Character> scaled;
    const int m = 1 + static_cast<int>(rng() % 3);
    for (int c = 0; c < m; ++c) {
      Character chi = Character::zero(n);
      for (auto& a : chi.exponents) a = entry(rng);
      Character s = chi;
      const int factor = scale(rng);
      for (auto& a : s.exponents) a *= factor;
      chars.push_back(chi);
      scaled.push_back(s);
    }
    const auto k = subtorus_from_characters(chars, n);
    const auto ks = subtorus_from_characters(scaled, n);
    bool ok = k == ks;
    for (const auto& chi : chars) ok = ok && ks.kills(chi);
    for (const auto& l : k.cocharacter_basis()) ok = ok && cochar_in_subtorus(l, k);
    const auto t = k.sample_point(rng);
    for (const auto& chi : chars) ok = ok && chi.evaluate(t) == 1;
    res.record(ok, "n=" + std::to_string(n));
  }
  return res;
}

inline PropertyResult curve_sample_independence(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  while (res.instances < count) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto x = random_skeletal(n, rng);
    const auto h = random_hessenberg_function(n, rng);
    const auto fps = fixed_points(x, h);
    const auto& w = fps[rng() % fps.size()];
    const auto coords = cell_coordinates(w);
    if (coords.empty()) continue;
    const auto pos = root_of(w, coords[rng() % coords.size()]);
    const bool a = curve_in_variety(w, pos, x, h, 1);
    const bool b = curve_in_variety(w, pos, x, h, 1 + n + 1 + static_cast<int>(rng() % 20));
    res.record(a == b, w.to_string());
  }
  return res;
}

// The block decomposition decides the same thing as a direct span test.
inline PropertyResult column_system_agrees_with_span(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  for (int i = 0; i < count; ++i) {
    const auto in = random_instance(i, rng);
    const auto g = normalize_schubert(in.g);
    const RationalMatrix xg = in.x.to_matrix() * g.matrix();
    bool ok = true;
    for (int j = 1; j <= in.x.size(); ++j) {
      const bool direct = in_span(g.matrix().leading_columns(static_cast<std::size_t>(in.h(j))),
                                  xg.column(static_cast<std::size_t>(j - 1)))
                              .has_value();
      ok = ok && direct == verify_constraint(column_system(g, in.x, in.h, j));
    }
    res.record(ok, "g=" + g.matrix().to_string());
  }
  return res;
}

// Points of the canonical subtorus keep random members inside the variety.
inline PropertyResult canonical_torus_action(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  while (res.instances < count) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto x = random_skeletal(n, rng);
    const auto h = random_hessenberg_function(n, rng);
    const auto g = random_member(x, h, rng, 8);
    if (!g) continue;
    const auto t = canonical_k(x).torus.sample_point(rng);
    res.record(member(act_by_torus(t, g->matrix()), x, h), "g=" + g->matrix().to_string());
  }
  return res;
}

// With h(1) = 1 and h(2) = n, or h = (n-1, ..., n-1, n) and X = F_k, the
// full torus keeps members inside; in the latter case no member has its
// last pivot in rows 1..k.
inline PropertyResult full_torus_families(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult res;
  while (res.instances < count) {
    const int n = 3 + static_cast<int>(rng() % 4);
    SkeletalNilpotent x;
    std::vector<int> v;
    int k = 0;
    if (rng() % 2 == 0) {
      x = random_skeletal(n, rng);
      v.assign(static_cast<std::size_t>(n), n);
      v[0] = 1;
    } else {
      k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      x = make_fk(n, k);
      v.assign(static_cast<std::size_t>(n), n - 1);
      v.back() = n;
    }
    const HessenbergFunction h(v);
    const auto g = random_member(x, h, rng, 8);
    if (!g) continue;
    bool ok = k == 0 || g->pivots()(n) > k;
    for (int s = 0; s < 50 && ok; ++s) ok = member(act_by_torus(random_torus_element(n, rng), g->matrix()), x, h);
    res.record(ok, "g=" + g->matrix().to_string());
  }
  return res;
}

}  // namespace hessgkm::testing
