#include <gtest/gtest.h>

#include <random>

#include "../support/cells.hpp"
#include "hessgkm/classify/f2.hpp"
#include "hessgkm/combinat/constructions.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/exactla/flag.hpp"
#include "hessgkm/hess/column_test.hpp"
#include "hessgkm/hess/curves.hpp"
#include "hessgkm/hess/membership.hpp"
#include "hessgkm/hess/sampling.hpp"
#include "hessgkm/hess/stabilizer.hpp"
#include "hessgkm/torus/torus.hpp"

using namespace hessgkm;
using hessgkm::testing::CellParams;

namespace {

const HessenbergFunction kH3344({3, 3, 4, 4});

Character chr(std::initializer_list<std::int64_t> v) { return Character{std::vector<std::int64_t>(v)}; }

// The w4 cell point with b' = a' = 1, the other coordinates zero.
FlagMatrix locked_4231() {
  return cell_point(Permutation({4, 2, 3, 1}), {{{1, 2}, 1}, {{3, 1}, 1}});
}

}  // namespace

TEST(Member, M2IsMemberForAnyParameters) {
  const auto x = make_fk(4, 2);
  EXPECT_TRUE(member(hessgkm::testing::m2(), x, kH3344));
  EXPECT_TRUE(member(hessgkm::testing::m2(CellParams{0, 0, 0, 0, 0, 0}), x, kH3344));
  EXPECT_TRUE(member(hessgkm::testing::m2(CellParams{mpq_class(1, 2), 9, 4, 8, 1, -3}), x, kH3344));
}

TEST(Member, M1IsNotAMember) {
  EXPECT_FALSE(member(hessgkm::testing::m1(), make_fk(4, 2), kH3344));
}

TEST(Member, M3IsNeverAMember) {
  // (X M3)_2 = e1, which is outside the span of the first three columns of
  // M3 whatever the parameters are.
  const auto x = make_fk(4, 2);
  CellParams equal;
  equal.a13 = equal.a31 = 1;
  EXPECT_FALSE(member(hessgkm::testing::m3(equal), x, kH3344));
  EXPECT_FALSE(member(hessgkm::testing::m3(), x, kH3344));
}

TEST(Member, ImagesOfCellMatrices) {
  const auto x = make_fk(4, 2).to_matrix();
  CellParams p;
  EXPECT_EQ(x * hessgkm::testing::m1(p), (RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  EXPECT_EQ(x * hessgkm::testing::m2(p), (RationalMatrix{{p.a31, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  EXPECT_EQ(x * hessgkm::testing::m3(p), (RationalMatrix{{p.a31, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
}

TEST(Member, SingularThrows) {
  EXPECT_THROW(member(RationalMatrix(4, 4), make_fk(4, 2), kH3344), SingularMatrix);
}

TEST(Member, FlagInvariance) {
  const auto x = make_fk(4, 2);
  const auto g = locked_4231();
  const RationalMatrix b = {{2, 1, 0, 3}, {0, -1, 5, 0}, {0, 0, 1, 1}, {0, 0, 0, 7}};
  EXPECT_TRUE(member(g, x, kH3344));
  EXPECT_TRUE(member(g.matrix() * b, x, kH3344));
}

TEST(MemberFixedPoint, Examples) {
  const auto x = make_fk(4, 2);
  EXPECT_FALSE(member_fixed_point(Permutation({3, 4, 1, 2}), x, kH3344));
  for (int n = 4; n <= 7; ++n) {
    const auto w1 = f2_witness_permutation(n, 1);
    for (const auto& h : enumerate_hessenberg_functions(n)) {
      EXPECT_TRUE(member_fixed_point(w1, make_fk(n, 2), h)) << h.to_string();
      EXPECT_TRUE(member_fixed_point(Permutation::identity(n), make_fk(n, 2), h));
    }
  }
}

TEST(MemberFixedPoint, AgreesWithMatrixTest) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 3;
    const auto x = random_skeletal(n, rng);
    const auto h = random_hessenberg_function(n, rng);
    for (const auto& w : all_permutations(n)) {
      EXPECT_EQ(member_fixed_point(w, x, h), member(permutation_matrix(w), x, h));
    }
  }
}

TEST(FixedPoints, WholeFlagVariety) {
  EXPECT_EQ(fixed_points(make_fk(4, 2), HessenbergFunction::full(4)).size(), 24u);
}

TEST(ActByTorus, ScalesRows) {
  const RationalMatrix g = {{1, 2}, {3, 4}};
  EXPECT_EQ(act_by_torus({2, mpq_class(1, 3)}, g), (RationalMatrix{{2, 4}, {1, mpq_class(4, 3)}}));
}

TEST(ColumnTest, LockedPointIsObstructed) {
  const auto x = make_fk(4, 2);
  const auto g = locked_4231();
  ASSERT_TRUE(member(g, x, kH3344));
  const auto r = column_test(g, x, kH3344);
  EXPECT_TRUE(r.full_torus_obstructed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->column, 1);
  ASSERT_EQ(r.equalities.size(), 1u);
  // (e3 - e1) - (e4 - e2), up to sign
  EXPECT_EQ(*r.equalities.begin(), chr({1, -1, -1, 1}));
  EXPECT_EQ(r.constraint_torus(), canonical_k(x).torus);
}

TEST(ColumnTest, M2IsVacuous) {
  const auto x = make_fk(4, 2);
  const auto r = column_test(normalize_schubert(hessgkm::testing::m2()), x, kH3344);
  EXPECT_FALSE(r.full_torus_obstructed);
  EXPECT_TRUE(r.equalities.empty());
  EXPECT_EQ(r.vacuous_columns.size(), 4u);
  EXPECT_EQ(r.vacuous_columns.at(1), VacuousReason::EmptyB);
  EXPECT_EQ(r.vacuous_columns.at(3), VacuousReason::ZeroImage);
  EXPECT_TRUE(r.constraint_torus().is_full());
}

TEST(ColumnTest, RejectsNonMembers) {
  EXPECT_THROW(column_test(normalize_schubert(hessgkm::testing::m1()), make_fk(4, 2), kH3344),
               PreconditionFailed);
}

TEST(ColumnTest, GreedyWitnessRecoversCanonicalK) {
  for (int n = 3; n <= 7; ++n) {
    const auto h = HessenbergFunction::shifted(n, 1);
    for (int k = 1; k <= n - 1; ++k) {
      const auto x = make_fk(n, k);
      const auto g = greedy_witness(n, k, std::vector<mpq_class>(static_cast<std::size_t>(n), 1));
      const auto r = column_test(g, x, h);
      EXPECT_EQ(r.constraint_torus(), canonical_k(x).torus) << "n=" << n << " k=" << k;
    }
  }
}

TEST(ColumnTest, ReportInvariant) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const auto x = random_skeletal(n, rng);
    const auto h = random_hessenberg_function(n, rng);
    const auto g = random_member(x, h, rng, 8);
    if (!g) continue;
    const auto r = column_test(*g, x, h);
    if (!r.full_torus_obstructed && r.equalities.empty()) {
      EXPECT_EQ(static_cast<int>(r.vacuous_columns.size()), n);
    }
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(Stabilizer, F1IsFull) {
  for (const auto& h : enumerate_hessenberg_functions(4)) {
    const auto e = stabilizer_estimate(make_fk(4, 1), h, 4, 1);
    EXPECT_TRUE(e.lower.is_full());
    EXPECT_TRUE(e.upper.is_full());
    EXPECT_FALSE(e.inconclusive);
  }
}

TEST(Stabilizer, PetersonCoincides) {
  for (int n = 3; n <= 6; ++n) {
    const auto e = stabilizer_estimate(make_fk(n, n - 1), HessenbergFunction::shifted(n, 1), 8, 3);
    EXPECT_TRUE(e.determined()) << n;
    EXPECT_EQ(e.upper.codimension(), n - 2);
    EXPECT_TRUE(e.lower.is_subtorus_of(e.upper));
  }
}

TEST(Stabilizer, F2ConditionTwoHasNoConstraints) {
  const auto e = stabilizer_estimate(make_fk(4, 2), HessenbergFunction({3, 3, 3, 4}), 16, 7);
  EXPECT_TRUE(e.upper_is_full());
  EXPECT_FALSE(e.determined());
  EXPECT_EQ(e.seed, 7u);
  EXPECT_EQ(e.trials, 16);
}

TEST(Stabilizer, KnownMemberTightensUpperBound) {
  const auto x = make_fk(4, 2);
  const auto e = stabilizer_estimate(x, kH3344, 1, 1, {locked_4231()});
  EXPECT_TRUE(e.determined());
  EXPECT_EQ(e.upper, canonical_k(x).torus);
}

TEST(Curves, WholeFlagVarietyHasEveryCurve) {
  const int n = 4;
  const auto x = make_fk(n, 2);
  const auto h = HessenbergFunction::full(n);
  for (const auto& w : all_permutations(n)) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) EXPECT_TRUE(curve_in_variety(w, {i, j}, x, h));
    }
  }
}

TEST(Curves, SubregularFiber) {
  const auto x = make_subregular(4);
  const auto h = HessenbergFunction::identity(4);
  const auto id = Permutation::identity(4);
  EXPECT_TRUE(curve_in_variety(id, {1, 2}, x, h));
  EXPECT_FALSE(curve_in_variety(id, {3, 4}, x, h));
  EXPECT_THROW(curve_in_variety(Permutation({2, 1, 4, 3}), {1, 2}, x, h), PreconditionFailed);
}

TEST(Curves, SampleSetIndependence) {
  const auto x = make_subregular(4);
  const auto h = HessenbergFunction::identity(4);
  for (const auto& w : fixed_points(x, h)) {
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        EXPECT_EQ(curve_in_variety(w, {i, j}, x, h, 1), curve_in_variety(w, {i, j}, x, h, 50));
      }
    }
  }
}

TEST(CellProfile, WholeFlagVarietyAllFree) {
  std::mt19937_64 rng(1);
  const auto p = cell_profile(Permutation({4, 3, 2, 1}), make_fk(4, 2), HessenbergFunction::full(4), rng, 8);
  EXPECT_EQ(p.coordinates.size(), 6u);
  for (const auto& [c, s] : p.coordinates) EXPECT_EQ(s, CoordinateStatus::Free);
  EXPECT_FALSE(p.entangled);
}

TEST(CellProfile, SubregularSingleFreeCoordinate) {
  std::mt19937_64 rng(1);
  const auto p = cell_profile(Permutation({2, 3, 1, 4}), make_subregular(4), HessenbergFunction::identity(4), rng);
  int free = 0;
  for (const auto& [c, s] : p.coordinates) free += s == CoordinateStatus::Free;
  EXPECT_EQ(p.coordinates.size(), 2u);
  EXPECT_EQ(free, 1);
  EXPECT_FALSE(p.entangled);
}

TEST(CellProfile, LockedCellIsEntangled) {
  std::mt19937_64 rng(2);
  const auto x = make_fk(4, 2);
  const auto p = cell_profile(Permutation({4, 2, 3, 1}), x, kH3344, rng);
  EXPECT_TRUE(p.entangled);
  ASSERT_TRUE(p.entangled_witness.has_value());
  EXPECT_TRUE(member(*p.entangled_witness, x, kH3344));
}

TEST(TorusAction, FullTorusBreaksLockedMember) {
  const auto x = make_fk(4, 2);
  const auto g = locked_4231();
  EXPECT_FALSE(member(act_by_torus({1, 2, 1, 1}, g.matrix()), x, kH3344));
  // A point of K keeps it.
  EXPECT_TRUE(member(act_by_torus({1, 2, 1, 2}, g.matrix()), x, kH3344));
}

TEST(Sampling, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(9, 4), derive_seed(9, 4));
}

TEST(Sampling, RandomMembersAreMembers) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const auto x = random_skeletal(n, rng);
    const auto h = random_hessenberg_function(n, rng);
    const auto g = random_member(x, h, rng);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(member(*g, x, h));
  }
}
