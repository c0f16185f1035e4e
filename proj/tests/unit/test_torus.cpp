#include <gtest/gtest.h>

#include <random>

#include "hessgkm/combinat/constructions.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/hess/sampling.hpp"
#include "hessgkm/torus/torus.hpp"

using namespace hessgkm;

namespace {

Character chr(std::initializer_list<std::int64_t> v) { return Character{std::vector<std::int64_t>(v)}; }

}  // namespace

TEST(Character, RatioUsesTrivialZeroIndex) {
  EXPECT_EQ(Character::ratio(4, 3, 1), chr({-1, 0, 1, 0}));
  EXPECT_EQ(Character::ratio(4, 0, 2), chr({0, -1, 0, 0}));
  EXPECT_EQ(chr({1, -2, 0}).evaluate({2, 3, 5}), mpq_class(2, 9));
  EXPECT_EQ(chr({1, -1, 0, 2}).to_string(), "e1 - e2 + 2e4");
}

TEST(Subtorus, EmptyIsFull) {
  const auto k = subtorus_from_characters({}, 4);
  EXPECT_TRUE(k.is_full());
  EXPECT_EQ(k.codimension(), 0);
  EXPECT_EQ(k, Subtorus::full(4));
}

TEST(Subtorus, Saturates) {
  const Character chi = chr({1, -1, 0, 1});
  EXPECT_EQ(subtorus_from_characters({chi + chi}, 4), subtorus_from_characters({chi}, 4));
  EXPECT_TRUE(subtorus_from_characters({chi + chi + chi}, 4).kills(chi));
}

TEST(Subtorus, DependentConstraintsCollapse) {
  const auto k = subtorus_from_characters({Character::ratio(4, 3, 1), Character::ratio(4, 1, 3)}, 4);
  EXPECT_EQ(k.codimension(), 1);
  EXPECT_THROW(subtorus_from_characters({chr({1, 0})}, 3), InvalidArgument);
}

TEST(Subtorus, MeetAndContainment) {
  const auto a = subtorus_from_characters({chr({1, -1, 0})}, 3);
  const auto b = subtorus_from_characters({chr({0, 1, -1})}, 3);
  const auto m = a.meet(b);
  EXPECT_EQ(m.codimension(), 2);
  EXPECT_TRUE(m.is_subtorus_of(a));
  EXPECT_TRUE(m.is_subtorus_of(b));
  EXPECT_FALSE(a.is_subtorus_of(b));
  EXPECT_TRUE(m.kills(chr({1, 0, -1})));
}

TEST(Subtorus, CocharactersSpanKernel) {
  const auto k = subtorus_from_characters({chr({2, -1, 0, 3}), chr({0, 1, 1, -1})}, 4);
  const auto lambdas = k.cocharacter_basis();
  EXPECT_EQ(static_cast<int>(lambdas.size()), k.dimension());
  for (const auto& l : lambdas) EXPECT_TRUE(cochar_in_subtorus(l, k));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto t = k.sample_point(rng);
    for (const auto& chi : k.basis()) EXPECT_EQ(chi.evaluate(t), 1);
  }
}

TEST(CanonicalK, F2Dimension4) {
  const auto k = canonical_k(make_fk(4, 2));
  EXPECT_FALSE(k.degenerate);
  EXPECT_EQ(k.torus.codimension(), 1);
  // (e3 - e1) - (e4 - e2)
  EXPECT_EQ(k.torus, subtorus_from_characters({chr({-1, 1, 1, -1})}, 4));
}

TEST(CanonicalK, F1IsFullAndEmptyIsDegenerate) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(canonical_k(make_fk(n, 1)).torus.is_full());
  const auto empty = canonical_k(SkeletalNilpotent(4));
  EXPECT_TRUE(empty.degenerate);
  EXPECT_TRUE(empty.torus.is_full());
}

TEST(CanonicalK, CodimensionOfFk) {
  EXPECT_EQ(canonical_k(make_fk(4, 3)).torus.codimension(), 2);
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) EXPECT_EQ(canonical_k(make_fk(n, k)).torus.codimension(), k - 1);
  }
}

TEST(Cocharacter, CircleOfF2) {
  const auto w = circle_permutation(make_fk(4, 2));
  const auto lambda = Cocharacter::conjugated_regular(w);
  EXPECT_EQ(lambda.exponents, (std::vector<std::int64_t>{1, 3, 2, 4}));
  const auto k = canonical_k(make_fk(4, 2)).torus;
  EXPECT_TRUE(cochar_in_subtorus(lambda, k));
  EXPECT_TRUE(cochar_in_subtorus(Cocharacter::regular(4), k));
  EXPECT_TRUE(cochar_in_subtorus(Cocharacter{{1, 1, 1, 1}}, k));
  EXPECT_FALSE(cochar_in_subtorus(Cocharacter{{1, 0, 0, 0}}, k));
}

TEST(Cocharacter, CircleLiesInCanonicalK) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const auto x = random_skeletal(n, rng);
    if (x.empty()) continue;
    EXPECT_TRUE(cochar_in_subtorus(Cocharacter::conjugated_regular(circle_permutation(x)), canonical_k(x).torus));
  }
}

TEST(Regular, Cases) {
  for (int n = 4; n <= 7; ++n) EXPECT_TRUE(is_regular(canonical_k(make_fk(n, 2)).torus));
  EXPECT_FALSE(is_regular(subtorus_from_characters({chr({1, -1, 0, 0})}, 4)));
  EXPECT_TRUE(is_regular(Subtorus::full(4)));
}
