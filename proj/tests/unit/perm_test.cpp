#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "egrp/errors.hpp"
#include "egrp/perm.hpp"
#include "oracles.hpp"

using namespace egrp;

TEST(Perm, IdentityByDefault)
{
  Perm p(4);
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.order(), 1u);
  EXPECT_EQ(p.to_string(), "()");
}

TEST(Perm, RejectsNonBijection)
{
  EXPECT_THROW(Perm(std::vector<Point>{0, 0, 1}), InvalidParameter);
  EXPECT_THROW(Perm(std::vector<Point>{0, 3, 1}), InvalidParameter);
}

TEST(Perm, FromCyclesAndBack)
{
  auto p = Perm::from_cycles(5, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(p[0], 1u);
  EXPECT_EQ(p[2], 0u);
  EXPECT_EQ(p[3], 4u);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.to_string(), "(0 1 2)(3 4)");
}

TEST(Perm, FromCyclesRejectsRepeatedPoint)
{
  EXPECT_THROW(Perm::from_cycles(4, {{0, 1}, {1, 2}}), InvalidParameter);
  EXPECT_THROW(Perm::from_cycles(3, {{0, 3}}), InvalidParameter);
}

TEST(Perm, ComposeAppliesRightFactorFirst)
{
  auto a = Perm::from_cycles(3, {{0, 1}});
  auto b = Perm::from_cycles(3, {{1, 2}});
  auto ab = a * b;
  EXPECT_EQ(ab[1], a[b[1]]);
  EXPECT_EQ(ab.to_string(), "(0 1 2)");
}

TEST(Perm, ComposeDegreeMismatch)
{
  EXPECT_THROW(Perm(3) * Perm(4), DegreeMismatch);
}

TEST(Perm, RandomInverseAndOrderProperties)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t degree = 1 + rng() % 9;
    auto p = oracle::random_perm(degree, rng);
    auto q = oracle::random_perm(degree, rng);

    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_EQ((p * q).inverse(), q.inverse() * p.inverse());

    std::size_t expected = 1;
    for (auto const &c : p.cycles())
      expected = std::lcm(expected, c.size());
    EXPECT_EQ(p.order(), expected);

    auto back = Perm::from_cycles(degree, p.cycles());
    EXPECT_EQ(back, p);
  }
}

TEST(Perm, ShiftedActsOnOffsetBlock)
{
  auto p = Perm::from_cycles(2, {{0, 1}}).shifted(3, 6);
  EXPECT_EQ(p.degree(), 6u);
  EXPECT_EQ(p.to_string(), "(3 4)");
}
