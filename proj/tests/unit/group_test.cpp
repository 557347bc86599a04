#include <random>

#include <gtest/gtest.h>

#include "egrp/errors.hpp"
#include "egrp/group.hpp"
#include "egrp/named.hpp"
#include "oracles.hpp"

using namespace egrp;

TEST(FiniteGroup, DefaultIsTrivial)
{
  FiniteGroup G;
  EXPECT_TRUE(G.is_trivial());
  EXPECT_EQ(G.degree(), 1u);
}

TEST(FiniteGroup, ClosureOfS3)
{
  auto G = FiniteGroup::close(3, {Perm::from_cycles(3, {{0, 1}}),
                                  Perm::from_cycles(3, {{0, 1, 2}})});
  EXPECT_EQ(G.order(), 6u);
  EXPECT_FALSE(G.is_abelian());
  EXPECT_TRUE(G.element(0).is_identity());
}

TEST(FiniteGroup, OrderBound)
{
  Limits limits;
  limits.max_order = 100;
  EXPECT_THROW(FiniteGroup::close(5, symmetric(5).generators(), limits),
               OrderBoundExceeded);
}

TEST(FiniteGroup, BreadthFirstWords)
{
  auto G = symmetric(4);
  for (Elem i = 1; i < G.order(); ++i) {
    Elem parent = G.word_parent(i);
    EXPECT_LT(parent, i);
    auto const &gen = G.generators()[G.word_generator(i)];
    EXPECT_EQ(G.element(i), gen * G.element(parent));
  }
}

TEST(FiniteGroup, TablesMatchComposition)
{
  auto G = dihedral(12);
  for (Elem a = 0; a < G.order(); ++a) {
    EXPECT_EQ(G.element(G.inv(a)), G.element(a).inverse());
    for (Elem b = 0; b < G.order(); ++b)
      EXPECT_EQ(G.element(G.mul(a, b)), G.element(a) * G.element(b));
  }
}

TEST(FiniteGroup, ElementOrderAndPower)
{
  auto G = cyclic(12);
  for (Elem a = 0; a < G.order(); ++a) {
    EXPECT_EQ(G.element_order(a), G.element(a).order());
    EXPECT_EQ(G.pow(a, static_cast<long long>(G.element_order(a))), 0u);
    EXPECT_EQ(G.pow(a, -1), G.inv(a));
  }
}

TEST(FiniteGroup, RandomClosureAgreesWithOracle)
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t degree = 2 + rng() % 5;
    std::vector<Perm> gens;
    std::size_t count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(oracle::random_perm(degree, rng));

    auto G = FiniteGroup::close(degree, gens);
    auto expected = oracle::closure(degree, gens);
    EXPECT_EQ(oracle::element_set(G), expected);

    // Closure is deterministic.
    auto H = FiniteGroup::close(degree, gens);
    EXPECT_EQ(G, H);
    EXPECT_EQ(G.fingerprint(), H.fingerprint());
    EXPECT_FALSE(G.same_instance(H));

    // Lagrange on cyclic subgroups.
    for (Elem a = 0; a < G.order(); ++a)
      EXPECT_EQ(G.order() % G.element_order(a), 0u);
  }
}
