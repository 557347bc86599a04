#include <set>

#include <gtest/gtest.h>

#include "egrp/errors.hpp"
#include "egrp/harness.hpp"
#include "egrp/homomorphism.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"
#include "oracles.hpp"

using namespace egrp;

TEST(ConjugacyClasses, SizesOfS4)
{
  auto G = symmetric(4);
  std::multiset<std::size_t> got;
  for (auto const &cls : conjugacy_classes(G))
    got.insert(cls.size());
  EXPECT_EQ(got, (std::multiset<std::size_t>{1, 3, 6, 6, 8}));

  auto sizes = class_sizes(G);
  for (auto const &cls : conjugacy_classes(G)) {
    for (Elem x : cls)
      EXPECT_EQ(sizes[x], cls.size());
  }
}

TEST(ConjugacyClasses, PartitionTheGroup)
{
  for (auto const &[name, G] : catalog(60)) {
    std::size_t total = 0;
    for (auto const &cls : conjugacy_classes(G)) {
      total += cls.size();
      EXPECT_EQ(G.order() % cls.size(), 0u) << name;
    }
    EXPECT_EQ(total, G.order()) << name;
  }
}

TEST(NormalSubgroups, Counts)
{
  EXPECT_EQ(normal_subgroups(symmetric(4)).normals.size(), 4u);
  EXPECT_EQ(normal_subgroups(alternating(5)).normals.size(), 2u);
  EXPECT_EQ(normal_subgroups(quaternion8()).normals.size(), 6u);
  EXPECT_EQ(normal_subgroups(dihedral(8)).normals.size(), 6u);
  EXPECT_EQ(normal_subgroups(cyclic(12)).normals.size(), 6u);
}

TEST(AllSubgroups, KnownCounts)
{
  EXPECT_EQ(all_subgroups(symmetric(4)).size(), 30u);
  EXPECT_EQ(all_subgroups(symmetric(3)).size(), 6u);
  EXPECT_EQ(all_subgroups(dihedral(8)).size(), 10u);
  EXPECT_EQ(all_subgroups(quaternion8()).size(), 6u);
  EXPECT_EQ(all_subgroups(alternating(4)).size(), 10u);
  EXPECT_EQ(all_subgroups(elementary_abelian(2, 3)).size(), 16u);
  Limits limits;
  EXPECT_THROW(all_subgroups(alternating(5), limits), OrderBoundExceeded);
}

TEST(NormalSubgroups, AgreeWithFilteredOracle)
{
  for (auto const &[name, G] : catalog(48)) {
    std::vector<std::vector<Elem>> expected;
    for (auto const &S : all_subgroups(G)) {
      if (oracle::normal_by_conjugation(G, S.members()))
        expected.push_back(S.members());
    }
    std::vector<std::vector<Elem>> got;
    for (auto const &N : normal_subgroups(G).normals)
      got.push_back(N.members());

    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << name;
  }
}

TEST(NormalSubgroups, ClosedUnderJoinAndMeet)
{
  for (auto const &[name, G] : catalog(120)) {
    auto lattice = normal_subgroups(G);
    std::set<std::vector<Elem>> members;
    for (auto const &N : lattice.normals)
      members.insert(N.members());
    for (auto const &A : lattice.normals) {
      for (auto const &B : lattice.normals) {
        EXPECT_TRUE(members.count(join(A, B).members())) << name;
        EXPECT_TRUE(members.count(intersection(A, B).members())) << name;
      }
    }
  }
}

TEST(MinimalNormal, Examples)
{
  auto m = minimal_normal_subgroups(symmetric(4));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].order(), 4u);
  EXPECT_EQ(minimal_normal_subgroups(elementary_abelian(2, 2)).size(), 3u);
  EXPECT_TRUE(minimal_normal_subgroups(cyclic(1)).empty());
}

TEST(NormalComplement, Examples)
{
  auto G = symmetric(3);
  for (auto const &N : normal_subgroups(G).normals) {
    auto T = normal_complement(N);
    if (N.is_trivial() || N.is_whole())
      EXPECT_TRUE(T.has_value());
    else
      EXPECT_FALSE(T.has_value());
  }

  auto P = direct_product(cyclic(2), cyclic(3)).group;
  for (auto const &N : normal_subgroups(P).normals) {
    auto T = normal_complement(N);
    ASSERT_TRUE(T.has_value());
    EXPECT_TRUE(intersection(N, *T).is_trivial());
    EXPECT_TRUE(join(N, *T).is_whole());
  }

  std::vector<Elem> gens{1};
  auto S = subgroup_generated(G, gens);
  EXPECT_THROW(normal_complement(S), NotNormal);
}

TEST(MaximalTrivialIntersector, IsMaximal)
{
  for (auto const &[name, G] : catalog(48)) {
    auto lattice = normal_subgroups(G);
    for (auto const &K : lattice.normals) {
      auto T = maximal_trivial_intersector(K);
      EXPECT_TRUE(T.is_normal());
      EXPECT_TRUE(intersection(T, K).is_trivial());
      for (auto const &N : lattice.normals) {
        if (N.order() > T.order() && T.is_subset_of(N)) {
          EXPECT_FALSE(intersection(N, K).is_trivial()) << name;
        }
      }
    }
  }
}
