#include <random>
#include <set>

#include <gtest/gtest.h>

#include "egrp/errors.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"
#include "egrp/subgroup.hpp"
#include "oracles.hpp"

using namespace egrp;

namespace
{

std::vector<Elem> centralizer_oracle(FiniteGroup const &G,
                                     std::vector<Elem> const &S)
{
  std::vector<Elem> out;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem s : S)
      ok = ok && G.mul(g, s) == G.mul(s, g);
    if (ok)
      out.push_back(g);
  }
  return out;
}

std::vector<Elem> normalizer_oracle(FiniteGroup const &G,
                                    std::vector<Elem> const &S)
{
  std::set<Elem> set(S.begin(), S.end());
  std::vector<Elem> out;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem s : S)
      ok = ok && set.count(G.conj(g, s));
    if (ok)
      out.push_back(g);
  }
  return out;
}

} // namespace

TEST(Subgroup, FromMembersValidates)
{
  auto G = symmetric(3);
  EXPECT_THROW(Subgroup::from_members(G, {0, 1, 2}), InvalidParameter);
  EXPECT_NO_THROW(Subgroup::from_members(G, {0}));
}

TEST(Subgroup, GeneratedAndIndex)
{
  auto G = symmetric(4);
  std::vector<Elem> gens{1};
  auto S = subgroup_generated(G, gens);
  EXPECT_EQ(S.order(), G.element_order(1));
  EXPECT_EQ(S.index() * S.order(), 24u);
  EXPECT_TRUE(S.contains(0));
}

TEST(Subgroup, CenterExamples)
{
  EXPECT_TRUE(center(symmetric(4)).is_trivial());
  EXPECT_TRUE(center(cyclic(6)).is_whole());
  EXPECT_EQ(center(dihedral(12)).order(), 2u);
}

TEST(Subgroup, NormalClosureOfTransposition)
{
  auto G = symmetric(4);
  auto t = G.index_of(Perm::from_cycles(4, {{0, 1}}));
  ASSERT_TRUE(t);
  std::vector<Elem> gens{*t};
  EXPECT_TRUE(normal_closure(G, gens).is_whole());

  auto c = G.index_of(Perm::from_cycles(4, {{0, 1}, {2, 3}}));
  std::vector<Elem> gens2{*c};
  EXPECT_EQ(normal_closure(G, gens2).order(), 4u);
}

TEST(Subgroup, ToSpecRoundTrip)
{
  auto G = symmetric(3);
  EXPECT_EQ(trivial_subgroup(G).to_spec(), "perm[3]{()}");
  auto A = whole_group(G);
  auto H = A.as_group();
  EXPECT_EQ(H.order(), 6u);
}

TEST(Subgroup, RandomPropertiesAgainstOracles)
{
  std::mt19937 rng(3);
  FiniteGroup const groups[] = {symmetric(4), dihedral(16), quaternion8(),
                                alternating(4), cyclic(12)};
  for (auto const &G : groups) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Elem> gens{static_cast<Elem>(rng() % G.order())};
      if (rng() % 2)
        gens.push_back(static_cast<Elem>(rng() % G.order()));
      auto S = subgroup_generated(G, gens);

      EXPECT_EQ(G.order() % S.order(), 0u);
      EXPECT_EQ(centralizer(S).members(), centralizer_oracle(G, S.members()));
      EXPECT_EQ(normalizer(S).members(), normalizer_oracle(G, S.members()));
      EXPECT_EQ(S.is_normal(), oracle::normal_by_conjugation(G, S.members()));

      auto N = normal_closure(S);
      EXPECT_TRUE(oracle::normal_by_conjugation(G, N.members()));
      EXPECT_TRUE(S.is_subset_of(N));

      Elem g = static_cast<Elem>(rng() % G.order());
      auto C = conjugate(S, g);
      EXPECT_EQ(C.order(), S.order());

      auto T = subgroup_generated(G, std::vector<Elem>{static_cast<Elem>(rng() % G.order())});
      auto J = join(S, T);
      auto M = intersection(S, T);
      EXPECT_TRUE(S.is_subset_of(J));
      EXPECT_TRUE(T.is_subset_of(J));
      EXPECT_TRUE(M.is_subset_of(S));
      EXPECT_TRUE(M.is_subset_of(T));
      EXPECT_EQ(G.order() % J.order(), 0u);
    }
  }
}
