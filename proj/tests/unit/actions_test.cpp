#include <gtest/gtest.h>

#include "egrp/actions.hpp"
#include "egrp/errors.hpp"
#include "egrp/essential.hpp"
#include "egrp/harness.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"

using namespace egrp;

namespace
{

Subgroup subgroup_of_order(FiniteGroup const &G, std::size_t order)
{
  for (auto const &S : all_subgroups(G)) {
    if (S.order() == order)
      return S;
  }
  throw std::runtime_error("no subgroup of that order");
}

Subgroup normal_of_order(FiniteGroup const &G, std::size_t order)
{
  for (auto const &N : normal_subgroups(G).normals) {
    if (N.order() == order)
      return N;
  }
  throw std::runtime_error("no normal subgroup of that order");
}

} // namespace

TEST(GroupAction, NaturalAndStabilizer)
{
  auto G = symmetric(4);
  auto f = GroupAction::natural(G);
  EXPECT_TRUE(f.satisfies_law_exhaustively());
  EXPECT_EQ(stabilizer(f, 0, whole_group(G)).order(), 6u);
  EXPECT_TRUE(kernel(f).is_trivial());

  auto t = G.index_of(Perm::from_cycles(4, {{0, 1}}));
  auto T = subgroup_generated(G, std::vector<Elem>{*t});
  EXPECT_EQ(fixed_points(f, T), (std::vector<Point>{2, 3}));
}

TEST(GroupAction, RejectsInvalidPerms)
{
  auto G = cyclic(3);
  std::vector<Perm> perms{Perm::from_cycles(2, {{0, 1}})};
  EXPECT_THROW(GroupAction::from_generator_perms(G, 2, perms), InvalidAction);
  EXPECT_THROW(GroupAction::from_generator_perms(G, 3, perms), InvalidAction);
}

TEST(CosetAction, Examples)
{
  auto G = symmetric(4);
  auto P = subgroup_of_order(G, 8);
  auto f = coset_action(P);
  EXPECT_EQ(f.set_size(), 3u);
  EXPECT_EQ(stabilizer(f, 0, whole_group(G)), P);

  auto whole = coset_action(whole_group(G));
  EXPECT_EQ(whole.set_size(), 1u);
  EXPECT_TRUE(kernel(whole).is_whole());

  auto regular = coset_action(trivial_subgroup(G));
  EXPECT_EQ(regular.set_size(), 24u);
  EXPECT_TRUE(kernel(regular).is_trivial());
}

TEST(CosetAction, StabilizerOfBaseCosetIsSubgroup)
{
  for (auto const &[name, G] : catalog(24)) {
    for (auto const &S : all_subgroups(G)) {
      auto f = coset_action(S);
      EXPECT_EQ(stabilizer(f, 0, whole_group(G)), S) << name;
      EXPECT_EQ(f.set_size(), S.index());
    }
  }
}

TEST(Khma, AlternatingInSymmetric)
{
  for (unsigned n : {4u, 5u}) {
    auto G = symmetric(n);
    auto A = normal_of_order(G, G.order() / 2);
    auto out = khma_certify(A, GroupAction::natural(G));
    ASSERT_TRUE(std::holds_alternative<EssentialCertificate>(out)) << n;
    auto const &cert = std::get<EssentialCertificate>(out);
    EXPECT_EQ(cert.subject, A);
    EXPECT_TRUE(cert.essential);
  }
}

TEST(Khma, TrivialActionFails)
{
  auto G = elementary_abelian(2, 2);
  auto out = khma_certify(whole_group(G), GroupAction::trivial(G, 2));
  ASSERT_TRUE(std::holds_alternative<ConditionFailed>(out));
  auto const &bad = std::get<ConditionFailed>(out);
  EXPECT_NE(bad.x, bad.y);
  EXPECT_THROW(khma_certify(whole_group(cyclic(1)),
                            GroupAction::natural(cyclic(1))),
               PreconditionFailed);
}

TEST(SelfNormalizing, Examples)
{
  auto G = symmetric(4);
  auto P = subgroup_of_order(G, 8);
  EXPECT_TRUE(is_self_normalizing(P));
  EXPECT_TRUE(std::holds_alternative<WholeGroup>(babcho_certify(P)));

  auto C = cyclic(4);
  auto two = normal_of_order(C, 2);
  EXPECT_FALSE(is_self_normalizing(two));
  EXPECT_THROW(babcho_certify(two), PreconditionFailed);
}

TEST(Malnormal, ReflectionInD10)
{
  auto G = dihedral(10);
  auto R = subgroup_of_order(G, 2);
  EXPECT_TRUE(is_malnormal(R));
  EXPECT_TRUE(std::holds_alternative<WholeGroup>(malnormal_certify(R)));
  EXPECT_THROW(malnormal_certify(trivial_subgroup(G)), PreconditionFailed);
}

TEST(Malnormal, ComplementInFrobeniusGroup)
{
  auto G = alternating(4);
  auto S = subgroup_of_order(G, 3);
  EXPECT_TRUE(is_malnormal(S));
  auto out = malnormal_certify(S);
  EXPECT_TRUE(std::holds_alternative<WholeGroup>(out));
}
