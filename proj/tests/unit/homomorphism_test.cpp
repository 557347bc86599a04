#include <random>

#include <gtest/gtest.h>

#include "egrp/errors.hpp"
#include "egrp/homomorphism.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"

using namespace egrp;

TEST(Homomorphism, SignMapOnS4)
{
  auto G = symmetric(4);
  auto C = cyclic(2);
  std::vector<Elem> images;
  for (auto const &g : G.generators()) {
    std::size_t transpositions = 0;
    for (auto const &c : g.cycles())
      transpositions += c.size() - 1;
    images.push_back(static_cast<Elem>(transpositions % 2));
  }
  auto sign = Homomorphism::from_generator_images(G, C, images);
  EXPECT_TRUE(sign.satisfies_law_exhaustively());
  EXPECT_TRUE(sign.is_epi());
  EXPECT_EQ(sign.kernel().order(), 12u);
}

TEST(Homomorphism, RejectsNonHomomorphism)
{
  auto G = cyclic(4);
  auto H = cyclic(3);
  EXPECT_THROW(Homomorphism::from_generator_images(G, H, std::vector<Elem>{1}),
               NotAHomomorphism);
  EXPECT_THROW(Homomorphism::from_map(G, H, {0, 1, 2, 0}), NotAHomomorphism);
}

TEST(Homomorphism, IdentityAndInverse)
{
  auto G = dihedral(10);
  auto id = Homomorphism::identity(G);
  EXPECT_TRUE(id.is_iso());
  auto inv = id.inverse();
  for (Elem a = 0; a < G.order(); ++a)
    EXPECT_EQ(inv(a), a);
  EXPECT_THROW(Homomorphism::from_map(G, cyclic(1),
                                      std::vector<Elem>(G.order(), 0))
                 .inverse(),
               PreconditionFailed);
}

TEST(Quotient, S4ByKlein)
{
  auto G = symmetric(4);
  auto lattice = normal_subgroups(G);
  auto it = std::find_if(lattice.normals.begin(), lattice.normals.end(),
                         [](auto const &N) { return N.order() == 4; });
  ASSERT_NE(it, lattice.normals.end());
  auto Q = quotient(*it);
  EXPECT_EQ(Q.group.order(), 6u);
  EXPECT_TRUE(is_isomorphic(Q.group, symmetric(3)));
  EXPECT_EQ(Q.projection.kernel(), *it);
}

TEST(Quotient, RejectsNonNormal)
{
  auto G = symmetric(3);
  std::vector<Elem> gens{1};
  auto S = subgroup_generated(G, gens);
  ASSERT_EQ(S.order(), 2u);
  EXPECT_THROW(quotient(S), NotNormal);
}

TEST(Quotient, KernelPropertyOverLattices)
{
  FiniteGroup const groups[] = {symmetric(4), dihedral(12), quaternion8(),
                                cyclic(12), alternating(4)};
  for (auto const &G : groups) {
    for (auto const &N : normal_subgroups(G).normals) {
      auto Q = quotient(N);
      EXPECT_EQ(Q.group.order() * N.order(), G.order());
      EXPECT_EQ(Q.projection.kernel(), N);
      EXPECT_TRUE(Q.projection.is_epi());
      EXPECT_TRUE(Q.projection.satisfies_law_exhaustively());
    }
  }
}

TEST(DirectProduct, FactorsAreNormalComplements)
{
  FiniteGroup const groups[] = {cyclic(2), symmetric(3), quaternion8(),
                                cyclic(5), dihedral(8)};
  for (auto const &A : groups) {
    for (auto const &B : groups) {
      auto P = direct_product(A, B);
      EXPECT_EQ(P.group.order(), A.order() * B.order());
      EXPECT_TRUE(P.left.is_normal());
      EXPECT_TRUE(P.right.is_normal());
      EXPECT_TRUE(intersection(P.left, P.right).is_trivial());
      EXPECT_TRUE(join(P.left, P.right).is_whole());
      EXPECT_TRUE(P.embed_left.is_mono());
      EXPECT_EQ(P.embed_left.image(), P.left);
      EXPECT_EQ(P.embed_right.image(), P.right);
      EXPECT_EQ(center(P.group).order(),
                center(A).order() * center(B).order());
    }
  }
}

TEST(Isomorphism, Examples)
{
  EXPECT_TRUE(is_isomorphic(cyclic(6), direct_product(cyclic(2), cyclic(3)).group));
  EXPECT_FALSE(is_isomorphic(cyclic(4), elementary_abelian(2, 2)));
  EXPECT_FALSE(is_isomorphic(direct_product(alternating(5), cyclic(2)).group,
                             symmetric(5)));
  auto f = find_isomorphism(dihedral(4), elementary_abelian(2, 2));
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->is_iso());
  EXPECT_TRUE(f->satisfies_law_exhaustively());
}

TEST(Homomorphism, ComposeAndImages)
{
  auto G = symmetric(4);
  auto id = Homomorphism::identity(G);
  auto twice = compose(id, id);
  EXPECT_TRUE(twice.is_iso());
  EXPECT_TRUE(twice.image().is_whole());
  EXPECT_THROW(compose(Homomorphism::identity(cyclic(2)), id),
               InvalidParameter);
}
