#include <gtest/gtest.h>

#include "egrp/errors.hpp"
#include "egrp/homomorphism.hpp"
#include "egrp/named.hpp"
#include "egrp/subgroup.hpp"

using namespace egrp;

TEST(Named, Orders)
{
  EXPECT_EQ(cyclic(1).order(), 1u);
  EXPECT_EQ(cyclic(7).order(), 7u);
  EXPECT_EQ(dihedral(4).order(), 4u);
  EXPECT_EQ(dihedral(10).order(), 10u);
  EXPECT_EQ(symmetric(1).order(), 1u);
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(alternating(2).order(), 1u);
  EXPECT_EQ(alternating(5).order(), 60u);
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_EQ(elementary_abelian(3, 2).order(), 9u);
  EXPECT_EQ(elementary_abelian(2, 3).order(), 8u);
}

TEST(Named, ValidationRejectsBadParameters)
{
  EXPECT_THROW(validate({NamedKind::dihedral, 7, 1}), InvalidParameter);
  EXPECT_THROW(validate({NamedKind::dihedral, 2, 1}), InvalidParameter);
  EXPECT_THROW(validate({NamedKind::cyclic, 0, 1}), InvalidParameter);
  EXPECT_THROW(validate({NamedKind::elementary_abelian, 4, 2}),
               InvalidParameter);
  EXPECT_NO_THROW(validate({NamedKind::dihedral, 4, 1}));
}

TEST(Named, ToString)
{
  EXPECT_EQ(to_string({NamedKind::cyclic, 4, 1}), "C4");
  EXPECT_EQ(to_string({NamedKind::elementary_abelian, 2, 3}), "E2^3");
  EXPECT_EQ(to_string({NamedKind::quaternion8, 8, 1}), "Q8");
}

TEST(Named, StructuralFacts)
{
  EXPECT_TRUE(dihedral(4).is_abelian());
  EXPECT_TRUE(is_isomorphic(dihedral(6), symmetric(3)));
  EXPECT_EQ(center(quaternion8()).order(), 2u);
  EXPECT_EQ(center(dihedral(8)).order(), 2u);
  EXPECT_FALSE(is_isomorphic(quaternion8(), dihedral(8)));
  EXPECT_TRUE(elementary_abelian(2, 2).is_abelian());

  auto Q = quaternion8();
  std::size_t involutions = 0;
  for (Elem a = 1; a < Q.order(); ++a)
    involutions += Q.element_order(a) == 2;
  EXPECT_EQ(involutions, 1u);
}

TEST(Named, MakeNamedRespectsBound)
{
  Limits limits;
  limits.max_order = 100;
  EXPECT_THROW(make_named({NamedKind::symmetric, 5, 1}, limits),
               OrderBoundExceeded);
  EXPECT_EQ(make_named({NamedKind::symmetric, 4, 1}, limits).order(), 24u);
}
