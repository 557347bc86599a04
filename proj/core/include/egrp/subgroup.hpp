#ifndef EGRP_SUBGROUP_HPP
#define EGRP_SUBGROUP_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "group.hpp"

namespace egrp
{

// A subgroup of a FiniteGroup, given by its sorted member indices.
class Subgroup
{
public:
  // `members` must be closed under the parent's multiplication; use
  // from_members() for unchecked input.
  Subgroup(FiniteGroup parent, std::vector<Elem> members,
           std::optional<bool> normal = std::nullopt);

  // Throws InvalidParameter unless `members` is a subgroup.
  static Subgroup from_members(FiniteGroup parent, std::vector<Elem> members);

  FiniteGroup const &parent() const { return _parent; }
  std::vector<Elem> const &members() const { return _members; }
  std::size_t order() const { return _members.size(); }
  std::size_t index() const { return _parent.order() / _members.size(); }

  bool contains(Elem x) const { return _mask[x]; }
  bool is_trivial() const { return _members.size() == 1; }
  bool is_whole() const { return _members.size() == _parent.order(); }

  bool is_normal() const;
  bool is_abelian() const;
  std::optional<bool> normal_hint() const { return _normal; }

  bool is_subset_of(Subgroup const &other) const;

  // Greedy generating set: repeatedly adds the least member outside the
  // subgroup generated so far, preferring elements of larger order.
  std::vector<Elem> generators() const;

  // The subgroup as a standalone permutation group of the parent's degree.
  FiniteGroup as_group(Limits const &limits = {}) const;

  // "perm[d]{...}" literal of the subgroup's generators.
  std::string to_spec() const;

  friend bool operator==(Subgroup const &a, Subgroup const &b);

  // Order first, then member list.
  friend std::strong_ordering operator<=>(Subgroup const &a,
                                          Subgroup const &b);

private:
  FiniteGroup _parent;
  std::vector<Elem> _members;
  std::vector<bool> _mask;
  std::optional<bool> _normal;
};

Subgroup trivial_subgroup(FiniteGroup const &G);
Subgroup whole_group(FiniteGroup const &G);

Subgroup subgroup_generated(FiniteGroup const &G, std::span<Elem const> gens);

Subgroup normal_closure(FiniteGroup const &G, std::span<Elem const> gens);
Subgroup normal_closure(Subgroup const &S);

Subgroup centralizer(Subgroup const &S);
Subgroup normalizer(Subgroup const &S);
Subgroup center(FiniteGroup const &G);

Subgroup intersection(Subgroup const &A, Subgroup const &B);

// Subgroup generated by A and B.
Subgroup join(Subgroup const &A, Subgroup const &B);

// g S g^-1
Subgroup conjugate(Subgroup const &S, Elem g);

} // namespace egrp

#endif // EGRP_SUBGROUP_HPP
