#ifndef EGRP_LATTICE_HPP
#define EGRP_LATTICE_HPP

#include <optional>
#include <vector>

#include "group.hpp"
#include "subgroup.hpp"

namespace egrp
{

// Conjugacy classes, each sorted; classes ordered by their least member.
std::vector<std::vector<Elem>> const &conjugacy_classes(FiniteGroup const &G);

// class_size[x] = size of the conjugacy class of x.
// Size of the conjugacy class of each element, indexed by element.
std::vector<std::size_t> class_sizes(FiniteGroup const &G);

struct NormalLattice
{
  FiniteGroup parent;
  std::vector<Subgroup> normals;   // sorted by order, then member list
  std::vector<std::size_t> minimal; // indices into `normals`

  std::size_t index_of(Subgroup const &S) const;
  std::vector<Subgroup> minimal_subgroups() const;
};

// All normal subgroups: join closure of the normal closures of class
// representatives. Cached per group instance.
NormalLattice normal_subgroups(FiniteGroup const &G, Limits const &limits = {});

// Every subgroup, by fixpoint extension from the cyclic subgroups. Oracle
// grade; throws OrderBoundExceeded above limits.oracle_cap.
std::vector<Subgroup> all_subgroups(FiniteGroup const &G,
                                    Limits const &limits = {});

std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const &G);

// Least normal T (lattice order) with N n T = 1 and |N||T| = |G|.
std::optional<Subgroup> normal_complement(Subgroup const &N);

// A normal T, maximal by inclusion among normal subgroups meeting K
// trivially. Ties: largest order, then least member list.
Subgroup maximal_trivial_intersector(Subgroup const &K);

} // namespace egrp

#endif // EGRP_LATTICE_HPP
