#ifndef EGRP_ACTIONS_HPP
#define EGRP_ACTIONS_HPP

#include <span>
#include <variant>
#include <vector>

#include "essential.hpp"
#include "group.hpp"
#include "subgroup.hpp"

namespace egrp
{

// A left action of a FiniteGroup on {0, ..., set_size - 1}, tabulated for
// every element.
class GroupAction
{
public:
  // One permutation of the set per generator of G; throws InvalidAction if
  // they do not define a homomorphism into the symmetric group.
  static GroupAction from_generator_perms(FiniteGroup G, std::size_t set_size,
                                          std::span<Perm const> perms);

  // G acting on its own degree points.
  static GroupAction natural(FiniteGroup G);

  static GroupAction trivial(FiniteGroup G, std::size_t set_size);

  FiniteGroup const &group() const { return _group; }
  std::size_t set_size() const { return _set_size; }

  Point act(Elem g, Point x) const
  { return _table[static_cast<std::size_t>(g) * _set_size + x]; }

  // act(gh, x) = act(g, act(h, x)) for all g, h, x.
  bool satisfies_law_exhaustively() const;

private:
  GroupAction(FiniteGroup G, std::size_t set_size, std::vector<Point> table)
  : _group(std::move(G)), _set_size(set_size), _table(std::move(table))
  {}

  FiniteGroup _group;
  std::size_t _set_size;
  std::vector<Point> _table;
};

Subgroup kernel(GroupAction const &f);

// Elements of `within` fixing x.
Subgroup stabilizer(GroupAction const &f, Point x, Subgroup const &within);

// Points fixed by every element of S, ascending.
std::vector<Point> fixed_points(GroupAction const &f, Subgroup const &S);

// Left multiplication on the left cosets of S; the coset S itself is
// point 0. Throws OrderBoundExceeded if the index exceeds limits.max_order.
GroupAction coset_action(Subgroup const &S, Limits const &limits = {});

// An ordered pair x != y with Stab_H(x) contained in Stab_H(y).
struct ConditionFailed
{
  Point x = 0;
  Point y = 0;
};

// If no point stabilizer in H is contained in the stabilizer of another
// point, ncl(H) Ker(f) is essential in G. Returns the certificate for
// ncl(H) Ker(f), or the first violating pair. Throws PreconditionFailed if
// G is trivial.
std::variant<EssentialCertificate, ConditionFailed>
khma_certify(Subgroup const &H, GroupAction const &f);

bool is_self_normalizing(Subgroup const &S);
bool is_malnormal(Subgroup const &S);

struct WholeGroup
{};

using ClosureOutcome = std::variant<WholeGroup, EssentialCertificate>;

// ncl(S) = G, or the certificate of ncl(S). PreconditionFailed unless S is
// self-normalizing in a nontrivial group.
ClosureOutcome babcho_certify(Subgroup const &S);

// As above for a nontrivial malnormal S.
ClosureOutcome malnormal_certify(Subgroup const &S);

} // namespace egrp

#endif // EGRP_ACTIONS_HPP
