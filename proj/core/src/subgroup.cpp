#include "egrp/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "closure.hpp"
#include "egrp/errors.hpp"

namespace egrp
{

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> members,
                   std::optional<bool> normal)
: _parent(std::move(parent)),
  _members(std::move(members)),
  _mask(_parent.order(), false),
  _normal(normal)
{
  std::sort(_members.begin(), _members.end());
  _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
  for (Elem x : _members)
    _mask[x] = true;
}

Subgroup Subgroup::from_members(FiniteGroup parent, std::vector<Elem> members)
{
  for (Elem x : members) {
    if (x >= parent.order())
      throw InvalidParameter("element index out of range");
  }

  Subgroup result(std::move(parent), std::move(members));
  auto const &G = result.parent();

  if (result._members.empty() || !result.contains(identity_elem))
    throw InvalidParameter("subgroup must contain the identity");

  for (Elem a : result._members) {
    if (!result.contains(G.inv(a)))
      throw InvalidParameter("member set is not inverse closed");
    for (Elem b : result._members) {
      if (!result.contains(G.mul(a, b)))
        throw InvalidParameter("member set is not closed under products");
    }
  }

  return result;
}

bool Subgroup::is_normal() const
{
  if (_normal)
    return *_normal;

  auto const gens = generators();
  for (Elem x : _parent.generator_indices()) {
    for (Elem s : gens) {
      if (!contains(_parent.conj(x, s)))
        return false;
    }
  }
  return true;
}

bool Subgroup::is_abelian() const
{
  auto const gens = generators();
  for (Elem a : gens) {
    for (Elem b : gens) {
      if (_parent.mul(a, b) != _parent.mul(b, a))
        return false;
    }
  }
  return true;
}

bool Subgroup::is_subset_of(Subgroup const &other) const
{
  if (order() > other.order())
    return false;

  return std::all_of(_members.begin(), _members.end(),
                     [&](Elem x) { return other.contains(x); });
}

std::vector<Elem> Subgroup::generators() const
{
  std::vector<Elem> candidates(_members.begin() + 1, _members.end());
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](Elem a, Elem b) {
                     return _parent.element_order(a) > _parent.element_order(b);
                   });

  detail::IndexClosure closure(_parent);
  for (Elem c : candidates) {
    if (closure.size() == order())
      break;
    closure.add(c);
  }
  return closure.used_generators();
}

FiniteGroup Subgroup::as_group(Limits const &limits) const
{
  std::vector<Perm> gens;
  for (Elem g : generators())
    gens.push_back(_parent.element(g));
  return FiniteGroup::close(_parent.degree(), std::move(gens), limits);
}

std::string Subgroup::to_spec() const
{
  std::ostringstream ss;
  ss << "perm[" << _parent.degree() << "]{";

  auto const gens = generators();
  if (gens.empty())
    ss << "()";

  for (std::size_t i = 0; i < gens.size(); ++i)
    ss << (i ? "," : "") << _parent.element(gens[i]).to_string();

  ss << '}';
  return ss.str();
}

bool operator==(Subgroup const &a, Subgroup const &b)
{
  return a._members == b._members && a._parent == b._parent;
}

std::strong_ordering operator<=>(Subgroup const &a, Subgroup const &b)
{
  if (auto c = a.order() <=> b.order(); c != 0)
    return c;
  return a._members <=> b._members;
}

Subgroup trivial_subgroup(FiniteGroup const &G)
{ return Subgroup(G, {identity_elem}, true); }

Subgroup whole_group(FiniteGroup const &G)
{
  std::vector<Elem> all(G.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(G, std::move(all), true);
}

Subgroup subgroup_generated(FiniteGroup const &G, std::span<Elem const> gens)
{
  detail::IndexClosure closure(G);
  for (Elem g : gens) {
    if (g >= G.order())
      throw InvalidParameter("element index out of range");
    closure.add(g);
  }
  return Subgroup(G, closure.sorted_members());
}

Subgroup normal_closure(FiniteGroup const &G, std::span<Elem const> gens)
{
  detail::IndexClosure closure(G);
  for (Elem g : gens)
    closure.add(g);

  for (bool changed = true; changed;) {
    changed = false;
    // used_generators() grows while we iterate; index-based on purpose
    for (std::size_t i = 0; i < closure.used_generators().size(); ++i) {
      Elem const h = closure.used_generators()[i];
      for (Elem x : G.generator_indices()) {
        if (closure.add(G.conj(x, h)))
          changed = true;
      }
    }
  }

  return Subgroup(G, closure.sorted_members(), true);
}

Subgroup normal_closure(Subgroup const &S)
{
  auto const gens = S.generators();
  return normal_closure(S.parent(), gens);
}

Subgroup centralizer(Subgroup const &S)
{
  auto const &G = S.parent();
  auto const gens = S.generators();

  std::vector<Elem> members;
  for (Elem g = 0; g < G.order(); ++g) {
    bool commutes = std::all_of(gens.begin(), gens.end(), [&](Elem s) {
      return G.mul(g, s) == G.mul(s, g);
    });
    if (commutes)
      members.push_back(g);
  }
  return Subgroup(G, std::move(members));
}

Subgroup normalizer(Subgroup const &S)
{
  auto const &G = S.parent();
  auto const gens = S.generators();

  std::vector<Elem> members;
  for (Elem g = 0; g < G.order(); ++g) {
    bool normalizes = std::all_of(gens.begin(), gens.end(), [&](Elem s) {
      return S.contains(G.conj(g, s));
    });
    if (normalizes)
      members.push_back(g);
  }
  return Subgroup(G, std::move(members));
}

Subgroup center(FiniteGroup const &G)
{
  auto const &gens = G.generator_indices();

  std::vector<Elem> members;
  for (Elem g = 0; g < G.order(); ++g) {
    bool central = std::all_of(gens.begin(), gens.end(), [&](Elem s) {
      return G.mul(g, s) == G.mul(s, g);
    });
    if (central)
      members.push_back(g);
  }
  return Subgroup(G, std::move(members), true);
}

Subgroup intersection(Subgroup const &A, Subgroup const &B)
{
  std::vector<Elem> members;
  std::set_intersection(A.members().begin(), A.members().end(),
                        B.members().begin(), B.members().end(),
                        std::back_inserter(members));

  std::optional<bool> normal;
  if (A.normal_hint().value_or(false) && B.normal_hint().value_or(false))
    normal = true;

  return Subgroup(A.parent(), std::move(members), normal);
}

Subgroup join(Subgroup const &A, Subgroup const &B)
{
  if (A.is_subset_of(B))
    return B;
  if (B.is_subset_of(A))
    return A;

  auto gens = A.generators();
  auto const bgens = B.generators();
  gens.insert(gens.end(), bgens.begin(), bgens.end());

  auto result = subgroup_generated(A.parent(), gens);
  if (A.normal_hint().value_or(false) && B.normal_hint().value_or(false))
    return Subgroup(A.parent(), result.members(), true);
  return result;
}

Subgroup conjugate(Subgroup const &S, Elem g)
{
  auto const &G = S.parent();

  std::vector<Elem> members;
  members.reserve(S.order());
  for (Elem s : S.members())
    members.push_back(G.conj(g, s));

  return Subgroup(G, std::move(members), S.normal_hint());
}

} // namespace egrp
