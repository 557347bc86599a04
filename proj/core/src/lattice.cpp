#include "egrp/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "closure.hpp"
#include "egrp/errors.hpp"
#include "group_data.hpp"

namespace egrp
{

namespace detail
{

struct ClassCache
{
  std::vector<std::vector<Elem>> classes;
  std::vector<std::size_t> class_size;
};

struct LatticeCache
{
  std::vector<std::vector<Elem>> normals;
  std::vector<std::size_t> minimal;
};

} // namespace detail

namespace
{

bool subset_of(std::vector<Elem> const &a, std::vector<Elem> const &b)
{ return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool meets_trivially(std::vector<Elem> const &a, std::vector<Elem> const &b)
{
  // both sorted and contain the identity
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      if (++common > 1)
        return false;
      ++i;
      ++j;
    }
  }
  return true;
}

bool lattice_less(std::vector<Elem> const &a, std::vector<Elem> const &b)
{
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

std::shared_ptr<detail::ClassCache const> compute_classes(FiniteGroup const &G)
{
  auto cache = std::make_shared<detail::ClassCache>();
  cache->class_size.assign(G.order(), 0);

  std::vector<bool> seen(G.order(), false);
  for (Elem x = 0; x < G.order(); ++x) {
    if (seen[x])
      continue;

    std::vector<Elem> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem g : G.generator_indices()) {
        Elem y = G.conj(g, orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }

    std::sort(orbit.begin(), orbit.end());
    for (Elem y : orbit)
      cache->class_size[y] = orbit.size();
    cache->classes.push_back(std::move(orbit));
  }

  return cache;
}

detail::ClassCache const &class_cache(FiniteGroup const &G)
{
  auto const &data = G.data();
  std::call_once(data.classes_once,
                 [&] { data.classes = compute_classes(G); });
  return *data.classes;
}

std::vector<Elem> product_set(FiniteGroup const &G, std::vector<Elem> const &a,
                              std::vector<Elem> const &b)
{
  std::vector<bool> mask(G.order(), false);
  for (Elem x : a) {
    for (Elem y : b)
      mask[G.mul(x, y)] = true;
  }

  std::vector<Elem> result;
  for (Elem i = 0; i < mask.size(); ++i) {
    if (mask[i])
      result.push_back(i);
  }
  return result;
}

std::shared_ptr<detail::LatticeCache const> compute_lattice(FiniteGroup const &G)
{
  auto const &classes = class_cache(G).classes;

  std::vector<std::vector<Elem>> found;
  std::set<std::vector<Elem>> seen;

  auto offer = [&](std::vector<Elem> members) {
    if (seen.insert(members).second)
      found.push_back(std::move(members));
  };

  offer({identity_elem});

  // a class generates the normal closure of any of its members
  for (auto const &cls : classes) {
    if (cls.front() == identity_elem)
      continue;
    detail::IndexClosure closure(G);
    for (Elem x : cls)
      closure.add(x);
    offer(closure.sorted_members());
  }

  // joins of normal subgroups are product sets
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto const &a = found[i];
      auto const &b = found[j];
      if (subset_of(a, b) || subset_of(b, a))
        continue;
      offer(product_set(G, a, b));
    }
  }

  std::sort(found.begin(), found.end(), lattice_less);

  auto cache = std::make_shared<detail::LatticeCache>();
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].size() == 1)
      continue;
    bool minimal = true;
    for (std::size_t j = 0; j < i && minimal; ++j) {
      if (found[j].size() > 1 && found[j].size() < found[i].size() &&
          subset_of(found[j], found[i]))
        minimal = false;
    }
    if (minimal)
      cache->minimal.push_back(i);
  }
  cache->normals = std::move(found);

  return cache;
}

detail::LatticeCache const &lattice_cache(FiniteGroup const &G)
{
  auto const &data = G.data();
  std::call_once(data.lattice_once,
                 [&] { data.lattice = compute_lattice(G); });
  return *data.lattice;
}

} // anonymous namespace

std::vector<std::vector<Elem>> const &conjugacy_classes(FiniteGroup const &G)
{ return class_cache(G).classes; }

std::vector<std::size_t> class_sizes(FiniteGroup const &G)
{ return class_cache(G).class_size; }

std::size_t NormalLattice::index_of(Subgroup const &S) const
{
  auto it = std::find(normals.begin(), normals.end(), S);
  if (it == normals.end())
    throw InvalidParameter("subgroup is not a member of the normal lattice");
  return static_cast<std::size_t>(it - normals.begin());
}

std::vector<Subgroup> NormalLattice::minimal_subgroups() const
{
  std::vector<Subgroup> result;
  for (auto i : minimal)
    result.push_back(normals[i]);
  return result;
}

NormalLattice normal_subgroups(FiniteGroup const &G, Limits const &limits)
{
  if (G.order() > limits.max_order)
    throw OrderBoundExceeded("normal subgroup enumeration exceeds maximal order",
                             limits.max_order);

  auto const &cache = lattice_cache(G);

  NormalLattice lattice{G, {}, cache.minimal};
  lattice.normals.reserve(cache.normals.size());
  for (auto const &members : cache.normals)
    lattice.normals.emplace_back(G, members, true);
  return lattice;
}

std::vector<Subgroup> all_subgroups(FiniteGroup const &G, Limits const &limits)
{
  if (G.order() > limits.oracle_cap)
    throw OrderBoundExceeded("subgroup enumeration exceeds the oracle cap",
                             limits.oracle_cap);

  std::vector<std::vector<Elem>> found;
  std::vector<std::vector<Elem>> generators;
  std::set<std::vector<Elem>> seen;

  auto offer = [&](detail::IndexClosure const &closure) {
    auto members = closure.sorted_members();
    if (seen.insert(members).second) {
      found.push_back(std::move(members));
      generators.push_back(closure.used_generators());
    }
  };

  for (Elem x = 0; x < G.order(); ++x) {
    detail::IndexClosure closure(G);
    closure.add(x);
    offer(closure);
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem g = 0; g < G.order(); ++g) {
      if (std::binary_search(found[i].begin(), found[i].end(), g))
        continue;
      detail::IndexClosure closure(G);
      for (Elem h : generators[i])
        closure.add(h);
      closure.add(g);
      offer(closure);
    }
  }

  std::sort(found.begin(), found.end(), lattice_less);

  std::vector<Subgroup> result;
  for (auto &members : found)
    result.emplace_back(G, std::move(members));
  return result;
}

std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const &G)
{ return normal_subgroups(G).minimal_subgroups(); }

std::optional<Subgroup> normal_complement(Subgroup const &N)
{
  auto const &G = N.parent();
  if (!N.is_normal())
    throw NotNormal("normal_complement requires a normal subgroup");

  for (auto const &members : lattice_cache(G).normals) {
    if (members.size() * N.order() == G.order() &&
        meets_trivially(members, N.members()))
      return Subgroup(G, members, true);
  }
  return std::nullopt;
}

Subgroup maximal_trivial_intersector(Subgroup const &K)
{
  auto const &G = K.parent();
  if (!K.is_normal())
    throw NotNormal("maximal_trivial_intersector requires a normal subgroup");

  // A candidate of largest order is maximal by inclusion; the lattice
  // order makes the first such candidate the one with the least members.
  std::vector<Elem> const *best = nullptr;
  for (auto const &members : lattice_cache(G).normals) {
    if (!meets_trivially(members, K.members()))
      continue;
    if (!best || members.size() > best->size())
      best = &members;
  }

  if (!best)
    throw std::logic_error("trivial subgroup missing from normal lattice");
  return Subgroup(G, *best, true);
}

} // namespace egrp
