#ifndef EGRP_TEST_ORACLES_HPP
#define EGRP_TEST_ORACLES_HPP

// Brute-force reference computations that share no code paths with the
// library beyond Perm and element tables.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "egrp/group.hpp"
#include "egrp/perm.hpp"
#include "egrp/subgroup.hpp"

namespace egrp::oracle
{

using Images = std::vector<std::uint32_t>;

inline Images compose_images(Images const &a, Images const &b)
{
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[b[i]];
  return r;
}

// Closure by repeated multiplication until nothing new appears.
inline std::set<Images> closure(std::size_t degree,
                                std::vector<Perm> const &gens)
{
  Images id(degree);
  for (std::size_t i = 0; i < degree; ++i)
    id[i] = static_cast<std::uint32_t>(i);

  std::set<Images> elements{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Images> snapshot(elements.begin(), elements.end());
    for (auto const &x : snapshot) {
      for (auto const &g : gens) {
        Images gi(g.images().begin(), g.images().end());
        if (elements.insert(compose_images(gi, x)).second)
          grew = true;
      }
    }
  }
  return elements;
}

inline std::set<Images> element_set(FiniteGroup const &G)
{
  std::set<Images> s;
  for (auto const &p : G.elements())
    s.emplace(p.images().begin(), p.images().end());
  return s;
}

// Normality by conjugating every member by every element.
inline bool normal_by_conjugation(FiniteGroup const &G,
                                  std::vector<Elem> const &members)
{
  std::set<Elem> set(members.begin(), members.end());
  for (Elem g = 0; g < G.order(); ++g) {
    for (Elem s : members) {
      Elem c = G.mul(G.mul(g, s), G.inv(g));
      if (!set.count(c))
        return false;
    }
  }
  return true;
}

inline bool trivial_meet(std::vector<Elem> const &a, std::vector<Elem> const &b)
{
  std::set<Elem> sa(a.begin(), a.end());
  return std::none_of(b.begin(), b.end(),
                      [&](Elem x) { return x != 0 && sa.count(x); });
}

// Definitional essentiality over a list of normal subgroups.
inline bool essential_over(std::vector<Elem> const &E,
                           std::vector<std::vector<Elem>> const &normals)
{
  for (auto const &N : normals) {
    if (N.size() > 1 && trivial_meet(E, N))
      return false;
  }
  return true;
}

// Count of maps sending generators anywhere that extend to automorphisms,
// checked over the full multiplication table.
inline std::size_t automorphism_count_bruteforce(FiniteGroup const &G)
{
  std::size_t const n = G.order();
  std::vector<Elem> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = static_cast<Elem>(i);

  std::size_t count = 0;
  do {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      for (Elem b = 0; b < n && ok; ++b)
        ok = perm[G.mul(a, b)] == G.mul(perm[a], perm[b]);
    }
    if (ok)
      ++count;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

inline Perm random_perm(std::size_t degree, std::mt19937 &rng)
{
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(std::move(images));
}

} // namespace egrp::oracle

#endif // EGRP_TEST_ORACLES_HPP
