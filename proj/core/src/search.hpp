#ifndef EGRP_SRC_SEARCH_HPP
#define EGRP_SRC_SEARCH_HPP

#include <functional>
#include <vector>

#include "egrp/group.hpp"

namespace egrp::detail
{

// Greedy generating sequence: an element of highest order first, then the
// highest-order element outside the subgroup generated so far.
std::vector<Elem> generating_sequence(FiniteGroup const &A);

// Enumerates injective homomorphisms A -> B that send gens[i] into
// candidates[i], checking each partial assignment by breadth-first
// extension over the subgroup it generates. The callback receives the
// total map and returns false to stop.
void enumerate_embeddings(
  FiniteGroup const &A, FiniteGroup const &B, std::vector<Elem> const &gens,
  std::vector<std::vector<Elem>> const &candidates,
  std::function<bool(std::vector<Elem> const &)> const &visit);

// Candidates in B for each generator: same element order and class size.
std::vector<std::vector<Elem>> matching_candidates(
  FiniteGroup const &A, FiniteGroup const &B, std::vector<Elem> const &gens);

} // namespace egrp::detail

#endif // EGRP_SRC_SEARCH_HPP
