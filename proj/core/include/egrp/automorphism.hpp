#ifndef EGRP_AUTOMORPHISM_HPP
#define EGRP_AUTOMORPHISM_HPP

#include <span>
#include <vector>

#include "homomorphism.hpp"
#include "subgroup.hpp"

namespace egrp
{

// Aut(G) with each automorphism written as a permutation of G's element
// indices, so that Aut(G) and Hol(G) are subgroups of Sym(G) literally.
struct AutGroup
{
  FiniteGroup base;
  FiniteGroup as_perm_group;  // degree |base|
  Subgroup inner;             // Inn(G) inside as_perm_group
  std::size_t out_order = 1;
};

// Complete Aut(G) by backtracking over images of a greedy generating
// sequence (same element order and class size), each partial assignment
// checked by extension along closure words. Throws OrderBoundExceeded if
// |G| exceeds limits.aut_cap.
AutGroup automorphism_group(FiniteGroup const &G, Limits const &limits = {});

// Number of automorphisms, without building the permutation group.
std::size_t automorphism_count(FiniteGroup const &G, Limits const &limits = {});

// x -> g x g^-1 on element indices.
Perm inner_automorphism(FiniteGroup const &G, Elem g);

// x -> x^e on element indices (an automorphism only for suitable e).
Perm power_map(FiniteGroup const &G, long long e);

// sigma fixes the identity and respects the multiplication table.
bool is_automorphism(FiniteGroup const &G, Perm const &sigma);

// Trivial center and no outer automorphisms.
bool is_complete(FiniteGroup const &G, Limits const &limits = {});

struct Holomorph
{
  FiniteGroup group;          // acts on the |G| element indices of G
  AutGroup aut;
  Subgroup base_image;        // left translations, normal
  Subgroup aut_image;         // stabilizer of the identity index
  Homomorphism embed_base;
  Homomorphism embed_aut;     // from aut.as_perm_group
};

// Left translations by G's generators together with the generators of
// Aut(G). Throws OrderBoundExceeded if |G| |Aut(G)| > limits.max_order.
Holomorph holomorph(FiniteGroup const &G, Limits const &limits = {});

struct SemidirectProduct
{
  FiniteGroup group;
  Subgroup normal_image;
  Subgroup complement_image;
  Homomorphism embed_normal;
  Homomorphism embed_complement;
};

// N x| H with (n1, h1)(n2, h2) = (n1 alpha(h1)(n2), h1 h2), realised by the
// left regular representation on the |N| |H| pairs. alpha maps H into a
// permutation group of degree |N| made of automorphisms of N. Throws
// InvalidAction or OrderBoundExceeded.
SemidirectProduct semidirect(FiniteGroup const &N, FiniteGroup const &H,
                             Homomorphism const &alpha,
                             Limits const &limits = {});

// As above, with one automorphism of N (as a permutation of its element
// indices) per generator of H.
SemidirectProduct semidirect(FiniteGroup const &N, FiniteGroup const &H,
                             std::span<Perm const> generator_actions,
                             Limits const &limits = {});

} // namespace egrp

#endif // EGRP_AUTOMORPHISM_HPP
