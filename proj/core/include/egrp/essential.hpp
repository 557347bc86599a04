#ifndef EGRP_ESSENTIAL_HPP
#define EGRP_ESSENTIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "homomorphism.hpp"
#include "subgroup.hpp"

namespace egrp
{

// Outcome of an essentiality check with data that can be re-verified.
//
// A normal subgroup E of G is essential when every nontrivial normal
// subgroup of G meets E nontrivially. For finite G it suffices to test the
// minimal normal subgroups, since every nontrivial normal subgroup contains
// one.
struct EssentialCertificate
{
  Subgroup subject;
  bool essential = false;

  // Set when not essential: a nontrivial normal subgroup meeting the
  // subject trivially.
  std::optional<Subgroup> witness;

  // Set when essential: every minimal normal subgroup M paired with a
  // nontrivial element of subject n M.
  std::vector<std::pair<Subgroup, Elem>> covered;

  // Re-checks the witness data against the subject.
  bool recheck() const;
};

// Throws NotNormal if E is not normal in its parent.
EssentialCertificate is_essential(Subgroup const &E);

// Direct check of the definition over the whole normal lattice.
bool is_essential_by_definition(Subgroup const &E);

std::vector<Subgroup> essential_subgroups(FiniteGroup const &G);

// Intersection of all essential subgroups; trivial for the trivial group.
Subgroup e_of(FiniteGroup const &G);

// Join of the minimal normal subgroups; trivial if there are none.
Subgroup socle(FiniteGroup const &G);

bool has_proper_essential(FiniteGroup const &G);

// The equivalent conditions for "no proper essential subgroup":
//   a  no proper essential subgroup
//   b  every normal subgroup has a normal complement
//   c  no nontrivial normal subgroup, as a group, has a proper essential
//      subgroup
//   e  for proper normal N and normal A >= N there is a normal B >= N
//      with AB = G and A n B = N
//   soc_eq_G  soc(G) = G
struct KKConditions
{
  bool a = false;
  bool b = false;
  bool c = false;
  bool e = false;
  bool soc_eq_G = false;

  bool agree() const { return a == b && b == c && c == e && e == soc_eq_G; }
};

KKConditions kk_conditions(FiniteGroup const &G, Limits const &limits = {});

// Quotients the codomain of a normal embedding by a maximal normal
// subgroup T meeting the image trivially; the induced embedding psi of the
// domain into codomain/T has essential image.
struct Essentialization
{
  Subgroup T;
  Quotient quotient;
  Homomorphism psi;
  EssentialCertificate certificate;

  bool proper() const { return !psi.is_epi(); }
};

// Throws NotMonomorphism or NotNormal when phi is not a normal embedding.
Essentialization essentialize(Homomorphism const &phi,
                              Limits const &limits = {});

struct PrimaryFactor
{
  unsigned p = 0;
  unsigned k = 0;
  Elem generator = identity_elem;  // element of order p^k in the input group

  friend bool operator==(PrimaryFactor const &,
                         PrimaryFactor const &) = default;
};

struct PrimaryDecomposition
{
  std::vector<PrimaryFactor> factors;  // sorted by p, then k
  FiniteGroup cyclic_product;          // C_{p1^k1} x C_{p2^k2} x ...
  Homomorphism isomorphism;            // input group -> cyclic_product
};

// Throws NotAbelian.
PrimaryDecomposition abelian_primary_decomposition(FiniteGroup const &G,
                                                   Limits const &limits = {});

struct EssentialExtension
{
  FiniteGroup extension;
  Homomorphism embedding;
  PrimaryDecomposition decomposition;
};

// Lifts every primary cyclic factor C_{p^k} to C_{p^(k+1)} and embeds it as
// the subgroup of p-th powers. Throws NotAbelian, TrivialGroup or
// OrderBoundExceeded.
EssentialExtension abelian_essential_extension(FiniteGroup const &G,
                                               Limits const &limits = {});

} // namespace egrp

#endif // EGRP_ESSENTIAL_HPP
