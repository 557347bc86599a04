#ifndef EGRP_HOMOMORPHISM_HPP
#define EGRP_HOMOMORPHISM_HPP

#include <optional>
#include <span>
#include <vector>

#include "group.hpp"
#include "subgroup.hpp"

namespace egrp
{

// A validated homomorphism between enumerated groups, stored as a total
// map of element indices.
class Homomorphism
{
public:
  // Extends generator images along the domain's closure words. Throws
  // NotAHomomorphism if the extension is inconsistent.
  static Homomorphism from_generator_images(FiniteGroup domain,
                                            FiniteGroup codomain,
                                            std::span<Elem const> images);

  // As above with images given as permutations that must lie in the codomain.
  static Homomorphism from_generator_perms(FiniteGroup domain,
                                           FiniteGroup codomain,
                                           std::span<Perm const> images);

  // Validates the homomorphism law on all pairs.
  static Homomorphism from_map(FiniteGroup domain, FiniteGroup codomain,
                               std::vector<Elem> image_of);

  static Homomorphism identity(FiniteGroup const &G);

  FiniteGroup const &domain() const { return _domain; }
  FiniteGroup const &codomain() const { return _codomain; }

  Elem operator()(Elem x) const { return _image_of[x]; }
  std::vector<Elem> const &image_map() const { return _image_of; }

  bool is_mono() const { return _mono; }
  bool is_epi() const { return _epi; }
  bool is_iso() const { return _mono && _epi; }

  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup image(Subgroup const &S) const;

  // Only for isomorphisms; throws PreconditionFailed otherwise.
  Homomorphism inverse() const;

  // f(xy) = f(x) f(y) for every pair; quadratic, meant for tests.
  bool satisfies_law_exhaustively() const;

private:
  Homomorphism(FiniteGroup domain, FiniteGroup codomain,
               std::vector<Elem> image_of);

  FiniteGroup _domain;
  FiniteGroup _codomain;
  std::vector<Elem> _image_of;
  bool _mono = false;
  bool _epi = false;
};

// outer o inner
Homomorphism compose(Homomorphism const &outer, Homomorphism const &inner);

struct Quotient
{
  FiniteGroup group;
  Homomorphism projection;
};

// G/N realised by the action of G on the left cosets of N.
Quotient quotient(Subgroup const &N, Limits const &limits = {});

struct DirectProduct
{
  FiniteGroup group;
  Subgroup left;
  Subgroup right;
  Homomorphism embed_left;
  Homomorphism embed_right;
};

// A x B acting on deg(A) + deg(B) points.
DirectProduct direct_product(FiniteGroup const &A, FiniteGroup const &B,
                             Limits const &limits = {});

// Element orders, class sizes and center order, in a comparable form.
struct InvariantProfile
{
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order_class_size;

  friend bool operator==(InvariantProfile const &,
                         InvariantProfile const &) = default;
};

InvariantProfile invariant_profile(FiniteGroup const &G);

// Backtracking search over generator images. Throws OrderBoundExceeded if
// |A| exceeds limits.aut_cap.
std::optional<Homomorphism> find_isomorphism(FiniteGroup const &A,
                                             FiniteGroup const &B,
                                             Limits const &limits = {});

bool is_isomorphic(FiniteGroup const &A, FiniteGroup const &B,
                   Limits const &limits = {});

} // namespace egrp

#endif // EGRP_HOMOMORPHISM_HPP
