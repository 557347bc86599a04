#ifndef EGRP_NAMED_HPP
#define EGRP_NAMED_HPP

#include <string>

#include "group.hpp"

namespace egrp
{

enum class NamedKind
{
  cyclic,              // C n, order n
  dihedral,            // D n, order n (n even, n >= 4)
  symmetric,           // S n
  alternating,         // A n
  quaternion8,         // Q8
  elementary_abelian,  // E p^k
};

struct NamedGroup
{
  NamedKind kind = NamedKind::cyclic;
  unsigned n = 1;  // order parameter, or the prime p for E p^k
  unsigned k = 1;  // exponent for E p^k

  friend bool operator==(NamedGroup const &, NamedGroup const &) = default;
};

// Throws InvalidParameter on bad parameters.
void validate(NamedGroup const &spec);

std::string to_string(NamedGroup const &spec);

FiniteGroup make_named(NamedGroup const &spec, Limits const &limits = {});

FiniteGroup cyclic(unsigned n);
FiniteGroup dihedral(unsigned order);
FiniteGroup symmetric(unsigned n);
FiniteGroup alternating(unsigned n);
FiniteGroup quaternion8();
FiniteGroup elementary_abelian(unsigned p, unsigned k);

bool is_prime(unsigned long long n);

} // namespace egrp

#endif // EGRP_NAMED_HPP
