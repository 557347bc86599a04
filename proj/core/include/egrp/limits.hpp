#ifndef EGRP_LIMITS_HPP
#define EGRP_LIMITS_HPP

#include <cstddef>

namespace egrp
{

// Size guards for desk-scale enumeration.
struct Limits
{
  std::size_t max_order = 2000;  // largest group that may be enumerated
  std::size_t aut_cap = 512;     // largest group whose Aut/iso is searched
  std::size_t oracle_cap = 48;   // largest group for all_subgroups()
};

} // namespace egrp

#endif // EGRP_LIMITS_HPP
