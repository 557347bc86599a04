#ifndef EGRP_SPEC_LANG_HPP
#define EGRP_SPEC_LANG_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "group.hpp"
#include "named.hpp"

namespace egrp
{

// Group-spec language:
//
//   spec    := product ;
//   product := atom { "x" atom } ;
//   atom    := named | "Hol(" spec ")" | "Aut(" spec ")"
//            | "sdp(" int "," int "," int ")"
//            | "perm[" int "]{" cycles { "," cycles } "}" | "(" spec ")" ;
//   named   := ("C"|"D"|"S"|"A") int | "Q8" | "E" int "^" int ;
//   cycles  := one or more "(" points ")" , points space separated ;
//
// Whitespace between tokens is ignored. "D n" is the dihedral group of
// order n. sdp(n,m,e) is C_n x| C_m with the generator of C_m acting by
// x -> x^e. Products are left associative.

struct GroupSpec;
using GroupSpecPtr = std::shared_ptr<GroupSpec const>;

namespace spec
{

struct Named
{
  NamedGroup group;
};

struct Product
{
  GroupSpecPtr left;
  GroupSpecPtr right;
};

struct Semidirect
{
  unsigned n = 1;  // order of the cyclic normal factor
  unsigned m = 1;  // order of the acting cyclic factor
  unsigned e = 1;  // exponent of the action
};

struct Hol
{
  GroupSpecPtr inner;
};

struct Aut
{
  GroupSpecPtr inner;
};

// One generator is a list of cycles.
struct PermLiteral
{
  unsigned degree = 1;
  std::vector<std::vector<std::vector<Point>>> generators;
};

} // namespace spec

struct GroupSpec
{
  std::variant<spec::Named, spec::Product, spec::Semidirect, spec::Hol,
               spec::Aut, spec::PermLiteral>
    node;
};

bool operator==(GroupSpec const &a, GroupSpec const &b);

// Throws SyntaxError (with byte offset and expected tokens) or
// SemanticError.
GroupSpec parse_spec(std::string_view text);

// Canonical text; parse_spec(render(s)) == s.
std::string render(GroupSpec const &s);

FiniteGroup evaluate(GroupSpec const &s, Limits const &limits = {});
FiniteGroup evaluate(std::string_view text, Limits const &limits = {});

} // namespace egrp

#endif // EGRP_SPEC_LANG_HPP
