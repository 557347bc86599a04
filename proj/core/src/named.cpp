#include "egrp/named.hpp"

#include <array>
#include <numeric>

#include "egrp/errors.hpp"

namespace egrp
{

namespace
{

std::vector<Point> range(Point first, Point last)
{
  std::vector<Point> r(last - first);
  std::iota(r.begin(), r.end(), first);
  return r;
}

// Unit quaternions ±1, ±i, ±j, ±k as indices 0..7: index = 2 * unit + sign,
// unit in {1, i, j, k} = {0, 1, 2, 3}, sign 1 meaning negative.
unsigned quaternion_product(unsigned a, unsigned b)
{
  // unit table: u_a * u_b = sign * u_c
  static constexpr std::array<std::array<int, 4>, 4> table{{
    {{ 1,  2,  3,  4}},
    {{ 2, -1,  4, -3}},
    {{ 3, -4, -1,  2}},
    {{ 4,  3, -2, -1}},
  }};

  int entry = table[a / 2][b / 2];
  bool negative = entry < 0;
  unsigned unit = static_cast<unsigned>(negative ? -entry : entry) - 1;
  negative ^= (a % 2) != (b % 2);
  return 2 * unit + (negative ? 1 : 0);
}

} // anonymous namespace

bool is_prime(unsigned long long n)
{
  if (n < 2)
    return false;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

void validate(NamedGroup const &spec)
{
  switch (spec.kind) {
  case NamedKind::cyclic:
  case NamedKind::symmetric:
  case NamedKind::alternating:
    if (spec.n < 1)
      throw InvalidParameter(to_string(spec) + ": parameter must be >= 1");
    break;
  case NamedKind::dihedral:
    if (spec.n < 4 || spec.n % 2 != 0)
      throw InvalidParameter(to_string(spec) +
                             ": dihedral order must be even and >= 4");
    break;
  case NamedKind::quaternion8:
    break;
  case NamedKind::elementary_abelian:
    if (!is_prime(spec.n))
      throw InvalidParameter(to_string(spec) + ": base must be prime");
    if (spec.k < 1)
      throw InvalidParameter(to_string(spec) + ": exponent must be >= 1");
    break;
  }
}

std::string to_string(NamedGroup const &spec)
{
  switch (spec.kind) {
  case NamedKind::cyclic:
    return "C" + std::to_string(spec.n);
  case NamedKind::dihedral:
    return "D" + std::to_string(spec.n);
  case NamedKind::symmetric:
    return "S" + std::to_string(spec.n);
  case NamedKind::alternating:
    return "A" + std::to_string(spec.n);
  case NamedKind::quaternion8:
    return "Q8";
  case NamedKind::elementary_abelian:
    return "E" + std::to_string(spec.n) + "^" + std::to_string(spec.k);
  }
  return "?";
}

FiniteGroup make_named(NamedGroup const &spec, Limits const &limits)
{
  validate(spec);

  switch (spec.kind) {
  case NamedKind::cyclic: {
    if (spec.n == 1)
      return FiniteGroup::close(1, {}, limits);
    auto gen = Perm::from_cycles(spec.n, {range(0, spec.n)});
    return FiniteGroup::close(spec.n, {gen}, limits);
  }
  case NamedKind::dihedral: {
    unsigned const m = spec.n / 2;
    if (m == 2) {
      // order 4: the Klein four-group acting regularly
      return FiniteGroup::close(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                    Perm::from_cycles(4, {{0, 2}, {1, 3}})},
                                limits);
    }
    auto rotation = Perm::from_cycles(m, {range(0, m)});
    std::vector<Point> images(m);
    for (Point i = 0; i < m; ++i)
      images[i] = (m - i) % m;
    return FiniteGroup::close(m, {rotation, Perm(images)}, limits);
  }
  case NamedKind::symmetric: {
    if (spec.n == 1)
      return FiniteGroup::close(1, {}, limits);
    if (spec.n == 2)
      return FiniteGroup::close(2, {Perm::from_cycles(2, {{0, 1}})}, limits);
    return FiniteGroup::close(spec.n, {Perm::from_cycles(spec.n, {{0, 1}}),
                                       Perm::from_cycles(spec.n, {range(0, spec.n)})},
                              limits);
  }
  case NamedKind::alternating: {
    if (spec.n <= 2)
      return FiniteGroup::close(spec.n, {}, limits);
    std::vector<Perm> gens;
    for (Point i = 2; i < spec.n; ++i)
      gens.push_back(Perm::from_cycles(spec.n, {{0, 1, i}}));
    return FiniteGroup::close(spec.n, std::move(gens), limits);
  }
  case NamedKind::quaternion8: {
    // left regular representation; generators are left multiplication by i, j
    std::vector<Perm> gens;
    for (unsigned g : {2u, 4u}) {
      std::vector<Point> images(8);
      for (unsigned x = 0; x < 8; ++x)
        images[x] = quaternion_product(g, x);
      gens.emplace_back(std::move(images));
    }
    return FiniteGroup::close(8, std::move(gens), limits);
  }
  case NamedKind::elementary_abelian: {
    unsigned long long order = 1;
    for (unsigned i = 0; i < spec.k; ++i) {
      order *= spec.n;
      if (order > limits.max_order)
        throw OrderBoundExceeded(to_string(spec) + " exceeds maximal order",
                                 limits.max_order);
    }
    std::size_t const degree = std::size_t{spec.n} * spec.k;
    std::vector<Perm> gens;
    for (unsigned i = 0; i < spec.k; ++i)
      gens.push_back(Perm::from_cycles(
        degree, {range(i * spec.n, (i + 1) * spec.n)}));
    return FiniteGroup::close(degree, std::move(gens), limits);
  }
  }
  throw InvalidParameter("unknown group kind");
}

FiniteGroup cyclic(unsigned n)
{ return make_named({NamedKind::cyclic, n, 1}); }

FiniteGroup dihedral(unsigned order)
{ return make_named({NamedKind::dihedral, order, 1}); }

FiniteGroup symmetric(unsigned n)
{ return make_named({NamedKind::symmetric, n, 1}); }

FiniteGroup alternating(unsigned n)
{ return make_named({NamedKind::alternating, n, 1}); }

FiniteGroup quaternion8()
{ return make_named({NamedKind::quaternion8, 8, 1}); }

FiniteGroup elementary_abelian(unsigned p, unsigned k)
{ return make_named({NamedKind::elementary_abelian, p, k}); }

} // namespace egrp
