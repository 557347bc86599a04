#include "egrp/perm.hpp"

#include <numeric>
#include <sstream>

#include "egrp/errors.hpp"

namespace egrp
{

Perm::Perm(std::size_t degree)
: _images(degree)
{
  if (degree == 0)
    throw InvalidParameter("permutation degree must be positive");

  std::iota(_images.begin(), _images.end(), Point{0});
}

Perm::Perm(std::vector<Point> images)
: _images(std::move(images))
{
  if (_images.empty())
    throw InvalidParameter("permutation degree must be positive");

  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw InvalidParameter("image list is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const &cycles)
{
  Perm result(degree);
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (Point x : cycle) {
      if (x >= degree)
        throw InvalidParameter("cycle point " + std::to_string(x) +
                               " outside degree " + std::to_string(degree));
      if (used[x])
        throw InvalidParameter("point " + std::to_string(x) +
                               " appears twice in cycle list");
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      result._images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }

  return result;
}

bool Perm::is_identity() const
{
  for (Point i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

std::size_t Perm::order() const
{
  std::size_t result = 1;
  for (auto const &cycle : cycles())
    result = std::lcm(result, cycle.size());
  return result;
}

Perm Perm::inverse() const
{
  std::vector<Point> inv(_images.size());
  for (Point i = 0; i < _images.size(); ++i)
    inv[_images[i]] = i;

  return Perm(Unchecked{}, std::move(inv));
}

std::vector<std::vector<Point>> Perm::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(_images.size(), false);

  for (Point start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start)
      continue;

    std::vector<Point> cycle;
    for (Point x = start; !done[x]; x = _images[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }

  return result;
}

std::string Perm::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";

  std::ostringstream ss;
  for (auto const &cycle : cs) {
    ss << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      ss << (i ? " " : "") << cycle[i];
    ss << ')';
  }
  return ss.str();
}

Perm Perm::shifted(std::size_t offset, std::size_t new_degree) const
{
  if (offset + degree() > new_degree)
    throw InvalidParameter("shifted permutation does not fit new degree");

  Perm result(new_degree);
  for (Point i = 0; i < _images.size(); ++i)
    result._images[i + offset] = static_cast<Point>(_images[i] + offset);
  return result;
}

Perm compose(Perm const &a, Perm const &b)
{
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));

  std::vector<Point> images(a.degree());
  for (Point i = 0; i < images.size(); ++i)
    images[i] = a[b[i]];

  return Perm(Perm::Unchecked{}, std::move(images));
}

std::ostream &operator<<(std::ostream &os, Perm const &p)
{
  return os << p.to_string();
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  // FNV-1a over the image list
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace egrp
