#ifndef EGRP_PERM_HPP
#define EGRP_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace egrp
{

using Point = std::uint32_t;

// A permutation of {0, ..., degree - 1}, stored as its image list.
class Perm
{
public:
  // Identity of the given degree.
  explicit Perm(std::size_t degree = 1);

  // Throws InvalidParameter unless `images` is a bijection on its index set.
  explicit Perm(std::vector<Point> images);

  // Cycles are disjoint lists of points; unmentioned points are fixed.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point i) const { return _images[i]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const;
  std::size_t order() const;
  Perm inverse() const;

  // Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  // Cycle notation, e.g. "(0 1 2)(3 4)"; the identity renders as "()".
  std::string to_string() const;

  // Embeds into degree `new_degree`, moving point i to i + offset.
  Perm shifted(std::size_t offset, std::size_t new_degree) const;

  friend bool operator==(Perm const &, Perm const &) = default;
  friend std::strong_ordering operator<=>(Perm const &,
                                          Perm const &) = default;

private:
  friend Perm compose(Perm const &a, Perm const &b);

  struct Unchecked {};
  Perm(Unchecked, std::vector<Point> images) : _images(std::move(images)) {}

  std::vector<Point> _images;
};

// (a * b)(i) = a(b(i)): the right factor is applied first.
Perm compose(Perm const &a, Perm const &b);

inline Perm operator*(Perm const &a, Perm const &b) { return compose(a, b); }

std::ostream &operator<<(std::ostream &os, Perm const &p);

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

} // namespace egrp

#endif // EGRP_PERM_HPP
