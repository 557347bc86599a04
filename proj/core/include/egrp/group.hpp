#ifndef EGRP_GROUP_HPP
#define EGRP_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "limits.hpp"
#include "perm.hpp"

namespace egrp
{

// Index of an element inside its FiniteGroup's element list.
using Elem = std::uint32_t;

inline constexpr Elem identity_elem = 0;

namespace detail { struct GroupData; }

// A fully enumerated permutation group.
//
// Elements are listed breadth-first from the identity: the queue is scanned
// in order and each element is extended by the generators in list order,
// new element = generator * element. Every non-identity element i therefore
// has a word  element(i) = generator(word_generator(i)) * element(word_parent(i))
// with word_parent(i) < i. Copies share the same immutable data.
class FiniteGroup
{
public:
  // The trivial group of degree 1.
  FiniteGroup();

  // Closure of `generators` (all of degree `degree`). Throws
  // OrderBoundExceeded once more than limits.max_order elements appear.
  static FiniteGroup close(std::size_t degree, std::vector<Perm> generators,
                           Limits const &limits = {});

  std::size_t degree() const;
  std::size_t order() const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  std::vector<Perm> const &generators() const;
  std::vector<Elem> const &generator_indices() const;

  std::vector<Perm> const &elements() const;
  Perm const &element(Elem i) const;
  std::optional<Elem> index_of(Perm const &p) const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem pow(Elem a, long long k) const;
  std::size_t element_order(Elem a) const;

  Elem word_parent(Elem i) const;
  std::size_t word_generator(Elem i) const;

  // Hash of degree and element list; equal groups have equal fingerprints.
  std::uint64_t fingerprint() const;

  // True iff both handles refer to the same enumerated instance.
  bool same_instance(FiniteGroup const &other) const
  { return _data == other._data; }

  // Same degree and identical element list (hence identical tables).
  friend bool operator==(FiniteGroup const &a, FiniteGroup const &b);

  detail::GroupData const &data() const { return *_data; }

private:
  explicit FiniteGroup(std::shared_ptr<detail::GroupData const> data)
  : _data(std::move(data))
  {}

  std::shared_ptr<detail::GroupData const> _data;
};

} // namespace egrp

#endif // EGRP_GROUP_HPP
