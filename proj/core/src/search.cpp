#include "search.hpp"

#include <algorithm>
#include <limits>

#include "closure.hpp"
#include "egrp/lattice.hpp"

namespace egrp::detail
{

namespace
{

constexpr Elem unset = std::numeric_limits<Elem>::max();

class Extender
{
public:
  Extender(FiniteGroup const &A, FiniteGroup const &B,
           std::vector<Elem> const &gens)
  : _A(A), _B(B), _gens(gens),
    _map(A.order(), unset), _used(B.order(), false)
  {}

  // Extends gens[0..count) -> images[0..count) over their subgroup.
  bool extend(std::vector<Elem> const &images, std::size_t count)
  {
    std::fill(_map.begin(), _map.end(), unset);
    std::fill(_used.begin(), _used.end(), false);
    _queue.clear();

    _map[identity_elem] = identity_elem;
    _used[identity_elem] = true;
    _queue.push_back(identity_elem);

    for (std::size_t i = 0; i < _queue.size(); ++i) {
      Elem const x = _queue[i];
      Elem const fx = _map[x];
      for (std::size_t j = 0; j < count; ++j) {
        Elem const z = _A.mul(_gens[j], x);
        Elem const w = _B.mul(images[j], fx);
        if (_map[z] == unset) {
          if (_used[w])
            return false;
          _map[z] = w;
          _used[w] = true;
          _queue.push_back(z);
        } else if (_map[z] != w) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Elem> const &map() const { return _map; }

private:
  FiniteGroup const &_A;
  FiniteGroup const &_B;
  std::vector<Elem> const &_gens;
  std::vector<Elem> _map;
  std::vector<bool> _used;
  std::vector<Elem> _queue;
};

} // anonymous namespace

std::vector<Elem> generating_sequence(FiniteGroup const &A)
{
  std::vector<Elem> candidates;
  for (Elem x = 1; x < A.order(); ++x)
    candidates.push_back(x);

  std::stable_sort(candidates.begin(), candidates.end(), [&](Elem a, Elem b) {
    return A.element_order(a) > A.element_order(b);
  });

  IndexClosure closure(A);
  for (Elem c : candidates) {
    if (closure.size() == A.order())
      break;
    closure.add(c);
  }
  return closure.used_generators();
}

std::vector<std::vector<Elem>> matching_candidates(
  FiniteGroup const &A, FiniteGroup const &B, std::vector<Elem> const &gens)
{
  auto const sizes_a = class_sizes(A);
  auto const sizes_b = class_sizes(B);

  std::vector<std::vector<Elem>> result;
  for (Elem g : gens) {
    std::vector<Elem> matches;
    for (Elem y = 0; y < B.order(); ++y) {
      if (B.element_order(y) == A.element_order(g) &&
          sizes_b[y] == sizes_a[g])
        matches.push_back(y);
    }
    result.push_back(std::move(matches));
  }
  return result;
}

void enumerate_embeddings(
  FiniteGroup const &A, FiniteGroup const &B, std::vector<Elem> const &gens,
  std::vector<std::vector<Elem>> const &candidates,
  std::function<bool(std::vector<Elem> const &)> const &visit)
{
  Extender extender(A, B, gens);
  std::vector<Elem> images(gens.size(), identity_elem);
  bool stop = false;

  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == gens.size()) {
      // the extension of a generating sequence is total
      if (!extender.extend(images, depth))
        return;
      if (!visit(extender.map()))
        stop = true;
      return;
    }

    for (Elem c : candidates[depth]) {
      images[depth] = c;
      if (!extender.extend(images, depth + 1))
        continue;
      descend(depth + 1);
      if (stop)
        return;
    }
  };

  descend(0);
}

} // namespace egrp::detail
