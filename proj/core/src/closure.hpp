#ifndef EGRP_SRC_CLOSURE_HPP
#define EGRP_SRC_CLOSURE_HPP

#include <vector>

#include "egrp/group.hpp"

namespace egrp::detail
{

// Incrementally grown subgroup <gens> inside an enumerated group.
class IndexClosure
{
public:
  explicit IndexClosure(FiniteGroup const &G)
  : _G(&G), _mask(G.order(), false), _list{identity_elem}
  { _mask[identity_elem] = true; }

  bool contains(Elem x) const { return _mask[x]; }
  std::size_t size() const { return _list.size(); }
  std::vector<Elem> const &used_generators() const { return _used; }
  std::vector<bool> const &mask() const { return _mask; }

  // Returns false if g was already a member.
  bool add(Elem g)
  {
    if (_mask[g])
      return false;

    _used.push_back(g);
    std::size_t const old = _list.size();
    for (std::size_t i = 0; i < _list.size(); ++i) {
      Elem const x = _list[i];
      if (i < old) {
        visit(_G->mul(g, x));
      } else {
        for (Elem u : _used)
          visit(_G->mul(u, x));
      }
    }
    return true;
  }

  std::vector<Elem> sorted_members() const
  {
    std::vector<Elem> result;
    result.reserve(_list.size());
    for (Elem i = 0; i < _mask.size(); ++i) {
      if (_mask[i])
        result.push_back(i);
    }
    return result;
  }

private:
  void visit(Elem y)
  {
    if (!_mask[y]) {
      _mask[y] = true;
      _list.push_back(y);
    }
  }

  FiniteGroup const *_G;
  std::vector<bool> _mask;
  std::vector<Elem> _list;
  std::vector<Elem> _used;
};

} // namespace egrp::detail

#endif // EGRP_SRC_CLOSURE_HPP
