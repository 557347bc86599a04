#include "egrp/group.hpp"

#include <string>

#include "egrp/errors.hpp"
#include "group_data.hpp"

namespace egrp
{

namespace
{

std::uint64_t hash_elements(std::size_t degree, std::vector<Perm> const &elements)
{
  std::uint64_t h = 1469598103934665603ull ^ degree;
  PermHash ph;
  for (auto const &p : elements) {
    h ^= ph(p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

} // anonymous namespace

FiniteGroup::FiniteGroup()
: FiniteGroup(close(1, {}))
{}

FiniteGroup FiniteGroup::close(std::size_t degree, std::vector<Perm> generators,
                               Limits const &limits)
{
  if (degree == 0)
    throw InvalidParameter("group degree must be positive");

  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator " + g.to_string() + " has degree " +
                           std::to_string(g.degree()) + ", expected " +
                           std::to_string(degree));
  }

  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->generators = std::move(generators);

  auto const ngens = data->generators.size();

  data->elements.emplace_back(degree);
  data->index.emplace(data->elements.front(), 0);
  data->word_parent.push_back(0);
  data->word_generator.push_back(0);

  // left[i * ngens + s] = index of generator(s) * element(i)
  std::vector<Elem> left;

  for (std::size_t i = 0; i < data->elements.size(); ++i) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Perm next = compose(data->generators[s], data->elements[i]);
      auto it = data->index.find(next);
      if (it != data->index.end()) {
        left.push_back(it->second);
        continue;
      }

      if (data->elements.size() >= limits.max_order)
        throw OrderBoundExceeded("group closure exceeds maximal order",
                                 limits.max_order);

      auto idx = static_cast<Elem>(data->elements.size());
      data->index.emplace(next, idx);
      data->elements.push_back(std::move(next));
      data->word_parent.push_back(static_cast<Elem>(i));
      data->word_generator.push_back(static_cast<std::uint32_t>(s));
      left.push_back(idx);
    }
  }

  auto const n = data->elements.size();

  for (auto const &g : data->generators)
    data->generator_indices.push_back(data->index.at(g));

  // Row i of the table from row word_parent(i):
  // e_i * e_j = g_s * (e_p * e_j).
  data->mul.resize(n * n);
  for (std::size_t j = 0; j < n; ++j)
    data->mul[j] = static_cast<Elem>(j);

  for (std::size_t i = 1; i < n; ++i) {
    auto const p = data->word_parent[i];
    auto const s = data->word_generator[i];
    Elem const *prow = &data->mul[p * n];
    Elem *row = &data->mul[i * n];
    for (std::size_t j = 0; j < n; ++j)
      row[j] = left[prow[j] * ngens + s];
  }

  data->inv.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Elem const *row = &data->mul[i * n];
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == identity_elem) {
        data->inv[i] = static_cast<Elem>(j);
        break;
      }
    }
  }

  data->orders.assign(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::uint32_t k = 1;
    for (Elem x = static_cast<Elem>(i); x != identity_elem;
         x = data->mul[x * n + i])
      ++k;
    data->orders[i] = k;
  }

  for (auto a : data->generator_indices) {
    for (auto b : data->generator_indices) {
      if (data->mul[a * n + b] != data->mul[b * n + a])
        data->abelian = false;
    }
  }

  data->fingerprint = hash_elements(degree, data->elements);

  return FiniteGroup(std::move(data));
}

std::size_t FiniteGroup::degree() const { return _data->degree; }

std::size_t FiniteGroup::order() const { return _data->elements.size(); }

bool FiniteGroup::is_abelian() const { return _data->abelian; }

std::vector<Perm> const &FiniteGroup::generators() const
{ return _data->generators; }

std::vector<Elem> const &FiniteGroup::generator_indices() const
{ return _data->generator_indices; }

std::vector<Perm> const &FiniteGroup::elements() const
{ return _data->elements; }

Perm const &FiniteGroup::element(Elem i) const
{ return _data->elements[i]; }

std::optional<Elem> FiniteGroup::index_of(Perm const &p) const
{
  auto it = _data->index.find(p);
  if (it == _data->index.end())
    return std::nullopt;
  return it->second;
}

Elem FiniteGroup::mul(Elem a, Elem b) const
{ return _data->mul[static_cast<std::size_t>(a) * order() + b]; }

Elem FiniteGroup::inv(Elem a) const { return _data->inv[a]; }

Elem FiniteGroup::pow(Elem a, long long k) const
{
  auto const ord = static_cast<long long>(element_order(a));
  k %= ord;
  if (k < 0)
    k += ord;

  Elem result = identity_elem;
  for (long long i = 0; i < k; ++i)
    result = mul(result, a);
  return result;
}

std::size_t FiniteGroup::element_order(Elem a) const
{ return _data->orders[a]; }

Elem FiniteGroup::word_parent(Elem i) const { return _data->word_parent[i]; }

std::size_t FiniteGroup::word_generator(Elem i) const
{ return _data->word_generator[i]; }

std::uint64_t FiniteGroup::fingerprint() const { return _data->fingerprint; }

bool operator==(FiniteGroup const &a, FiniteGroup const &b)
{
  if (a._data == b._data)
    return true;

  return a.degree() == b.degree() && a.fingerprint() == b.fingerprint() &&
         a.elements() == b.elements();
}

} // namespace egrp
