#include "egrp/automorphism.hpp"

#include "egrp/errors.hpp"
#include "search.hpp"

namespace egrp
{

namespace
{

void check_aut_cap(FiniteGroup const &G, Limits const &limits)
{
  if (G.order() > limits.aut_cap)
    throw OrderBoundExceeded("automorphism search exceeds the search cap",
                             limits.aut_cap);
}

template<typename Visit>
void for_each_automorphism(FiniteGroup const &G, Visit &&visit)
{
  auto const gens = detail::generating_sequence(G);
  auto const candidates = detail::matching_candidates(G, G, gens);
  detail::enumerate_embeddings(G, G, gens, candidates,
                               [&](std::vector<Elem> const &map) {
                                 visit(map);
                                 return true;
                               });
}

Perm left_translation(FiniteGroup const &G, Elem g)
{
  std::vector<Point> images(G.order());
  for (Elem x = 0; x < G.order(); ++x)
    images[x] = G.mul(g, x);
  return Perm(std::move(images));
}

} // anonymous namespace

Perm inner_automorphism(FiniteGroup const &G, Elem g)
{
  std::vector<Point> images(G.order());
  for (Elem x = 0; x < G.order(); ++x)
    images[x] = G.conj(g, x);
  return Perm(std::move(images));
}

Perm power_map(FiniteGroup const &G, long long e)
{
  std::vector<Point> images(G.order());
  for (Elem x = 0; x < G.order(); ++x)
    images[x] = G.pow(x, e);

  try {
    return Perm(std::move(images));
  } catch (InvalidParameter const &) {
    throw InvalidAction("power map x -> x^" + std::to_string(e) +
                        " is not a bijection");
  }
}

bool is_automorphism(FiniteGroup const &G, Perm const &sigma)
{
  if (sigma.degree() != G.order() || sigma[identity_elem] != identity_elem)
    return false;

  for (Elem x = 0; x < G.order(); ++x) {
    for (Elem y = 0; y < G.order(); ++y) {
      if (sigma[G.mul(x, y)] != G.mul(sigma[x], sigma[y]))
        return false;
    }
  }
  return true;
}

std::size_t automorphism_count(FiniteGroup const &G, Limits const &limits)
{
  check_aut_cap(G, limits);

  std::size_t count = 0;
  for_each_automorphism(G, [&](std::vector<Elem> const &) { ++count; });
  return count;
}

AutGroup automorphism_group(FiniteGroup const &G, Limits const &limits)
{
  check_aut_cap(G, limits);

  std::size_t const degree = G.order();

  std::vector<Perm> gens;
  auto aut = FiniteGroup::close(degree, {}, limits);

  for_each_automorphism(G, [&](std::vector<Elem> const &map) {
    Perm sigma(std::vector<Point>(map.begin(), map.end()));
    if (aut.index_of(sigma))
      return;
    gens.push_back(std::move(sigma));
    aut = FiniteGroup::close(degree, gens, limits);
  });

  std::vector<Elem> inner_gens;
  for (Elem g : G.generator_indices())
    inner_gens.push_back(*aut.index_of(inner_automorphism(G, g)));
  auto inner = subgroup_generated(aut, inner_gens);
  inner = Subgroup(aut, inner.members(), true);

  auto const out_order = aut.order() / inner.order();
  return AutGroup{G, std::move(aut), std::move(inner), out_order};
}

bool is_complete(FiniteGroup const &G, Limits const &limits)
{
  check_aut_cap(G, limits);

  if (!center(G).is_trivial())
    return false;

  // trivial center: Inn(G) has order |G|
  return automorphism_count(G, limits) == G.order();
}

Holomorph holomorph(FiniteGroup const &G, Limits const &limits)
{
  auto aut = automorphism_group(G, limits);

  if (G.order() * aut.as_perm_group.order() > limits.max_order)
    throw OrderBoundExceeded("holomorph exceeds maximal order",
                             limits.max_order);

  std::vector<Perm> translations;
  for (Elem g : G.generator_indices())
    translations.push_back(left_translation(G, g));

  auto const &aut_gens = aut.as_perm_group.generators();

  std::vector<Perm> gens(translations);
  gens.insert(gens.end(), aut_gens.begin(), aut_gens.end());

  auto hol = FiniteGroup::close(G.order(), std::move(gens), limits);

  auto embed_base = Homomorphism::from_generator_perms(G, hol, translations);
  auto embed_aut =
    Homomorphism::from_generator_perms(aut.as_perm_group, hol, aut_gens);

  Subgroup base_image(hol, embed_base.image().members(), true);
  auto aut_image = embed_aut.image();

  return Holomorph{std::move(hol), std::move(aut), std::move(base_image),
                   std::move(aut_image), std::move(embed_base),
                   std::move(embed_aut)};
}

SemidirectProduct semidirect(FiniteGroup const &N, FiniteGroup const &H,
                             Homomorphism const &alpha, Limits const &limits)
{
  auto const &A = alpha.codomain();

  if (!(alpha.domain() == H))
    throw InvalidAction("action homomorphism is not defined on H");
  if (A.degree() != N.order())
    throw InvalidAction("action must permute the elements of N");
  for (auto const &sigma : A.generators()) {
    if (!is_automorphism(N, sigma))
      throw InvalidAction("action image " + sigma.to_string() +
                          " is not an automorphism of N");
  }

  std::size_t const n = N.order();
  std::size_t const size = n * H.order();
  if (size > limits.max_order)
    throw OrderBoundExceeded("semidirect product exceeds maximal order",
                             limits.max_order);

  // carrier index of (a, h) is a + n h
  auto left_mult = [&](Elem a1, Elem h1) {
    auto const &sigma = A.element(alpha(h1));
    std::vector<Point> images(size);
    for (Elem h2 = 0; h2 < H.order(); ++h2) {
      for (Elem a2 = 0; a2 < n; ++a2) {
        Elem const a = N.mul(a1, sigma[a2]);
        Elem const h = H.mul(h1, h2);
        images[a2 + n * h2] = static_cast<Point>(a + n * h);
      }
    }
    return Perm(std::move(images));
  };

  std::vector<Perm> normal_gens, complement_gens;
  for (Elem a : N.generator_indices())
    normal_gens.push_back(left_mult(a, identity_elem));
  for (Elem h : H.generator_indices())
    complement_gens.push_back(left_mult(identity_elem, h));

  std::vector<Perm> gens(normal_gens);
  gens.insert(gens.end(), complement_gens.begin(), complement_gens.end());

  auto G = FiniteGroup::close(size, std::move(gens), limits);

  auto embed_normal = Homomorphism::from_generator_perms(N, G, normal_gens);
  auto embed_complement =
    Homomorphism::from_generator_perms(H, G, complement_gens);

  Subgroup normal_image(G, embed_normal.image().members(), true);
  auto complement_image = embed_complement.image();

  return SemidirectProduct{std::move(G), std::move(normal_image),
                           std::move(complement_image),
                           std::move(embed_normal),
                           std::move(embed_complement)};
}

SemidirectProduct semidirect(FiniteGroup const &N, FiniteGroup const &H,
                             std::span<Perm const> generator_actions,
                             Limits const &limits)
{
  for (auto const &sigma : generator_actions) {
    if (!is_automorphism(N, sigma))
      throw InvalidAction("action " + sigma.to_string() +
                          " is not an automorphism of N");
  }

  auto A = FiniteGroup::close(N.order(),
                              {generator_actions.begin(),
                               generator_actions.end()},
                              limits);
  try {
    auto alpha = Homomorphism::from_generator_perms(H, A, generator_actions);
    return semidirect(N, H, alpha, limits);
  } catch (NotAHomomorphism const &e) {
    throw InvalidAction(std::string("generator actions do not define a "
                                    "homomorphism: ") + e.what());
  }
}

} // namespace egrp
