#include "egrp/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "egrp/errors.hpp"
#include "egrp/lattice.hpp"
#include "search.hpp"

namespace egrp
{

Homomorphism::Homomorphism(FiniteGroup domain, FiniteGroup codomain,
                           std::vector<Elem> image_of)
: _domain(std::move(domain)),
  _codomain(std::move(codomain)),
  _image_of(std::move(image_of))
{
  std::size_t kernel_size = 0;
  std::vector<bool> hit(_codomain.order(), false);
  std::size_t image_size = 0;

  for (Elem y : _image_of) {
    if (y == identity_elem)
      ++kernel_size;
    if (!hit[y]) {
      hit[y] = true;
      ++image_size;
    }
  }

  _mono = kernel_size == 1;
  _epi = image_size == _codomain.order();
}

Homomorphism Homomorphism::from_generator_images(FiniteGroup domain,
                                                 FiniteGroup codomain,
                                                 std::span<Elem const> images)
{
  auto const &gens = domain.generator_indices();
  if (images.size() != gens.size())
    throw NotAHomomorphism("expected " + std::to_string(gens.size()) +
                           " generator images, got " +
                           std::to_string(images.size()));

  for (Elem y : images) {
    if (y >= codomain.order())
      throw NotAHomomorphism("generator image outside the codomain");
  }

  std::vector<Elem> image_of(domain.order(), identity_elem);
  for (Elem i = 1; i < domain.order(); ++i) {
    image_of[i] = codomain.mul(images[domain.word_generator(i)],
                               image_of[domain.word_parent(i)]);
  }

  // f(g x) = f(g) f(x) for generators g and all x implies the full law
  for (Elem x = 0; x < domain.order(); ++x) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (image_of[domain.mul(gens[s], x)] !=
          codomain.mul(images[s], image_of[x]))
        throw NotAHomomorphism(
          "generator images do not extend to a homomorphism");
    }
  }

  return Homomorphism(std::move(domain), std::move(codomain),
                      std::move(image_of));
}

Homomorphism Homomorphism::from_generator_perms(FiniteGroup domain,
                                                FiniteGroup codomain,
                                                std::span<Perm const> images)
{
  std::vector<Elem> indices;
  for (auto const &p : images) {
    auto idx = codomain.index_of(p);
    if (!idx)
      throw NotAHomomorphism("generator image " + p.to_string() +
                             " is not an element of the codomain");
    indices.push_back(*idx);
  }
  return from_generator_images(std::move(domain), std::move(codomain),
                               indices);
}

Homomorphism Homomorphism::from_map(FiniteGroup domain, FiniteGroup codomain,
                                    std::vector<Elem> image_of)
{
  if (image_of.size() != domain.order())
    throw NotAHomomorphism("map is not total on the domain");

  for (Elem y : image_of) {
    if (y >= codomain.order())
      throw NotAHomomorphism("map leaves the codomain");
  }

  Homomorphism result(std::move(domain), std::move(codomain),
                      std::move(image_of));
  if (!result.satisfies_law_exhaustively())
    throw NotAHomomorphism("map violates the homomorphism law");
  return result;
}

Homomorphism Homomorphism::identity(FiniteGroup const &G)
{
  std::vector<Elem> map(G.order());
  for (Elem i = 0; i < G.order(); ++i)
    map[i] = i;
  return Homomorphism(G, G, std::move(map));
}

Subgroup Homomorphism::kernel() const
{
  std::vector<Elem> members;
  for (Elem x = 0; x < _domain.order(); ++x) {
    if (_image_of[x] == identity_elem)
      members.push_back(x);
  }
  return Subgroup(_domain, std::move(members), true);
}

Subgroup Homomorphism::image() const
{
  return Subgroup(_codomain, _image_of, _epi ? std::optional<bool>(true)
                                             : std::nullopt);
}

Subgroup Homomorphism::image(Subgroup const &S) const
{
  std::vector<Elem> members;
  members.reserve(S.order());
  for (Elem x : S.members())
    members.push_back(_image_of[x]);
  return Subgroup(_codomain, std::move(members));
}

Homomorphism Homomorphism::inverse() const
{
  if (!is_iso())
    throw PreconditionFailed("only isomorphisms can be inverted");

  std::vector<Elem> inv(_codomain.order());
  for (Elem x = 0; x < _domain.order(); ++x)
    inv[_image_of[x]] = x;
  return Homomorphism(_codomain, _domain, std::move(inv));
}

bool Homomorphism::satisfies_law_exhaustively() const
{
  for (Elem x = 0; x < _domain.order(); ++x) {
    for (Elem y = 0; y < _domain.order(); ++y) {
      if (_image_of[_domain.mul(x, y)] !=
          _codomain.mul(_image_of[x], _image_of[y]))
        return false;
    }
  }
  return true;
}

Homomorphism compose(Homomorphism const &outer, Homomorphism const &inner)
{
  if (!(inner.codomain() == outer.domain()))
    throw InvalidParameter("composed homomorphisms do not match");

  std::vector<Elem> gen_images;
  for (Elem g : inner.domain().generator_indices())
    gen_images.push_back(outer(inner(g)));

  return Homomorphism::from_generator_images(inner.domain(), outer.codomain(),
                                             gen_images);
}

Quotient quotient(Subgroup const &N, Limits const &limits)
{
  auto const &G = N.parent();
  if (!N.is_normal())
    throw NotNormal("quotient requires a normal subgroup");

  constexpr Elem unassigned = ~Elem{0};
  std::vector<Elem> coset_of(G.order(), unassigned);
  std::vector<Elem> reps;

  for (Elem g = 0; g < G.order(); ++g) {
    if (coset_of[g] != unassigned)
      continue;
    auto const c = static_cast<Elem>(reps.size());
    reps.push_back(g);
    for (Elem n : N.members())
      coset_of[G.mul(g, n)] = c;
  }

  auto const index = reps.size();
  if (index > limits.max_order)
    throw OrderBoundExceeded("coset index exceeds maximal order",
                             limits.max_order);

  std::vector<Perm> gens;
  for (Elem x : G.generator_indices()) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c)
      images[c] = coset_of[G.mul(x, reps[c])];
    gens.emplace_back(std::move(images));
  }

  auto Q = FiniteGroup::close(index, gens, limits);
  auto projection = Homomorphism::from_generator_perms(G, Q, gens);

  if (projection.kernel().members() != N.members())
    throw std::logic_error("quotient projection kernel differs from N");

  return Quotient{std::move(Q), std::move(projection)};
}

DirectProduct direct_product(FiniteGroup const &A, FiniteGroup const &B,
                             Limits const &limits)
{
  if (A.order() * B.order() > limits.max_order)
    throw OrderBoundExceeded("direct product exceeds maximal order",
                             limits.max_order);

  auto const degree = A.degree() + B.degree();

  std::vector<Perm> left_gens, right_gens;
  for (auto const &g : A.generators())
    left_gens.push_back(g.shifted(0, degree));
  for (auto const &g : B.generators())
    right_gens.push_back(g.shifted(A.degree(), degree));

  std::vector<Perm> gens(left_gens);
  gens.insert(gens.end(), right_gens.begin(), right_gens.end());

  auto P = FiniteGroup::close(degree, std::move(gens), limits);

  auto embed_left = Homomorphism::from_generator_perms(A, P, left_gens);
  auto embed_right = Homomorphism::from_generator_perms(B, P, right_gens);

  Subgroup left(P, embed_left.image().members(), true);
  Subgroup right(P, embed_right.image().members(), true);

  return DirectProduct{std::move(P), std::move(left), std::move(right),
                       std::move(embed_left), std::move(embed_right)};
}

InvariantProfile invariant_profile(FiniteGroup const &G)
{
  InvariantProfile profile;
  profile.order = G.order();
  profile.center_order = center(G).order();

  auto const sizes = class_sizes(G);
  for (Elem x = 0; x < G.order(); ++x)
    profile.order_class_size.emplace_back(G.element_order(x), sizes[x]);
  std::sort(profile.order_class_size.begin(), profile.order_class_size.end());

  return profile;
}

std::optional<Homomorphism> find_isomorphism(FiniteGroup const &A,
                                             FiniteGroup const &B,
                                             Limits const &limits)
{
  if (A.order() != B.order())
    return std::nullopt;

  if (A.order() > limits.aut_cap)
    throw OrderBoundExceeded("isomorphism search exceeds the search cap",
                             limits.aut_cap);

  if (invariant_profile(A) != invariant_profile(B))
    return std::nullopt;

  auto const gens = detail::generating_sequence(A);
  auto const candidates = detail::matching_candidates(A, B, gens);

  std::optional<std::vector<Elem>> found;
  detail::enumerate_embeddings(A, B, gens, candidates,
                               [&](std::vector<Elem> const &map) {
                                 found = map;
                                 return false;
                               });

  if (!found)
    return std::nullopt;

  std::vector<Elem> gen_images;
  for (Elem g : A.generator_indices())
    gen_images.push_back((*found)[g]);
  return Homomorphism::from_generator_images(A, B, gen_images);
}

bool is_isomorphic(FiniteGroup const &A, FiniteGroup const &B,
                   Limits const &limits)
{
  return find_isomorphism(A, B, limits).has_value();
}

} // namespace egrp
