#include "egrp/essential.hpp"

#include <algorithm>
#include <stdexcept>

#include "closure.hpp"
#include "egrp/errors.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"

namespace egrp
{

namespace
{

// Least nontrivial element of A n B, if any.
std::optional<Elem> common_nontrivial(Subgroup const &A, Subgroup const &B)
{
  for (Elem x : A.members()) {
    if (x != identity_elem && B.contains(x))
      return x;
  }
  return std::nullopt;
}

unsigned long long ipow(unsigned long long base, unsigned exp)
{
  unsigned long long r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

FiniteGroup cyclic_product(std::vector<unsigned long long> const &orders,
                           Limits const &limits)
{
  FiniteGroup result;
  bool first = true;
  for (auto n : orders) {
    auto factor = make_named({NamedKind::cyclic, static_cast<unsigned>(n), 1},
                             limits);
    if (first) {
      result = factor;
      first = false;
    } else {
      result = direct_product(result, factor, limits).group;
    }
  }
  return result;
}

} // anonymous namespace

bool EssentialCertificate::recheck() const
{
  auto const &G = subject.parent();

  if (!essential) {
    return witness && !witness->is_trivial() && witness->is_normal() &&
           !common_nontrivial(subject, *witness);
  }

  auto const minimal = minimal_normal_subgroups(G);
  if (covered.size() != minimal.size())
    return false;

  for (std::size_t i = 0; i < minimal.size(); ++i) {
    auto const &[M, x] = covered[i];
    if (!(M == minimal[i]) || x == identity_elem || !M.contains(x) ||
        !subject.contains(x))
      return false;
  }
  return true;
}

EssentialCertificate is_essential(Subgroup const &E)
{
  if (!E.is_normal())
    throw NotNormal("essentiality is defined for normal subgroups only");

  EssentialCertificate cert{E, true, std::nullopt, {}};

  for (auto const &M : minimal_normal_subgroups(E.parent())) {
    auto x = common_nontrivial(M, E);
    if (!x) {
      cert.essential = false;
      cert.witness = M;
      cert.covered.clear();
      return cert;
    }
    cert.covered.emplace_back(M, *x);
  }
  return cert;
}

bool is_essential_by_definition(Subgroup const &E)
{
  if (!E.is_normal())
    throw NotNormal("essentiality is defined for normal subgroups only");

  for (auto const &N : normal_subgroups(E.parent()).normals) {
    if (!N.is_trivial() && !common_nontrivial(N, E))
      return false;
  }
  return true;
}

std::vector<Subgroup> essential_subgroups(FiniteGroup const &G)
{
  std::vector<Subgroup> result;
  for (auto const &N : normal_subgroups(G).normals) {
    if (is_essential(N).essential)
      result.push_back(N);
  }
  return result;
}

Subgroup e_of(FiniteGroup const &G)
{
  auto result = whole_group(G);
  for (auto const &E : essential_subgroups(G))
    result = intersection(result, E);
  return result;
}

Subgroup socle(FiniteGroup const &G)
{
  auto result = trivial_subgroup(G);
  for (auto const &M : minimal_normal_subgroups(G))
    result = join(result, M);
  return Subgroup(G, result.members(), true);
}

bool has_proper_essential(FiniteGroup const &G)
{
  for (auto const &E : essential_subgroups(G)) {
    if (!E.is_whole())
      return true;
  }
  return false;
}

KKConditions kk_conditions(FiniteGroup const &G, Limits const &limits)
{
  auto const lattice = normal_subgroups(G, limits);
  auto const &normals = lattice.normals;

  KKConditions kk;
  kk.a = !has_proper_essential(G);

  kk.b = std::all_of(normals.begin(), normals.end(), [](Subgroup const &N) {
    return normal_complement(N).has_value();
  });

  kk.c = true;
  for (auto const &N : normals) {
    if (N.is_trivial())
      continue;
    if (has_proper_essential(N.as_group(limits))) {
      kk.c = false;
      break;
    }
  }

  kk.e = true;
  for (auto const &N : normals) {
    if (N.is_whole() || !kk.e)
      continue;
    for (auto const &A : normals) {
      if (!N.is_subset_of(A))
        continue;
      bool found = false;
      for (auto const &B : normals) {
        if (!N.is_subset_of(B) ||
            A.order() * B.order() != G.order() * N.order())
          continue;
        if (intersection(A, B).members() == N.members()) {
          found = true;
          break;
        }
      }
      if (!found) {
        kk.e = false;
        break;
      }
    }
  }

  kk.soc_eq_G = socle(G).is_whole();
  return kk;
}

Essentialization essentialize(Homomorphism const &phi, Limits const &limits)
{
  if (!phi.is_mono())
    throw NotMonomorphism("essentialize requires a monomorphism");

  auto const image = phi.image();
  if (!image.is_normal())
    throw NotNormal("essentialize requires a normal image");

  auto T = maximal_trivial_intersector(Subgroup(image.parent(),
                                                image.members(), true));
  auto Q = quotient(T, limits);
  auto psi = compose(Q.projection, phi);

  auto psi_image = psi.image();
  auto certificate = is_essential(psi_image);

  return Essentialization{std::move(T), std::move(Q), std::move(psi),
                          std::move(certificate)};
}

PrimaryDecomposition abelian_primary_decomposition(FiniteGroup const &G,
                                                   Limits const &limits)
{
  if (!G.is_abelian())
    throw NotAbelian("primary decomposition requires an abelian group");

  std::vector<PrimaryFactor> factors;

  unsigned long long rest = G.order();
  for (unsigned p = 2; rest > 1; ++p) {
    if (rest % p != 0)
      continue;
    while (rest % p == 0)
      rest /= p;

    auto is_p_element = [&](Elem x) {
      auto o = G.element_order(x);
      while (o % p == 0)
        o /= p;
      return o == 1;
    };

    std::vector<Elem> sylow;
    for (Elem x = 0; x < G.order(); ++x) {
      if (is_p_element(x))
        sylow.push_back(x);
    }

    // Basis of the Sylow p-subgroup: repeatedly take an element whose
    // order modulo the current subgroup S is maximal and equals its own
    // order; it then meets S trivially.
    detail::IndexClosure S(G);
    while (S.size() < sylow.size()) {
      Elem best = identity_elem;
      std::size_t best_order = 0;
      for (Elem z : sylow) {
        std::size_t m = 1;
        for (Elem y = z; !S.contains(y); y = G.mul(y, z))
          ++m;
        if (m == G.element_order(z) && m > best_order) {
          best = z;
          best_order = m;
        }
      }
      if (best_order <= 1)
        throw std::logic_error("primary decomposition found no basis element");

      unsigned k = 0;
      for (auto o = best_order; o > 1; o /= p)
        ++k;
      factors.push_back({p, k, best});
      S.add(best);
    }
  }

  std::stable_sort(factors.begin(), factors.end(),
                   [](PrimaryFactor const &a, PrimaryFactor const &b) {
                     return a.p != b.p ? a.p < b.p : a.k < b.k;
                   });

  std::vector<unsigned long long> orders;
  std::vector<Elem> images;
  for (auto const &f : factors) {
    orders.push_back(ipow(f.p, f.k));
    images.push_back(f.generator);
  }

  auto D = cyclic_product(orders, limits);
  auto to_G = Homomorphism::from_generator_images(D, G, images);
  if (!to_G.is_iso())
    throw std::logic_error("primary decomposition is not an isomorphism");

  return PrimaryDecomposition{std::move(factors), D, to_G.inverse()};
}

EssentialExtension abelian_essential_extension(FiniteGroup const &G,
                                               Limits const &limits)
{
  if (!G.is_abelian())
    throw NotAbelian("essential extension construction requires an abelian group");
  if (G.is_trivial())
    throw TrivialGroup("the trivial group has no proper essential extension");

  auto decomposition = abelian_primary_decomposition(G, limits);

  std::vector<unsigned long long> orders;
  unsigned long long total = 1;
  for (auto const &f : decomposition.factors) {
    orders.push_back(ipow(f.p, f.k + 1));
    total *= orders.back();
  }
  if (total > limits.max_order)
    throw OrderBoundExceeded("essential extension exceeds maximal order",
                             limits.max_order);

  auto Ext = cyclic_product(orders, limits);

  std::vector<Elem> images;
  auto const &ext_gens = Ext.generator_indices();
  for (std::size_t i = 0; i < decomposition.factors.size(); ++i)
    images.push_back(Ext.pow(ext_gens[i], decomposition.factors[i].p));

  auto lift = Homomorphism::from_generator_images(
    decomposition.cyclic_product, Ext, images);
  auto embedding = compose(lift, decomposition.isomorphism);

  return EssentialExtension{std::move(Ext), std::move(embedding),
                            std::move(decomposition)};
}

} // namespace egrp
