#include <optional>

#include "egrp/automorphism.hpp"
#include "egrp/errors.hpp"
#include "egrp/essential.hpp"
#include "egrp/homomorphism.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"
#include "suite_support.hpp"

namespace egrp::detail
{

namespace
{

struct Sample
{
  std::string ambient;
  Homomorphism phi;
  Essentialization result;
};

std::vector<std::pair<std::string, Homomorphism>>
sample_embeddings(std::string const &name, FiniteGroup const &G,
                  Limits const &limits)
{
  std::vector<std::pair<std::string, Homomorphism>> out;
  if (G.order() * automorphism_count(G, limits) <= limits.max_order)
    out.emplace_back("Hol(" + name + ")", holomorph(G, limits).embed_base);
  if (center(G).is_trivial()) {
    auto const aut = automorphism_group(G, limits);
    std::vector<Perm> inner;
    for (Elem g : G.generator_indices())
      inner.push_back(inner_automorphism(G, g));
    out.emplace_back("Aut(" + name + ")",
                     Homomorphism::from_generator_perms(G, aut.as_perm_group,
                                                        inner));
  }
  if (G.order() * 2 <= limits.max_order)
    out.emplace_back("(" + name + ") x C2",
                     direct_product(G, cyclic(2), limits).embed_left);
  if (G.order() * 6 <= limits.max_order)
    out.emplace_back("(" + name + ") x S3",
                     direct_product(G, symmetric(3), limits).embed_left);
  return out;
}

// G = A x B with A abelian and nontrivial embeds essentially and properly
// into ext(A) x B.
std::optional<nlohmann::json> abelian_factor_extension(FiniteGroup const &G,
                                                       Limits const &limits)
{
  for (auto const &A : normal_subgroups(G, limits).normals) {
    if (A.is_trivial() || !A.is_abelian())
      continue;
    auto const B = normal_complement(A);
    if (!B)
      continue;

    try {
      auto const Ag = A.as_group(limits);
      auto const Bg = B->as_group(limits);
      auto const ext = abelian_essential_extension(Ag, limits);
      auto const P = direct_product(ext.extension, Bg, limits);

      std::vector<Elem> image_of(G.order());
      for (Elem g = 0; g < G.order(); ++g) {
        for (Elem a : A.members()) {
          Elem const b = G.mul(G.inv(a), g);
          if (!B->contains(b))
            continue;
          Elem const x = ext.embedding(*Ag.index_of(G.element(a)));
          Elem const y = *Bg.index_of(G.element(b));
          image_of[g] = P.group.mul(P.embed_left(x), P.embed_right(y));
          break;
        }
      }

      auto const phi = Homomorphism::from_map(G, P.group, std::move(image_of));
      auto const image = phi.image();
      if (phi.is_mono() && !image.is_whole() &&
          is_essential_by_definition(image))
        return nlohmann::json{{"factor", members_json(A)},
                              {"extension_order", P.group.order()}};
    } catch (OrderBoundExceeded const &) {
    }
  }
  return std::nullopt;
}

// G inside the subgroup of Hol(G) generated by the left translations and a
// single outer automorphism.
std::optional<nlohmann::json> outer_section_extension(FiniteGroup const &G,
                                                      Limits const &limits)
{
  std::size_t const n = G.order();
  std::vector<Perm> translations;
  for (Elem g : G.generator_indices()) {
    std::vector<Point> images(n);
    for (Elem x = 0; x < n; ++x)
      images[x] = G.mul(g, x);
    translations.emplace_back(std::move(images));
  }

  auto const aut = automorphism_group(G, limits);
  auto const &A = aut.as_perm_group;
  for (Elem s = 1; s < A.order(); ++s) {
    if (aut.inner.contains(s) || n * A.element_order(s) > limits.max_order)
      continue;

    auto gens = translations;
    gens.push_back(A.element(s));
    auto const K = FiniteGroup::close(n, std::move(gens), limits);
    auto const phi = Homomorphism::from_generator_perms(G, K, translations);
    auto const result = essentialize(phi, limits);
    if (result.proper())
      return nlohmann::json{{"automorphism", A.element(s).to_string()},
                            {"ambient_order", K.order()},
                            {"extension_order", result.quotient.group.order()}};
  }
  return std::nullopt;
}

// Z2 x C with C complete and without subgroups of index 2.
bool matches_z2_pattern(FiniteGroup const &G, Limits const &limits)
{
  for (auto const &Z : normal_subgroups(G, limits).normals) {
    if (Z.order() != 2)
      continue;
    auto const C = normal_complement(Z);
    if (!C)
      continue;
    if (C->is_trivial())
      return true;
    // Index-2 subgroups are normal, so the normal lattice suffices.
    auto const Cg = C->as_group(limits);
    auto const &normals = normal_subgroups(Cg, limits).normals;
    return is_complete(Cg, limits) &&
           std::none_of(normals.begin(), normals.end(),
                        [](auto const &F) { return F.index() == 2; });
  }
  return false;
}

} // anonymous namespace

std::vector<CaseResult> suite_ma(SuiteOptions const &options)
{
  SuiteRun run;
  auto const &limits = options.limits;

  for (auto const &[name, G] : catalog(options.max_order, limits)) {
    std::vector<Sample> samples;

    run.add(name, {name},
            "G is complete iff it has no proper essential extension: sampled "
            "normal embeddings split exactly when G is complete",
            [&, &G = G, &name = name](nlohmann::json &w) -> Verdict {
              if (G.order() > limits.aut_cap)
                return Skip{"aut-cap"};

              bool const complete = is_complete(G, limits);
              bool all_split = true;
              bool consistent = true;
              bool proper_found = false;
              auto embeddings = nlohmann::json::array();

              for (auto &[ambient, phi] : sample_embeddings(name, G, limits)) {
                auto result = essentialize(phi, limits);
                bool const split = normal_complement(phi.image()).has_value();
                all_split = all_split && split;
                proper_found = proper_found || result.proper();
                consistent = consistent && split == !result.proper();
                embeddings.push_back({{"ambient", ambient},
                                      {"split", split},
                                      {"proper", result.proper()}});
                samples.push_back({ambient, phi, std::move(result)});
              }

              w = {{"complete", complete}, {"embeddings", embeddings}};
              if (complete)
                return consistent && all_split;

              if (proper_found)
                return consistent;
              if (auto witness = abelian_factor_extension(G, limits)) {
                w["abelian_factor_extension"] = *witness;
                return consistent;
              }
              if (auto witness = outer_section_extension(G, limits)) {
                w["outer_section_extension"] = *witness;
                return consistent;
              }
              return Skip{"no-witness-in-sample"};
            });

    for (auto const &s : samples) {
      run.add("essentialize/" + name + " in " + s.ambient, {name, s.ambient},
              "psi is a monomorphism onto an essential subgroup of the "
              "quotient by a maximal T meeting the image trivially",
              [&](nlohmann::json &w) -> Verdict {
                auto const &r = s.result;
                auto const image = s.phi.image();
                bool const t_ok = r.T.is_normal() &&
                                  intersection(r.T, image).is_trivial();

                bool maximal = true;
                for (auto const &N :
                     normal_subgroups(s.phi.codomain(), limits).normals) {
                  if (N.order() > r.T.order() && r.T.is_subset_of(N) &&
                      intersection(N, image).is_trivial())
                    maximal = false;
                }

                auto const psi_image = r.psi.image();
                bool const essential = r.certificate.essential &&
                                       is_essential_by_definition(psi_image);
                w = {{"T", members_json(r.T)},
                     {"quotient_order", r.quotient.group.order()},
                     {"mono", r.psi.is_mono()},
                     {"essential", essential},
                     {"maximal_T", maximal}};
                return r.psi.is_mono() && essential && t_ok && maximal;
              });
    }
  }
  return run.take();
}

std::vector<CaseResult> suite_abelian_ext(SuiteOptions const &options)
{
  SuiteRun run;
  for (auto const &[name, G] : catalog(options.max_order, options.limits)) {
    if (!G.is_abelian())
      continue;
    run.add(name, {name},
            "every nontrivial abelian group has a proper essential extension",
            [&, &G = G](nlohmann::json &w) -> Verdict {
              auto const ext = abelian_essential_extension(G, options.limits);
              auto const image = ext.embedding.image();
              bool const essential = is_essential_by_definition(image);

              auto factors = nlohmann::json::array();
              for (auto const &f : ext.decomposition.factors)
                factors.push_back({{"p", f.p}, {"k", f.k}});
              w = {{"extension_order", ext.extension.order()},
                   {"factors", factors},
                   {"mono", ext.embedding.is_mono()},
                   {"essential", essential}};
              return ext.embedding.is_mono() && !image.is_whole() && essential;
            });
  }
  return run.take();
}

std::vector<CaseResult> suite_bchche(SuiteOptions const &options)
{
  SuiteRun run;
  auto const &limits = options.limits;

  for (auto const &[name, G] : catalog(options.max_order, limits)) {
    run.add(name, {name, "Hol(" + name + ")"},
            "G is a direct summand of Hol(G) iff G is complete or G = Z2 x C "
            "with C complete and without index-2 subgroups",
            [&, &G = G](nlohmann::json &w) -> Verdict {
              if (G.order() > limits.aut_cap)
                return Skip{"aut-cap"};
              if (G.order() * automorphism_count(G, limits) > limits.max_order)
                return Skip{"order-bound"};

              auto const hol = holomorph(G, limits);
              bool const summand =
                normal_complement(hol.base_image).has_value();
              bool const complete = is_complete(G, limits);
              bool const pattern = matches_z2_pattern(G, limits);
              w = {{"summand", summand}, {"complete", complete},
                   {"z2_pattern", pattern}, {"hol_order", hol.group.order()}};
              return summand == (complete || pattern);
            });
  }
  return run.take();
}

std::vector<CaseResult> suite_hol_remark(SuiteOptions const &options)
{
  SuiteRun run;
  auto const &limits = options.limits;

  run.add("Hol(C2)", {"Hol(C2)", "C2"}, "Hol(Z2) is isomorphic to Z2",
          [&](nlohmann::json &w) -> Verdict {
            auto const hol = holomorph(cyclic(2), limits);
            bool const iso = is_isomorphic(hol.group, cyclic(2), limits);
            w = {{"order", hol.group.order()}, {"isomorphic", iso}};
            return iso;
          });

  for (auto const &[name, G] : catalog(options.max_order, limits)) {
    if (G.order() > limits.aut_cap || center(G).order() == 2)
      continue;
    if (G.order() * automorphism_count(G, limits) > limits.max_order ||
        is_complete(G, limits))
      continue;

    run.add(name, {name, "Hol(" + name + ")"},
            "if |Z(G)| != 2 and G is not complete, Hol(G) has a proper "
            "essential subgroup",
            [&, &G = G](nlohmann::json &w) -> Verdict {
              auto const hol = holomorph(G, limits);
              bool const flag = has_proper_essential(hol.group);
              w = {{"hol_order", hol.group.order()},
                   {"center_order", center(G).order()},
                   {"proper_essential", flag}};
              return flag;
            });
  }
  return run.take();
}

} // namespace egrp::detail
