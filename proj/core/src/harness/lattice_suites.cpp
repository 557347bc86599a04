#include <algorithm>

#include "egrp/automorphism.hpp"
#include "egrp/essential.hpp"
#include "egrp/homomorphism.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"
#include "egrp/spec_lang.hpp"
#include "suite_support.hpp"

namespace egrp::detail
{

namespace
{

// Every Sylow subgroup is normal, i.e. the elements of p-power order form
// a subgroup of order the p-part of |G|.
bool is_nilpotent(FiniteGroup const &G)
{
  std::size_t rest = G.order();
  for (unsigned p = 2; rest > 1; ++p) {
    if (rest % p != 0)
      continue;
    std::size_t p_part = 1;
    while (rest % p == 0) {
      rest /= p;
      p_part *= p;
    }

    std::vector<Elem> p_elements;
    for (Elem g = 0; g < G.order(); ++g) {
      if (p_part % G.element_order(g) == 0)
        p_elements.push_back(g);
    }
    if (subgroup_generated(G, p_elements).order() != p_part)
      return false;
  }
  return true;
}

struct SdpFamily
{
  unsigned n;
  unsigned m;
  unsigned e;
};

std::string sdp_name(SdpFamily const &f)
{
  return "sdp(" + std::to_string(f.n) + "," + std::to_string(f.m) + "," +
         std::to_string(f.e) + ")";
}

} // anonymous namespace

std::vector<CaseResult> suite_kk(SuiteOptions const &options)
{
  SuiteRun run;
  for (auto const &[name, G] : catalog(options.max_order, options.limits)) {
    run.add(name, {name},
            "conditions a, b, c, e and soc(G) = G are equivalent",
            [&, &G = G](nlohmann::json &w) -> Verdict {
              auto const kk = kk_conditions(G, options.limits);
              w = {{"a", kk.a}, {"b", kk.b}, {"c", kk.c}, {"e", kk.e},
                   {"soc_eq_G", kk.soc_eq_G}};
              return kk.agree();
            });
  }
  return run.take();
}

std::vector<CaseResult> suite_sk(SuiteOptions const &options)
{
  static constexpr std::string_view factor_specs[] = {
    "C2", "C3", "C4", "C5", "E2^2", "S3", "C7", "D8", "Q8",
    "C9", "D10", "A4", "sdp(5,4,2)", "S4",
  };

  std::vector<std::pair<std::string, FiniteGroup>> factors;
  for (auto spec : factor_specs) {
    if (evaluate(spec, options.limits).order() <= options.max_order)
      factors.emplace_back(std::string(spec), evaluate(spec, options.limits));
  }

  SuiteRun run;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) {
      auto const &[a_name, A] = factors[i];
      auto const &[b_name, B] = factors[j];
      if (A.order() * B.order() > options.max_order)
        continue;

      run.add(a_name + " x " + b_name, {a_name, b_name},
              "A x B has a proper essential subgroup iff A or B has one, and "
              "e(A x B) = e(A) x e(B)",
              [&](nlohmann::json &w) -> Verdict {
                auto const P = direct_product(A, B, options.limits);
                bool const flag_a = has_proper_essential(A);
                bool const flag_b = has_proper_essential(B);
                bool const flag = has_proper_essential(P.group);

                auto const eA = e_of(A);
                auto const eB = e_of(B);
                std::vector<Elem> expected;
                for (Elem a : eA.members()) {
                  for (Elem b : eB.members())
                    expected.push_back(
                      P.group.mul(P.embed_left(a), P.embed_right(b)));
                }
                std::sort(expected.begin(), expected.end());
                auto const eP = e_of(P.group);

                w = {{"flag_A", flag_a}, {"flag_B", flag_b},
                     {"flag_product", flag}, {"e_A", eA.order()},
                     {"e_B", eB.order()}, {"e_product", eP.order()}};
                bool const ok_flags = flag == (flag_a || flag_b);
                bool const ok_e = expected == eP.members();
                if (!ok_e)
                  w["e_product_members"] = eP.members();
                return ok_flags && ok_e;
              });
    }
  }
  return run.take();
}

std::vector<CaseResult> suite_pm(SuiteOptions const &options)
{
  SuiteRun run;
  auto const entries = catalog(options.max_order, options.limits);

  for (auto const &[name, G] : entries) {
    run.add(name, {name}, "soc(G) = e(G) and soc(G) is essential",
            [&, &G = G](nlohmann::json &w) -> Verdict {
              auto const soc = socle(G);
              auto const e = e_of(G);
              bool const essential = is_essential_by_definition(soc);
              w = {{"socle", members_json(soc)}, {"e", e.order()},
                   {"socle_essential", essential}};
              return soc == e && essential;
            });
  }

  for (auto const &[name, G] : entries) {
    if (!is_nilpotent(G))
      continue;
    run.add("center/" + name, {name},
            "the center of a nilpotent group is essential",
            [&, &G = G](nlohmann::json &w) -> Verdict {
              auto const Z = center(G);
              w = {{"center", members_json(Z)}};
              return is_essential_by_definition(Z) && is_essential(Z).essential;
            });
  }
  return run.take();
}

std::vector<CaseResult> suite_jj(SuiteOptions const &options)
{
  SuiteRun run;
  for (auto const &[name, G] : catalog(options.max_order, options.limits)) {
    run.add(name, {name},
            "soc(G) = e(G) iff soc(G) is essential in e(G)",
            [&, &G = G](nlohmann::json &w) -> Verdict {
              auto const soc = socle(G);
              auto const e = e_of(G);
              auto const E = e.as_group(options.limits);

              std::vector<Elem> inside;
              for (Elem s : soc.members())
                inside.push_back(*E.index_of(G.element(s)));
              std::sort(inside.begin(), inside.end());
              auto const soc_in_e = Subgroup::from_members(E, inside);

              bool const equal = soc == e;
              bool const essential = is_essential(soc_in_e).essential;
              w = {{"soc_eq_e", equal}, {"soc_essential_in_e", essential},
                   {"socle", soc.order()}, {"e", e.order()}};
              return equal == essential;
            });
  }
  return run.take();
}

std::vector<CaseResult> suite_nbk(SuiteOptions const &options)
{
  static constexpr SdpFamily families[] = {
    {3, 2, 2}, {4, 2, 3}, {5, 2, 4}, {5, 4, 2}, {5, 4, 3}, {5, 4, 4},
    {7, 2, 6}, {7, 3, 2}, {7, 6, 3}, {8, 2, 3}, {8, 2, 5}, {8, 2, 7},
    {9, 2, 8}, {9, 3, 4}, {9, 6, 2}, {11, 2, 10}, {11, 5, 3}, {12, 2, 5},
    {13, 3, 3}, {13, 4, 5}, {16, 4, 3}, {5, 4, 1}, {3, 4, 2}, {7, 9, 2},
  };
  static constexpr SdpFamily converse[] = {
    {5, 2, 4}, {7, 2, 6}, {11, 2, 10}, {7, 3, 2},
  };

  SuiteRun run;
  for (auto const &f : families) {
    if (f.n * f.m > options.max_order)
      continue;
    auto const name = sdp_name(f);
    run.add(name, {name, "C" + std::to_string(f.n), "C" + std::to_string(f.m)},
            "N x| E is essential for every essential E of H; a proper "
            "essential in N or H, or a nontrivial action of abelian N and H, "
            "gives a proper essential in N x| H",
            [&](nlohmann::json &w) -> Verdict {
              auto const N = cyclic(f.n);
              auto const H = cyclic(f.m);
              std::vector<Perm> const action(H.generators().size(),
                                             power_map(N, f.e));
              auto const sd = semidirect(N, H, action, options.limits);
              auto const &G = sd.group;

              bool ok = true;
              auto lifts = nlohmann::json::array();
              for (auto const &E : essential_subgroups(H)) {
                auto const L = join(sd.normal_image, sd.embed_complement.image(E));
                bool const essential =
                  L.is_normal() && is_essential_by_definition(L);
                ok = ok && essential && (E.is_whole() || !L.is_whole());
                lifts.push_back({{"E", E.order()}, {"L", L.order()},
                                 {"essential", essential}});
              }

              bool const flag_n = has_proper_essential(N);
              bool const flag_h = has_proper_essential(H);
              bool const flag = has_proper_essential(G);
              bool const nontrivial_action = f.n > 1 && f.e % f.n != 1;
              if ((flag_n || flag_h || nontrivial_action) && !flag)
                ok = false;

              w = {{"lifts", lifts}, {"flag_N", flag_n}, {"flag_H", flag_h},
                   {"flag_G", flag}, {"nontrivial_action", nontrivial_action}};
              return ok;
            });
  }

  for (auto const &f : converse) {
    if (f.n * f.m > options.max_order)
      continue;
    auto const name = sdp_name(f);
    run.add("converse/" + name, {name},
            "N x| H has a proper essential subgroup while N and H have none",
            [&](nlohmann::json &w) -> Verdict {
              auto const G = evaluate(name, options.limits);
              bool const flag_n = has_proper_essential(cyclic(f.n));
              bool const flag_h = has_proper_essential(cyclic(f.m));
              bool const flag = has_proper_essential(G);
              w = {{"flag_N", flag_n}, {"flag_H", flag_h}, {"flag_G", flag}};
              return !flag_n && !flag_h && flag;
            });
  }
  return run.take();
}

} // namespace egrp::detail
