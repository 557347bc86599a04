#include <algorithm>

#include "egrp/actions.hpp"
#include "egrp/essential.hpp"
#include "egrp/lattice.hpp"
#include "egrp/named.hpp"
#include "suite_support.hpp"

namespace egrp::detail
{

namespace
{

std::vector<Subgroup> conjugacy_representatives(std::vector<Subgroup> const &subs)
{
  std::vector<Subgroup> reps;
  for (auto const &S : subs) {
    auto const &G = S.parent();
    bool const seen = std::any_of(reps.begin(), reps.end(), [&](auto const &R) {
      if (R.order() != S.order())
        return false;
      for (Elem g = 0; g < G.order(); ++g) {
        if (conjugate(S, g) == R)
          return true;
      }
      return false;
    });
    if (!seen)
      reps.push_back(S);
  }
  return reps;
}

// Runs the certificate over every subgroup H for one action.
Verdict check_khma(GroupAction const &f, std::vector<Subgroup> const &subs,
                   nlohmann::json &w)
{
  auto const K0 = kernel(f);
  std::size_t applicable = 0;
  std::size_t failed_condition = 0;
  std::size_t proper = 0;

  for (auto const &H : subs) {
    auto outcome = khma_certify(H, f);
    if (std::holds_alternative<ConditionFailed>(outcome)) {
      ++failed_condition;
      continue;
    }

    ++applicable;
    auto const &cert = std::get<EssentialCertificate>(outcome);
    auto const expected = join(normal_closure(H), K0);
    if (!cert.essential || !cert.recheck() || cert.subject != expected ||
        !is_essential_by_definition(cert.subject)) {
      w["counterexample"] = {{"H", members_json(H)},
                             {"K", members_json(cert.subject)}};
      return false;
    }
    if (!cert.subject.is_whole())
      ++proper;
  }

  w["set_size"] = f.set_size();
  w["applicable"] = applicable;
  w["condition_failed"] = failed_condition;
  w["proper_essential"] = proper;
  return true;
}

struct BranchCount
{
  std::size_t whole = 0;
  std::size_t proper = 0;
};

Verdict check_closure(std::vector<Subgroup> const &subs, bool malnormal,
                      BranchCount &total, nlohmann::json &w)
{
  BranchCount count;
  for (auto const &S : subs) {
    bool const applies = malnormal ? !S.is_trivial() && is_malnormal(S)
                                   : is_self_normalizing(S);
    if (!applies)
      continue;

    auto const outcome = malnormal ? malnormal_certify(S) : babcho_certify(S);
    auto const ncl = normal_closure(S);
    bool ok = false;
    if (std::holds_alternative<WholeGroup>(outcome)) {
      ok = ncl.is_whole();
      ++count.whole;
    } else {
      auto const &cert = std::get<EssentialCertificate>(outcome);
      ok = cert.subject == ncl && !ncl.is_whole() && cert.essential &&
           is_essential_by_definition(ncl);
      ++count.proper;
    }
    if (!ok) {
      w["counterexample"] = members_json(S);
      return false;
    }
  }

  total.whole += count.whole;
  total.proper += count.proper;
  w["whole_group"] = count.whole;
  w["proper_essential"] = count.proper;
  return true;
}

std::vector<CaseResult> closure_suite(SuiteOptions const &options,
                                      bool malnormal)
{
  SuiteRun run;
  BranchCount total;
  std::string const claim =
    malnormal ? "for nontrivial malnormal S, ncl(S) = G or ncl(S) is a "
                "proper essential subgroup"
              : "for self-normalizing S, ncl(S) = G or ncl(S) is a proper "
                "essential subgroup";

  for (auto const &[name, G] : catalog(options.max_order, options.limits)) {
    run.add(name, {name}, claim, [&, &G = G](nlohmann::json &w) -> Verdict {
      if (G.order() > options.limits.oracle_cap)
        return Skip{"oracle-cap"};
      return check_closure(all_subgroups(G, options.limits), malnormal, total,
                           w);
    });
  }

  run.add("branches", {}, "distribution of outcomes over the catalog",
          [&](nlohmann::json &w) -> Verdict {
            w = {{"whole_group", total.whole},
                 {"proper_essential", total.proper}};
            return true;
          });
  return run.take();
}

} // anonymous namespace

std::vector<CaseResult> suite_khma(SuiteOptions const &options)
{
  SuiteRun run;
  std::string const claim =
    "if no stabilizer in H contains another, ncl(H) Ker(f) is essential";

  for (auto const &[name, G] : catalog(options.max_order, options.limits)) {
    if (G.order() > options.limits.oracle_cap) {
      run.add(name, {name}, claim,
              [](nlohmann::json &) -> Verdict { return Skip{"oracle-cap"}; });
      continue;
    }

    auto const subs = all_subgroups(G, options.limits);
    run.add(name + "/natural", {name}, claim,
            [&, &G = G](nlohmann::json &w) -> Verdict {
              return check_khma(GroupAction::natural(G), subs, w);
            });

    auto const reps = conjugacy_representatives(subs);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      run.add(name + "/coset" + std::to_string(i), {name, reps[i].to_spec()},
              claim, [&, i](nlohmann::json &w) -> Verdict {
                return check_khma(coset_action(reps[i], options.limits), subs,
                                  w);
              });
    }
  }
  return run.take();
}

std::vector<CaseResult> suite_babcho(SuiteOptions const &options)
{ return closure_suite(options, false); }

std::vector<CaseResult> suite_malnormal(SuiteOptions const &options)
{ return closure_suite(options, true); }

std::vector<CaseResult> suite_sym(SuiteOptions const &options)
{
  SuiteRun run;
  unsigned const top = options.slow ? 6 : 5;

  for (unsigned n = 3; n <= top; ++n) {
    std::string const name = "S" + std::to_string(n);
    run.add(name, {name, "A" + std::to_string(n)},
            "A_n is essential in S_n and S_n is indecomposable",
            [&, n](nlohmann::json &w) -> Verdict {
              auto const G = symmetric(n);
              auto const An_group = alternating(n);
              std::vector<Elem> members;
              for (auto const &p : An_group.elements())
                members.push_back(*G.index_of(p));
              std::sort(members.begin(), members.end());
              auto const An = Subgroup::from_members(G, members);

              bool const essential =
                is_essential(An).essential && is_essential_by_definition(An);

              bool indecomposable = true;
              for (auto const &N : normal_subgroups(G, options.limits).normals) {
                if (!N.is_trivial() && !N.is_whole() && normal_complement(N))
                  indecomposable = false;
              }

              auto outcome = khma_certify(An, GroupAction::natural(G));
              w = {{"essential", essential},
                   {"indecomposable", indecomposable},
                   {"natural_action_certificate",
                    std::holds_alternative<EssentialCertificate>(outcome)}};
              return essential && indecomposable;
            });
  }
  return run.take();
}

} // namespace egrp::detail
