#include <chrono>

#include "egrp/errors.hpp"
#include "suite_support.hpp"

namespace egrp
{

namespace detail
{

namespace
{

std::string skip_reason(OrderBoundExceeded const &e)
{
  std::string_view what = e.what();
  if (what.find("search cap") != std::string_view::npos)
    return "aut-cap";
  if (what.find("oracle cap") != std::string_view::npos)
    return "oracle-cap";
  return "order-bound";
}

} // anonymous namespace

void SuiteRun::add(std::string case_id, std::vector<std::string> groups,
                   std::string claim, CaseBody const &body)
{
  CaseResult result;
  result.case_id = std::move(case_id);
  result.groups = std::move(groups);
  result.claim = std::move(claim);

  try {
    auto verdict = body(result.witness);
    if (auto const *skip = std::get_if<Skip>(&verdict)) {
      result.status = CaseStatus::skipped;
      result.skip_reason = skip->reason;
    } else {
      result.status = std::get<bool>(verdict) ? CaseStatus::pass
                                              : CaseStatus::fail;
    }
  } catch (OrderBoundExceeded const &e) {
    result.status = CaseStatus::skipped;
    result.skip_reason = skip_reason(e);
    result.witness["bound"] = e.bound();
  } catch (GroupError const &e) {
    result.status = CaseStatus::fail;
    result.witness["error"] = e.what();
  }

  _cases.push_back(std::move(result));
}

nlohmann::json members_json(Subgroup const &S)
{ return {{"spec", S.to_spec()}, {"members", S.members()}}; }

} // namespace detail

namespace
{

struct SuiteEntry
{
  std::string_view name;
  detail::SuiteFn run;
};

constexpr SuiteEntry suites[] = {
  {"kk", detail::suite_kk},
  {"sk", detail::suite_sk},
  {"pm", detail::suite_pm},
  {"jj", detail::suite_jj},
  {"nbk", detail::suite_nbk},
  {"khma", detail::suite_khma},
  {"babcho", detail::suite_babcho},
  {"malnormal", detail::suite_malnormal},
  {"sym", detail::suite_sym},
  {"ma", detail::suite_ma},
  {"abelian_ext", detail::suite_abelian_ext},
  {"bchche", detail::suite_bchche},
  {"hol_remark", detail::suite_hol_remark},
};

void summarize(VerificationReport &report)
{
  report.summary.pass = report.summary.fail = report.summary.skipped = 0;
  for (auto const &c : report.cases) {
    switch (c.status) {
    case CaseStatus::pass:
      ++report.summary.pass;
      break;
    case CaseStatus::fail:
      ++report.summary.fail;
      break;
    case CaseStatus::skipped:
      ++report.summary.skipped;
      break;
    }
  }
}

} // anonymous namespace

std::vector<std::string> const &suite_names()
{
  static auto const names = [] {
    std::vector<std::string> n;
    for (auto const &s : suites)
      n.emplace_back(s.name);
    n.emplace_back("all");
    return n;
  }();
  return names;
}

VerificationReport run_suite(std::string_view name, SuiteOptions const &options)
{
  auto const start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.suite = std::string(name);

  if (name == "all") {
    for (auto const &s : suites) {
      for (auto &c : s.run(options)) {
        c.case_id = std::string(s.name) + "/" + c.case_id;
        report.cases.push_back(std::move(c));
      }
    }
  } else {
    auto const *it = std::find_if(std::begin(suites), std::end(suites),
                                  [&](auto const &s) { return s.name == name; });
    if (it == std::end(suites))
      throw UnknownSuite("unknown suite: " + std::string(name));
    report.cases = it->run(options);
  }

  summarize(report);
  report.summary.wall_time =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
  return report;
}

} // namespace egrp
