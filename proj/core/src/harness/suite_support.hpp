#ifndef EGRP_HARNESS_SUITE_SUPPORT_HPP
#define EGRP_HARNESS_SUITE_SUPPORT_HPP

#include <functional>
#include <variant>

#include "egrp/harness.hpp"
#include "egrp/subgroup.hpp"

namespace egrp::detail
{

struct Skip
{
  std::string reason;
};

using Verdict = std::variant<bool, Skip>;
using CaseBody = std::function<Verdict(nlohmann::json &witness)>;

class SuiteRun
{
public:
  void add(std::string case_id, std::vector<std::string> groups,
           std::string claim, CaseBody const &body);

  std::vector<CaseResult> take() { return std::move(_cases); }

private:
  std::vector<CaseResult> _cases;
};

nlohmann::json members_json(Subgroup const &S);

using SuiteFn = std::vector<CaseResult> (*)(SuiteOptions const &);

std::vector<CaseResult> suite_kk(SuiteOptions const &options);
std::vector<CaseResult> suite_sk(SuiteOptions const &options);
std::vector<CaseResult> suite_pm(SuiteOptions const &options);
std::vector<CaseResult> suite_jj(SuiteOptions const &options);
std::vector<CaseResult> suite_nbk(SuiteOptions const &options);
std::vector<CaseResult> suite_khma(SuiteOptions const &options);
std::vector<CaseResult> suite_babcho(SuiteOptions const &options);
std::vector<CaseResult> suite_malnormal(SuiteOptions const &options);
std::vector<CaseResult> suite_sym(SuiteOptions const &options);
std::vector<CaseResult> suite_ma(SuiteOptions const &options);
std::vector<CaseResult> suite_abelian_ext(SuiteOptions const &options);
std::vector<CaseResult> suite_bchche(SuiteOptions const &options);
std::vector<CaseResult> suite_hol_remark(SuiteOptions const &options);

} // namespace egrp::detail

#endif // EGRP_HARNESS_SUITE_SUPPORT_HPP
