#include "egrp/harness.hpp"

#include <iomanip>
#include <sstream>

namespace egrp
{

std::string_view to_string(CaseStatus status)
{
  switch (status) {
  case CaseStatus::pass:
    return "pass";
  case CaseStatus::fail:
    return "fail";
  case CaseStatus::skipped:
    return "skipped";
  }
  return "unknown";
}

nlohmann::json to_json(VerificationReport const &report)
{
  auto cases = nlohmann::json::array();
  for (auto const &c : report.cases) {
    nlohmann::json entry = {
      {"case_id", c.case_id},
      {"groups", c.groups},
      {"claim", c.claim},
      {"status", to_string(c.status)},
      {"witness", c.witness},
    };
    if (c.status == CaseStatus::skipped)
      entry["reason"] = c.skip_reason;
    cases.push_back(std::move(entry));
  }

  return {
    {"suite", report.suite},
    {"cases", std::move(cases)},
    {"summary",
     {
       {"pass", report.summary.pass},
       {"fail", report.summary.fail},
       {"skipped", report.summary.skipped},
       {"wall_time", report.summary.wall_time},
     }},
  };
}

std::string to_text(VerificationReport const &report)
{
  std::ostringstream os;
  os << std::left;
  os << std::setw(40) << "CASE" << ' ' << std::setw(8) << "STATUS" << ' '
     << "CLAIM\n";

  for (auto const &c : report.cases) {
    std::string status(to_string(c.status));
    std::string claim = c.claim;
    if (c.status == CaseStatus::skipped)
      claim += " [" + c.skip_reason + "]";
    os << std::setw(40) << c.case_id << ' ' << std::setw(8) << status << ' '
       << claim << '\n';
  }

  os << "suite " << report.suite << ": " << report.summary.pass << " pass, "
     << report.summary.fail << " fail, " << report.summary.skipped
     << " skipped in " << std::fixed << std::setprecision(2)
     << report.summary.wall_time << " s\n";
  return os.str();
}

} // namespace egrp
