#ifndef EGRP_HARNESS_HPP
#define EGRP_HARNESS_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "egrp/group.hpp"
#include "egrp/limits.hpp"

namespace egrp
{

struct CatalogEntry
{
  std::string name;  // a spec string accepted by parse_spec
  FiniteGroup group;
};

// Fixed list of small groups with order <= max_order, in a stable order.
std::vector<CatalogEntry> catalog(std::size_t max_order,
                                  Limits const &limits = {});

// Spec strings of the full catalog, without building any group.
std::vector<std::string> catalog_specs(std::size_t max_order);

enum class CaseStatus
{
  pass,
  fail,
  skipped,
};

std::string_view to_string(CaseStatus status);

struct CaseResult
{
  std::string case_id;
  std::vector<std::string> groups;
  std::string claim;
  CaseStatus status = CaseStatus::pass;
  std::string skip_reason;  // "order-bound", "aut-cap", ...
  nlohmann::json witness = nlohmann::json::object();
};

struct ReportSummary
{
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  double wall_time = 0.0;  // seconds
};

struct VerificationReport
{
  std::string suite;
  std::vector<CaseResult> cases;
  ReportSummary summary;

  bool ok() const { return summary.fail == 0; }
};

struct SuiteOptions
{
  std::size_t max_order = 200;  // catalog filter
  Limits limits;
  bool slow = false;
};

std::vector<std::string> const &suite_names();

// Throws UnknownSuite.
VerificationReport run_suite(std::string_view name,
                             SuiteOptions const &options = {});

nlohmann::json to_json(VerificationReport const &report);
std::string to_text(VerificationReport const &report);

} // namespace egrp

#endif // EGRP_HARNESS_HPP
