#include "egrp/harness.hpp"

#include <utility>

#include "egrp/spec_lang.hpp"

namespace egrp
{

namespace
{

std::vector<std::pair<std::string, std::size_t>> const &catalog_table()
{
  static auto const table = [] {
    std::vector<std::pair<std::string, std::size_t>> t;
    for (std::size_t n = 2; n <= 32; ++n)
      t.emplace_back("C" + std::to_string(n), n);
    for (std::size_t n = 6; n <= 32; n += 2)
      t.emplace_back("D" + std::to_string(n), n);
    t.insert(t.end(), {
      {"S3", 6}, {"S4", 24}, {"S5", 120}, {"S6", 720},
      {"A4", 12}, {"A5", 60}, {"A6", 360},
      {"Q8", 8},
      {"E2^2", 4}, {"E2^3", 8}, {"E3^2", 9},
      {"sdp(5,4,2)", 20}, {"sdp(7,3,2)", 21}, {"sdp(9,3,4)", 27},
      {"C2 x C4", 8}, {"C2 x C6", 12}, {"C3 x C6", 18}, {"C4 x C4", 16},
      {"C2 x S3", 12}, {"C3 x S3", 18}, {"S3 x S3", 36},
      {"C2 x Q8", 16}, {"C2 x D8", 16}, {"C2 x A4", 24}, {"C2 x S4", 48},
      {"C2 x A5", 120},
      {"Hol(C2)", 2}, {"Hol(C3)", 6}, {"Hol(C5)", 20}, {"Hol(C7)", 42},
      {"Hol(C11)", 110}, {"Hol(C13)", 156},
    });
    return t;
  }();
  return table;
}

} // anonymous namespace

std::vector<std::string> catalog_specs(std::size_t max_order)
{
  std::vector<std::string> specs;
  for (auto const &[spec, order] : catalog_table()) {
    if (order <= max_order)
      specs.push_back(spec);
  }
  return specs;
}

std::vector<CatalogEntry> catalog(std::size_t max_order, Limits const &limits)
{
  std::vector<CatalogEntry> entries;
  for (auto const &spec : catalog_specs(max_order))
    entries.push_back({spec, evaluate(spec, limits)});
  return entries;
}

} // namespace egrp
