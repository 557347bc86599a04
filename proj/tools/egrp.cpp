#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "egrp/automorphism.hpp"
#include "egrp/errors.hpp"
#include "egrp/essential.hpp"
#include "egrp/harness.hpp"
#include "egrp/lattice.hpp"
#include "egrp/spec_lang.hpp"

using namespace egrp;

namespace
{

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Row
{
  std::string_view label;
};

std::ostream &operator<<(std::ostream &os, Row const &r)
{ return os << std::left << std::setw(18) << r.label; }

void print_caret(std::string const &spec, std::size_t offset)
{
  std::cerr << "  " << spec << '\n'
            << "  " << std::string(offset, ' ') << "^\n";
}

int cmd_info(std::string const &text, Limits const &limits)
{
  auto const G = evaluate(text, limits);
  auto const lattice = normal_subgroups(G, limits);

  std::cout << Row{"spec"} << render(parse_spec(text)) << '\n'
            << Row{"order"} << G.order() << '\n'
            << Row{"center"} << center(G).order() << '\n'
            << Row{"normal"} << lattice.normals.size() << '\n'
            << Row{"socle"} << socle(G).to_spec() << '\n'
            << Row{"e(G) order"} << e_of(G).order() << '\n'
            << Row{"essential"} << essential_subgroups(G).size() << '\n';
  std::cout << Row{"complete"};
  if (G.order() <= limits.aut_cap)
    std::cout << yes_no(is_complete(G, limits)) << '\n';
  else
    std::cout << "unknown (order above aut cap " << limits.aut_cap << ")\n";
  std::cout << Row{"proper essential"} << yes_no(has_proper_essential(G))
            << '\n';
  return 0;
}

int cmd_essential(std::string const &text, bool list, Limits const &limits)
{
  auto const G = evaluate(text, limits);
  auto const essentials = essential_subgroups(G);
  std::cout << essentials.size() << " essential subgroups, "
            << (has_proper_essential(G) ? "some proper" : "none proper")
            << '\n';
  if (list) {
    for (auto const &E : essentials)
      std::cout << "  order " << E.order() << "  " << E.to_spec() << '\n';
  }
  return 0;
}

int cmd_extend(std::string const &text, Limits const &limits)
{
  auto const G = evaluate(text, limits);
  if (G.is_trivial()) {
    std::cout << "trivial group\n";
    return 0;
  }

  if (G.is_abelian()) {
    auto const ext = abelian_essential_extension(G, limits);
    std::cout << Row{"extension order"} << ext.extension.order() << '\n'
              << Row{"extension"} << ext.extension.generators().size()
              << " generators on " << ext.extension.degree() << " points\n"
              << Row{"image"} << ext.embedding.image().to_spec() << '\n';
    return 0;
  }

  if (is_complete(G, limits)) {
    std::cout << "complete - none exists\n";
    return 0;
  }

  // Inn(G) is essential in Aut(G) when the center is trivial.
  if (center(G).is_trivial()) {
    auto const aut = automorphism_group(G, limits);
    std::cout << Row{"extension order"} << aut.as_perm_group.order()
              << " (Aut(G), G embedded as the inner automorphisms)\n"
              << Row{"image"} << aut.inner.to_spec() << '\n';
    return 0;
  }

  auto const hol = holomorph(G, limits);
  auto const result = essentialize(hol.embed_base, limits);
  if (result.proper()) {
    std::cout << Row{"extension order"} << result.quotient.group.order()
              << " (quotient of Hol(G) of order " << hol.group.order()
              << ")\n"
              << Row{"image"} << result.psi.image().to_spec() << '\n';
  } else {
    std::cout << "not complete; G is a direct summand of Hol(G), so no "
                 "extension is constructed from it\n";
  }
  return 0;
}

int cmd_hol(std::string const &text, Limits const &limits)
{
  auto const G = evaluate(text, limits);
  auto const hol = holomorph(G, limits);
  std::cout << Row{"order"} << hol.group.order() << '\n'
            << Row{"aut"} << hol.aut.as_perm_group.order() << '\n'
            << Row{"inner"} << hol.aut.inner.order() << '\n'
            << Row{"outer"} << hol.aut.out_order << '\n'
            << Row{"summand"}
            << yes_no(normal_complement(hol.base_image).has_value()) << '\n'
            << Row{"proper essential"}
            << yes_no(has_proper_essential(hol.group)) << '\n';
  return 0;
}

int cmd_verify(std::string const &suite, SuiteOptions const &options,
               bool json)
{
  auto const report = run_suite(suite, options);
  if (json)
    std::cout << to_json(report).dump(2) << '\n';
  else
    std::cout << to_text(report);
  return report.ok() ? 0 : 1;
}

} // anonymous namespace

int main(int argc, char **argv)
{
  CLI::App app{"Essential subgroups and extensions of small finite groups"};
  app.require_subcommand(1);

  Limits limits;
  std::string spec;
  bool list = false;

  auto *info = app.add_subcommand("info", "Summary of a group");
  info->add_option("spec", spec, "group spec")->required();

  auto *essential = app.add_subcommand("essential", "Essential subgroups");
  essential->add_option("spec", spec, "group spec")->required();
  essential->add_flag("--list", list, "print every essential subgroup");

  auto *extend = app.add_subcommand("extend", "Proper essential extension");
  extend->add_option("spec", spec, "group spec")->required();

  auto *hol = app.add_subcommand("hol", "Holomorph");
  hol->add_option("spec", spec, "group spec")->required();

  SuiteOptions options;
  std::string suite;
  bool json = false;
  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "suite name")
    ->required()
    ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-order", options.max_order, "catalog order bound");
  verify->add_option("--aut-cap", options.limits.aut_cap,
                     "largest group for automorphism search");
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--slow", options.slow, "include slow cases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info)
      return cmd_info(spec, limits);
    if (*essential)
      return cmd_essential(spec, list, limits);
    if (*extend)
      return cmd_extend(spec, limits);
    if (*hol)
      return cmd_hol(spec, limits);
    return cmd_verify(suite, options, json);
  } catch (SyntaxError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    print_caret(spec, e.offset());
    return 2;
  } catch (SemanticError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    print_caret(spec, e.offset());
    return 2;
  } catch (GroupError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
