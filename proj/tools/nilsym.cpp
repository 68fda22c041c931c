#include "nilsym/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_input(CLI::App* cmd, nilsym::cli::InputSpec& input) {
  cmd->add_option("path", input.path, "Catalog file");
  cmd->add_option("--builtin", input.builtin, "heisenberg:<n>, abelian:<n> or g13457C");
  cmd->add_option("--name", input.name, "Entry name inside the catalog");
  cmd->add_option("--param", input.params, "Parameter binding, e.g. lambda=1/2");
}

void add_common(CLI::App* cmd, nilsym::cli::CommonOptions& common) {
  cmd->add_option("--json", common.json_path, "Write JSON to this file ('-' for stdout)");
  cmd->add_flag("--timing", common.timing, "Report timings (also in JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nilsym::cli;
  CLI::App app{"Exact symplectic and contact structure detection for Lie algebras"};
  app.require_subcommand(1);

  InputSpec check_in, sympl_in, contact_in, verify_in;
  CommonOptions check_common, sympl_common, contact_common, report_common;
  bool sympl_times_a = false;
  bool verify_times_a = false;
  std::string verify_form;
  std::string verify_kind = "symplectic";
  ReportCommand report;
  std::vector<std::string> export_names;

  auto* check = app.add_subcommand("check", "Jacobi identity, upper central series, Betti numbers");
  add_input(check, check_in);
  add_common(check, check_common);

  auto* sympl = app.add_subcommand("symplectic", "Decide whether g (or g x a) is symplectic");
  add_input(sympl, sympl_in);
  add_common(sympl, sympl_common);
  sympl->add_flag("--times-a", sympl_times_a, "Adjoin a one-dimensional abelian factor");

  auto* contact = app.add_subcommand("contact", "Decide whether g admits a contact form");
  add_input(contact, contact_in);
  add_common(contact, contact_common);

  auto* verify = app.add_subcommand("verify-form", "Check a claimed symplectic or contact form");
  add_input(verify, verify_in);
  verify->add_option("--form", verify_form, "Form expression, e.g. \"x1^x2 + x3^y\"")->required();
  verify->add_option("--kind", verify_kind, "symplectic or contact")
      ->check(CLI::IsMember({"symplectic", "contact"}));
  verify->add_flag("--times-a", verify_times_a, "Check on g x a (y is the extra generator)");

  auto* rep = app.add_subcommand("report", "Analyze every .cat file in a directory");
  rep->add_option("dir", report.dir, "Catalog directory")->required();
  rep->add_option("--param", report.params, "Parameter binding for families");
  rep->add_flag("--products", report.products, "Also build product witnesses for pairs");
  add_common(rep, report_common);

  auto* exp = app.add_subcommand("export", "Print builtins in catalog format");
  exp->add_option("builtins", export_names, "Builtin names")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*check) {
    return cmd_check(check_in, check_common, std::cout, std::cerr);
  }
  if (*sympl) {
    return cmd_symplectic(sympl_in, sympl_times_a, sympl_common, std::cout, std::cerr);
  }
  if (*contact) {
    return cmd_contact(contact_in, contact_common, std::cout, std::cerr);
  }
  if (*verify) {
    const auto kind =
        verify_kind == "contact" ? nilsym::FormKind::contact : nilsym::FormKind::symplectic;
    return cmd_verify_form(verify_in, verify_form, kind, verify_times_a, std::cout, std::cerr);
  }
  if (*rep) {
    return cmd_report(report, report_common, std::cout, std::cerr);
  }
  return cmd_export(export_names, std::cout, std::cerr);
}
