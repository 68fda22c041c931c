#pragma once

// Command implementations behind the nilsym executable. Each returns the process
// exit code and writes human output to `out`, diagnostics to `err`.

#include "nilsym/catalog.hpp"
#include "nilsym/detect.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace nilsym::cli {

/// Selects one algebra: either a builtin or an entry of a catalog file.
struct InputSpec {
  std::string path;
  std::string builtin;
  std::string name;                            // entry name inside `path`
  std::vector<std::string> params;             // "lambda=1/2"
};

struct LoadedAlgebra {
  LieAlgebra algebra;
  std::vector<ClaimedForm> claimed_forms;
};

/// Throws on unknown names, parse errors and bad bindings.
LoadedAlgebra load_algebra(const InputSpec& input);
std::map<std::string, Rational> parse_bindings(const std::vector<std::string>& params);

struct CommonOptions {
  std::string json_path;  // "-" for stdout
  bool timing = false;
};

int cmd_check(const InputSpec& input, const CommonOptions& common, std::ostream& out,
              std::ostream& err);

int cmd_symplectic(const InputSpec& input, bool times_a, const CommonOptions& common,
                   std::ostream& out, std::ostream& err);

int cmd_contact(const InputSpec& input, const CommonOptions& common, std::ostream& out,
                std::ostream& err);

int cmd_verify_form(const InputSpec& input, const std::string& form, FormKind kind, bool times_a,
                    std::ostream& out, std::ostream& err);

struct ReportCommand {
  std::string dir;
  std::vector<std::string> params;
  bool products = false;
};

int cmd_report(const ReportCommand& command, const CommonOptions& common, std::ostream& out,
               std::ostream& err);

/// Prints the catalog text of builtins, one entry per name.
int cmd_export(const std::vector<std::string>& builtins, std::ostream& out, std::ostream& err);

}  // namespace nilsym::cli
