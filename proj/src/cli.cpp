#include "nilsym/cli.hpp"

#include "nilsym/report.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

namespace nilsym::cli {

namespace {

void write_json(const nlohmann::json& j, const CommonOptions& common, std::ostream& out) {
  if (common.json_path.empty()) {
    return;
  }
  const std::string text = j.dump(2) + "\n";
  if (common.json_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(common.json_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write " + common.json_path);
  }
  file << text;
}

/// Human-readable output is dropped when JSON goes to stdout.
struct HumanStream {
  explicit HumanStream(const CommonOptions& common, std::ostream& out)
      : stream(common.json_path == "-" ? discard : out) {}
  std::ostream discard{nullptr};
  std::ostream& stream;
};

const LieAlgebra& one_dimensional() {
  static const LieAlgebra a("a", 1);
  return a;
}

std::string tuple_text(const auto& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? "," : "") + std::to_string(values[i]);
  }
  return s + ")";
}

}  // namespace

std::map<std::string, Rational> parse_bindings(const std::vector<std::string>& params) {
  std::map<std::string, Rational> out;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("parameter binding must look like name=value, got '" + p + "'");
    }
    out[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
  }
  return out;
}

LoadedAlgebra load_algebra(const InputSpec& input) {
  if (input.builtin.empty() == input.path.empty()) {
    throw std::invalid_argument("give exactly one of a catalog path or --builtin");
  }
  if (!input.builtin.empty()) {
    return {builtin(input.builtin), {}};
  }
  const auto entries = load_catalog_file(input.path);
  const CatalogEntry* chosen = nullptr;
  if (input.name.empty()) {
    if (entries.size() != 1) {
      throw std::invalid_argument(input.path + " holds " + std::to_string(entries.size()) +
                                  " algebras; choose one with --name");
    }
    chosen = &entries.front();
  } else {
    for (const auto& e : entries) {
      if (e.name() == input.name) {
        chosen = &e;
        break;
      }
    }
    if (chosen == nullptr) {
      throw std::invalid_argument("no algebra named '" + input.name + "' in " + input.path);
    }
  }
  return {chosen->instantiate(parse_bindings(input.params)), chosen->claimed_forms};
}

int cmd_check(const InputSpec& input, const CommonOptions& common, std::ostream& out,
              std::ostream& err) {
  HumanStream human(common, out);
  try {
    const LoadedAlgebra loaded = load_algebra(input);
    const AlgebraReport r =
        analyze_algebra(loaded.algebra, {}, input.path, AnalysisOptions{true, false, false});
    human.stream << "algebra " << r.name << "\n";
    human.stream << "dim " << r.dim << "\n";
    if (!r.jacobi) {
      const auto& t = *r.violating_triple;
      human.stream << "jacobi no; fails for (" << t[0] << "," << t[1] << "," << t[2] << ")\n";
    } else {
      human.stream << "jacobi yes\n";
      human.stream << "ucs " << tuple_text(r.ucs)
                   << (r.nilpotent ? " nilpotent" : " not nilpotent") << "\n";
      human.stream << "betti " << tuple_text(r.betti) << "\n";
    }
    if (common.timing) {
      human.stream << "time " << r.elapsed_ms << " ms\n";
    }
    write_json(to_json(r, common.timing), common, out);
    if (!r.error.empty() && r.jacobi) {
      err << "error: " << r.error << "\n";
      return 2;
    }
    return r.jacobi ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_symplectic(const InputSpec& input, bool times_a, const CommonOptions& common,
                   std::ostream& out, std::ostream& err) {
  HumanStream human(common, out);
  try {
    const LoadedAlgebra loaded = load_algebra(input);
    const LieAlgebra target =
        times_a ? direct_product(loaded.algebra, one_dimensional()) : loaded.algebra;
    if (target.dim() % 2 != 0) {
      err << "error: " << target.name() << " has odd dimension " << target.dim()
          << "; symplectic structures need even dimension"
          << (times_a ? "" : " (use --times-a for g x a)") << "\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    const SymplecticVerdict v = symplectic_decide(target);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    human.stream << "symplectic " << target.name() << " (dim " << target.dim() << ")\n";
    const std::string witness = v.witness ? render(*v.witness, target.dual_labels()) : "";
    if (v.admits) {
      human.stream << "yes; witness " << witness << "\n";
    } else {
      human.stream << "no; Pfaffian ≡ 0 (" << v.pfaffian_nvars
                   << " closed 2-form variables, degree " << v.pfaffian_degree << ")\n";
    }
    if (common.timing) {
      human.stream << "time " << ms << " ms\n";
    }
    nlohmann::json j = {{"name", target.name()},
                        {"dim", target.dim()},
                        {"admits", v.admits},
                        {"witness", v.admits ? nlohmann::json(witness) : nlohmann::json()},
                        {"pfaffian_nvars", v.pfaffian_nvars},
                        {"pfaffian_degree", v.pfaffian_degree},
                        {"certificate", to_string(v.certificate)}};
    if (common.timing) {
      j["elapsed_ms"] = ms;
    }
    write_json(j, common, out);
    return v.admits ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_contact(const InputSpec& input, const CommonOptions& common, std::ostream& out,
                std::ostream& err) {
  HumanStream human(common, out);
  try {
    const LoadedAlgebra loaded = load_algebra(input);
    const LieAlgebra& g = loaded.algebra;
    if (g.dim() % 2 == 0) {
      err << "error: " << g.name() << " has even dimension " << g.dim()
          << "; contact structures need odd dimension\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    const ContactVerdict v = contact_decide(g);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    human.stream << "contact " << g.name() << " (dim " << g.dim() << ")\n";
    const std::string witness = v.witness ? render(*v.witness, g.dual_labels()) : "";
    if (v.admits) {
      human.stream << "yes; witness " << witness << "\n";
    } else {
      human.stream << "no; contact polynomial ≡ 0\n";
    }
    if (common.timing) {
      human.stream << "time " << ms << " ms\n";
    }
    nlohmann::json j = {{"name", g.name()},
                        {"dim", g.dim()},
                        {"admits", v.admits},
                        {"witness", v.admits ? nlohmann::json(witness) : nlohmann::json()},
                        {"polynomial_nvars", v.polynomial_nvars},
                        {"polynomial_degree", v.polynomial_degree},
                        {"certificate", to_string(v.certificate)}};
    if (common.timing) {
      j["elapsed_ms"] = ms;
    }
    write_json(j, common, out);
    return v.admits ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify_form(const InputSpec& input, const std::string& form, FormKind kind, bool times_a,
                    std::ostream& out, std::ostream& err) {
  try {
    const LoadedAlgebra loaded = load_algebra(input);
    const LieAlgebra target =
        times_a ? direct_product(loaded.algebra, one_dimensional()) : loaded.algebra;
    const Multivector f = parse_form(form, loaded.algebra.dim(), times_a);
    const FormCheck check = verify_claimed_form(target, f, kind);
    out << to_string(kind) << " " << render(f, target.dual_labels()) << " on " << target.name()
        << ": " << (check.passed ? "pass" : "fail: " + check.failure) << "\n";
    return check.passed ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_report(const ReportCommand& command, const CommonOptions& common, std::ostream& out,
               std::ostream& err) {
  HumanStream human(common, out);
  try {
    ReportOptions options;
    options.bindings = parse_bindings(command.params);
    options.threads = thread_limit_from_env();
    options.products = command.products;
    const RunReport report = report_directory(command.dir, options);
    human.stream << render_table(report, common.timing);
    write_json(to_json(report, common.timing), common, out);
    return report.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_export(const std::vector<std::string>& builtins, std::ostream& out, std::ostream& err) {
  try {
    std::vector<CatalogEntry> entries;
    for (const auto& name : builtins) {
      entries.push_back(entry_from_algebra(builtin(name)));
    }
    out << render_catalog(entries);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nilsym::cli
