#include "nilsym/report.hpp"

#include "nilsym/cecomplex.hpp"
#include "nilsym/detect.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace nilsym {

namespace {

const LieAlgebra& one_dimensional() {
  static const LieAlgebra a("a", 1);
  return a;
}

std::string tuple_text(const auto& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out + ")";
}

bool mentions_y(const std::string& expr) {
  for (std::size_t i = 0; i < expr.size(); ++i) {
    if (expr[i] == 'y' && (i == 0 || !std::isalnum(static_cast<unsigned char>(expr[i - 1])))) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool AlgebraReport::claimed_forms_pass() const {
  return std::all_of(claimed_forms.begin(), claimed_forms.end(),
                     [](const ClaimedFormResult& c) { return c.passed; });
}

int RunReport::exit_code() const {
  const bool hard = !errors.empty() ||
                    std::any_of(algebras.begin(), algebras.end(), [](const AlgebraReport& a) {
                      return !a.jacobi || !a.error.empty();
                    });
  if (hard) {
    return 2;
  }
  const bool soft =
      std::any_of(algebras.begin(), algebras.end(),
                  [](const AlgebraReport& a) { return !a.claimed_forms_pass(); }) ||
      std::any_of(products.begin(), products.end(), [](const ProductCheck& p) { return !p.passed; });
  return soft ? 1 : 0;
}

ResolvedForm resolve_claimed_form(const LieAlgebra& g, const ClaimedForm& claimed) {
  const bool has_y = claimed.kind == FormKind::symplectic && mentions_y(claimed.expr);
  LieAlgebra target = has_y ? direct_product(g, one_dimensional()) : g;
  Multivector form = parse_form(claimed.expr, g.dim(), has_y);
  return {std::move(target), std::move(form)};
}

AlgebraReport analyze_algebra(const LieAlgebra& g, std::span<const ClaimedForm> forms,
                              std::string source, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AlgebraReport r;
  r.name = g.name();
  r.source = std::move(source);
  r.dim = g.dim();
  try {
    const JacobiResult jacobi = jacobi_check(g);
    r.jacobi = jacobi.holds;
    r.violating_triple = jacobi.violating_triple;
    if (!r.jacobi) {
      const auto& t = *jacobi.violating_triple;
      r.error = "Jacobi identity fails for (e" + std::to_string(t[0]) + ",e" +
                std::to_string(t[1]) + ",e" + std::to_string(t[2]) + ")";
    } else {
      const UcsProfile ucs = upper_central_series(g);
      r.ucs = ucs.dims;
      r.nilpotent = ucs.nilpotent;
      if (options.cohomology) {
        for (const auto& b : betti_numbers(CEComplex(g))) {
          r.betti.push_back(b.betti);
        }
      }
      if (options.symplectic) {
        const bool even = g.dim() % 2 == 0;
        const LieAlgebra target = even ? g : direct_product(g, one_dimensional());
        const SymplecticVerdict v = symplectic_decide(target);
        SymplecticSummary s;
        s.target = even ? "g" : "g x a";
        s.dim = target.dim();
        s.admits = v.admits;
        s.witness = v.witness ? render(*v.witness, target.dual_labels()) : "";
        s.pfaffian_nvars = v.pfaffian_nvars;
        s.pfaffian_degree = v.pfaffian_degree;
        s.certificate = to_string(v.certificate);
        r.symplectic = std::move(s);
      }
      if (options.contact && g.dim() % 2 == 1) {
        const ContactVerdict v = contact_decide(g);
        ContactSummary s;
        s.admits = v.admits;
        s.witness = v.witness ? render(*v.witness, g.dual_labels()) : "";
        s.polynomial_nvars = v.polynomial_nvars;
        s.polynomial_degree = v.polynomial_degree;
        s.certificate = to_string(v.certificate);
        r.contact = std::move(s);
      }
      for (const auto& claimed : forms) {
        ClaimedFormResult c;
        c.kind = to_string(claimed.kind);
        c.expr = claimed.expr;
        try {
          const ResolvedForm resolved = resolve_claimed_form(g, claimed);
          c.target = resolved.target.dim() == g.dim() ? "g" : "g x a";
          const FormCheck check = verify_claimed_form(resolved.target, resolved.form, claimed.kind);
          c.passed = check.passed;
          c.failure = check.failure;
        } catch (const std::exception& e) {
          c.failure = e.what();
        }
        r.claimed_forms.push_back(std::move(c));
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const AlgebraReport& r, bool include_timing) {
  nlohmann::json j;
  j["name"] = r.name;
  j["source"] = r.source;
  j["dim"] = r.dim;
  j["jacobi"] = r.jacobi;
  if (r.violating_triple) {
    j["violating_triple"] = *r.violating_triple;
  }
  j["ucs"] = r.ucs;
  j["nilpotent"] = r.nilpotent;
  j["betti"] = r.betti;
  if (r.symplectic) {
    const auto& s = *r.symplectic;
    j["symplectic"] = {{"target", s.target},
                       {"dim", s.dim},
                       {"admits", s.admits},
                       {"witness", s.admits ? nlohmann::json(s.witness) : nlohmann::json()},
                       {"pfaffian_nvars", s.pfaffian_nvars},
                       {"pfaffian_degree", s.pfaffian_degree},
                       {"certificate", s.certificate}};
  }
  if (r.contact) {
    const auto& c = *r.contact;
    j["contact"] = {{"admits", c.admits},
                    {"witness", c.admits ? nlohmann::json(c.witness) : nlohmann::json()},
                    {"polynomial_nvars", c.polynomial_nvars},
                    {"polynomial_degree", c.polynomial_degree},
                    {"certificate", c.certificate}};
  }
  nlohmann::json forms = nlohmann::json::array();
  for (const auto& c : r.claimed_forms) {
    forms.push_back({{"kind", c.kind},
                     {"expr", c.expr},
                     {"target", c.target},
                     {"passed", c.passed},
                     {"failure", c.failure}});
  }
  j["claimed_forms"] = std::move(forms);
  if (!r.error.empty()) {
    j["error"] = r.error;
  }
  if (include_timing) {
    j["elapsed_ms"] = r.elapsed_ms;
  }
  return j;
}

nlohmann::json to_json(const RunReport& r, bool include_timing) {
  nlohmann::json j;
  j["algebras"] = nlohmann::json::array();
  for (const auto& a : r.algebras) {
    j["algebras"].push_back(to_json(a, include_timing));
  }
  j["errors"] = nlohmann::json::array();
  for (const auto& e : r.errors) {
    j["errors"].push_back({{"source", e.source}, {"message", e.message}});
  }
  if (r.products_requested) {
    j["products"] = nlohmann::json::array();
    for (const auto& p : r.products) {
      j["products"].push_back({{"first", p.first},
                               {"second", p.second},
                               {"form", p.form},
                               {"passed", p.passed},
                               {"failure", p.failure}});
    }
  }
  j["exit_code"] = r.exit_code();
  return j;
}

std::string render_table(const RunReport& r, bool include_timing) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"name", "dim", "jacobi", "ucs", "betti", "symplectic", "contact", "forms"});
  if (include_timing) {
    rows.front().push_back("ms");
  }
  for (const auto& a : r.algebras) {
    std::vector<std::string> row{a.name, std::to_string(a.dim), a.jacobi ? "yes" : "NO",
                                 a.jacobi ? tuple_text(a.ucs) + (a.nilpotent ? "" : "*") : "-",
                                 a.betti.empty() ? "-" : tuple_text(a.betti)};
    row.push_back(a.symplectic ? a.symplectic->target + ": " + (a.symplectic->admits ? "yes" : "no")
                               : "-");
    row.push_back(a.contact ? (a.contact->admits ? "yes" : "no") : "-");
    const auto passed = std::count_if(a.claimed_forms.begin(), a.claimed_forms.end(),
                                      [](const ClaimedFormResult& c) { return c.passed; });
    row.push_back(a.claimed_forms.empty()
                      ? "-"
                      : std::to_string(passed) + "/" + std::to_string(a.claimed_forms.size()));
    if (include_timing) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << a.elapsed_ms;
      row.push_back(ms.str());
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line += std::string(widths[c] - row[c].size() + 2, ' ');
      }
    }
    out += line + "\n";
  }
  for (const auto& a : r.algebras) {
    if (!a.error.empty()) {
      out += a.name + ": " + a.error + "\n";
    }
    for (const auto& c : a.claimed_forms) {
      if (!c.passed) {
        out += a.name + ": claimed " + c.kind + " form \"" + c.expr + "\" fails: " + c.failure + "\n";
      }
    }
  }
  for (const auto& p : r.products) {
    out += "product " + p.first + " x " + p.second + ": " +
           (p.passed ? p.form : "fails: " + p.failure) + "\n";
  }
  for (const auto& e : r.errors) {
    out += e.source + ": " + e.message + "\n";
  }
  return out;
}

std::vector<ProductCheck> product_checks(
    std::span<const std::pair<LieAlgebra, std::vector<ClaimedForm>>> algebras) {
  struct Candidate {
    const LieAlgebra* algebra;
    Multivector witness;
  };
  std::vector<Candidate> candidates;
  for (const auto& [g, forms] : algebras) {
    if (g.dim() % 2 == 0 || !jacobi_holds(g)) {
      continue;
    }
    for (const auto& claimed : forms) {
      if (claimed.kind != FormKind::symplectic || !mentions_y(claimed.expr)) {
        continue;
      }
      try {
        ResolvedForm resolved = resolve_claimed_form(g, claimed);
        if (pairing_shape(resolved.form, g.dim()) &&
            verify_claimed_form(resolved.target, resolved.form, FormKind::symplectic).passed) {
          candidates.push_back({&g, std::move(resolved.form)});
          break;
        }
      } catch (const std::exception&) {
      }
    }
  }
  std::vector<ProductCheck> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i; j < candidates.size(); ++j) {
      const auto& a = candidates[i];
      const auto& b = candidates[j];
      ProductCheck p;
      p.first = a.algebra->name();
      p.second = b.algebra->name();
      try {
        const Multivector omega =
            product_symplectic_witness(a.witness, b.witness, *a.algebra, *b.algebra);
        p.form = render(omega, direct_product(*a.algebra, *b.algebra).dual_labels());
        p.passed = true;
      } catch (const std::exception& e) {
        p.failure = e.what();
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

RunReport report_directory(const std::filesystem::path& dir, const ReportOptions& options) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::invalid_argument(dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cat") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  RunReport report;
  struct Job {
    LieAlgebra algebra;
    std::vector<ClaimedForm> forms;
    std::string source;
  };
  std::vector<Job> jobs;
  for (const auto& path : files) {
    const std::string source = path.filename().string();
    std::vector<CatalogEntry> entries;
    try {
      entries = load_catalog_file(path.string());
    } catch (const std::exception& e) {
      report.errors.push_back({source, e.what()});
      continue;
    }
    for (const auto& entry : entries) {
      try {
        jobs.push_back({entry.instantiate(options.bindings), entry.claimed_forms, source});
      } catch (const std::exception& e) {
        report.errors.push_back({source, entry.name() + ": " + e.what()});
      }
    }
  }

  report.algebras.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      report.algebras[i] = analyze_algebra(jobs[i].algebra, jobs[i].forms, jobs[i].source);
    }
  };
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }

  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  auto key = [&](std::size_t i) {
    const auto& a = report.algebras[i];
    return std::tie(a.dim, a.name, a.source);
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<AlgebraReport> sorted;
  std::vector<std::pair<LieAlgebra, std::vector<ClaimedForm>>> sorted_algebras;
  for (std::size_t i : order) {
    sorted.push_back(std::move(report.algebras[i]));
    sorted_algebras.emplace_back(jobs[i].algebra, jobs[i].forms);
  }
  report.algebras = std::move(sorted);
  if (options.products) {
    report.products_requested = true;
    report.products = product_checks(sorted_algebras);
  }
  return report;
}

unsigned thread_limit_from_env() {
  const char* value = std::getenv("NILSYM_THREADS");
  if (value == nullptr || *value == '\0') {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  const std::string text(value);
  if (text.size() > 6 || text.find_first_not_of("0123456789") != std::string::npos ||
      std::stoi(text) < 1) {
    throw std::invalid_argument("NILSYM_THREADS must be a positive integer, got '" + text + "'");
  }
  return static_cast<unsigned>(std::stoi(text));
}

}  // namespace nilsym
