#pragma once

// Per-algebra analysis records and their deterministic JSON / table renderings.

#include "nilsym/catalog.hpp"
#include "nilsym/liealg.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nilsym {

struct SymplecticSummary {
  std::string target;  // "g" or "g x a"
  int dim = 0;
  bool admits = false;
  std::string witness;  // canonical text, empty when !admits
  int pfaffian_nvars = 0;
  int pfaffian_degree = 0;
  std::string certificate;
};

struct ContactSummary {
  bool admits = false;
  std::string witness;
  int polynomial_nvars = 0;
  int polynomial_degree = 0;
  std::string certificate;
};

struct ClaimedFormResult {
  std::string kind;
  std::string expr;
  std::string target;
  bool passed = false;
  std::string failure;
};

struct AlgebraReport {
  std::string name;
  std::string source;
  int dim = 0;
  bool jacobi = false;
  std::optional<std::array<int, 3>> violating_triple;
  std::vector<int> ucs;
  bool nilpotent = false;
  std::vector<long> betti;
  std::optional<SymplecticSummary> symplectic;
  std::optional<ContactSummary> contact;
  std::vector<ClaimedFormResult> claimed_forms;
  std::string error;
  double elapsed_ms = 0.0;

  bool claimed_forms_pass() const;
};

struct ProductCheck {
  std::string first;
  std::string second;
  std::string form;
  bool passed = false;
  std::string failure;
};

struct FileError {
  std::string source;
  std::string message;
};

struct RunReport {
  std::vector<AlgebraReport> algebras;
  std::vector<FileError> errors;
  std::vector<ProductCheck> products;
  bool products_requested = false;

  /// 2 on any file error, Jacobi failure or analysis error; 1 if a claimed form or
  /// product check fails; 0 otherwise.
  int exit_code() const;
};

struct AnalysisOptions {
  bool cohomology = true;
  bool symplectic = true;
  bool contact = true;
};

/// Jacobi, upper central series, Betti numbers, the symplectic verdict for g (even
/// dimension) or g x a (odd), the contact verdict (odd) and every claimed form.
/// Symplectic forms with a `y` are checked on g x a, others on g.
AlgebraReport analyze_algebra(const LieAlgebra& g, std::span<const ClaimedForm> forms = {},
                              std::string source = {}, const AnalysisOptions& options = {});

/// Parses a claimed form against its target (g, or g x a when it mentions y).
struct ResolvedForm {
  LieAlgebra target;
  Multivector form;
};
ResolvedForm resolve_claimed_form(const LieAlgebra& g, const ClaimedForm& claimed);

/// Stable rendering: object keys sorted, rationals as "p/q" strings inside form text.
/// Timing is only included on request.
nlohmann::json to_json(const AlgebraReport& r, bool include_timing = false);
nlohmann::json to_json(const RunReport& r, bool include_timing = false);
std::string render_table(const RunReport& r, bool include_timing = false);

struct ReportOptions {
  std::map<std::string, Rational> bindings;
  unsigned threads = 1;
  bool products = false;
};

/// Every *.cat file directly inside `dir`; rows ordered by (dim, name, source).
RunReport report_directory(const std::filesystem::path& dir, const ReportOptions& options);

/// Product witnesses for every pair of odd-dimensional rows with a passing claimed
/// symplectic form of the shape sum x_i x_j + x_l y.
std::vector<ProductCheck> product_checks(
    std::span<const std::pair<LieAlgebra, std::vector<ClaimedForm>>> algebras);

/// NILSYM_THREADS if set (must be a positive integer), else hardware concurrency.
unsigned thread_limit_from_env();

}  // namespace nilsym
