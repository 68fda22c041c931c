#pragma once

// Text catalog of Lie algebra laws, the form-expression grammar, and the built-in
// algebras.
//
//   algebra <name>
//   dim <n>
//   param lambda exclude {<rational>, ...}      optional
//   bracket [i,j] = <coef>*e<k> (+|-) ...       <coef>: p, p/q, lambda, lambda^2, (poly)
//   form symplectic "<expr>"                    optional, repeatable
//   form contact "<expr>"
//   end
//
// Form expressions: terms `[rational "*"] gen ("^" gen)*` joined by + or -, where gen is
// x<k> or y. Whitespace is insignificant; `#` starts a comment in catalog files.

#include "nilsym/detect.hpp"
#include "nilsym/exterior.hpp"
#include "nilsym/liealg.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilsym {

class ParseError : public std::runtime_error {
 public:
  /// line 0 means the error is inside a standalone expression.
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ClaimedForm {
  FormKind kind = FormKind::symplectic;
  std::string expr;

  friend bool operator==(const ClaimedForm&, const ClaimedForm&) = default;
};

struct CatalogEntry {
  ParametricLieAlgebra law;
  std::vector<ClaimedForm> claimed_forms;

  const std::string& name() const { return law.name(); }
  int dim() const { return law.dim(); }
  LieAlgebra instantiate(const std::map<std::string, Rational>& bindings = {}) const {
    return instantiate_params(law, bindings);
  }

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Throws ParseError (with 1-based line and column) on syntax errors, out-of-range
/// indices, duplicate brackets and zero denominators.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

/// Canonical text; parse_catalog(render_catalog(e)) == e.
std::string render_catalog(std::span<const CatalogEntry> entries);

CatalogEntry entry_from_algebra(const LieAlgebra& g, std::vector<ClaimedForm> forms = {});

/// `heisenberg:<2n+1>` (n >= 1), `abelian:<n>`, `g13457C`.
/// Throws std::invalid_argument for unknown names or sizes.
LieAlgebra builtin(std::string_view name);
LieAlgebra heisenberg(int dim);
LieAlgebra abelian(int dim);
LieAlgebra g13457C();

/// Form over x1..x_dim, plus y = x_{dim+1} when has_y.
Multivector parse_form(std::string_view expr, int dim, bool has_y);
/// Form over the given dual generator labels (index i+1 for labels[i]).
Multivector parse_form(std::string_view expr, std::span<const std::string> labels);

}  // namespace nilsym
