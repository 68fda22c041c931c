#include "nilsym/catalog.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace nilsym {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + message
                                  : "column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

/// Character cursor over one line (or one expression).
class Cursor {
 public:
  Cursor(std::string_view text, int line, int column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }
  std::size_t pos() const { return pos_; }
  int column() const { return static_cast<int>(pos_) + 1 + offset_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column(), message);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, static_cast<int>(pos) + 1 + offset_, message);
  }

  std::string_view digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    const std::size_t start = (skip_ws(), pos_);
    const auto d = digits();
    if (d.empty()) {
      fail("expected an integer");
    }
    if (d.size() > 9) {
      fail_at(start, "integer too large");
    }
    return std::stoi(std::string(d));
  }

  /// p or p/q, unsigned.
  Rational unsigned_rational() {
    const std::size_t start = (skip_ws(), pos_);
    const auto num = digits();
    if (num.empty()) {
      fail("expected a number");
    }
    std::string text(num);
    if (peek_raw() == '/') {
      ++pos_;
      const auto den = digits();
      if (den.empty()) {
        fail("expected a denominator");
      }
      text += "/" + std::string(den);
    }
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      fail_at(start, e.what());
    }
  }

  /// [A-Za-z_][A-Za-z_]* followed by optional digits.
  std::string_view identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::string_view rest() {
    skip_ws();
    return text_.substr(pos_);
  }

 private:
  std::string_view text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- forms

using GeneratorResolver = std::function<int(std::string_view, Cursor&, std::size_t)>;

Multivector parse_form_with(std::string_view expr, int ambient, const GeneratorResolver& resolve) {
  Cursor cur(expr, 0);
  Multivector out(ambient);
  if (cur.at_end()) {
    cur.fail("empty form expression");
  }
  bool first = true;
  while (!cur.at_end()) {
    bool negative = false;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      negative = true;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    bool has_generators = true;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.unsigned_rational();
      has_generators = cur.accept('*');
    }
    int sign = 1;
    Monomial mono;
    if (has_generators) {
      do {
        const std::size_t start = (cur.skip_ws(), cur.pos());
        const auto token = cur.identifier();
        if (token.empty()) {
          cur.fail("expected a generator");
        }
        const Monomial g = Monomial::generator(resolve(token, cur, start));
        sign *= wedge_sign(mono, g);
        mono = mono.united(g);
      } while (cur.accept('^'));
    }
    if (sign != 0) {
      out.add_term(mono, (negative != (sign < 0)) ? Rational(-coeff) : coeff);
    }
  }
  return out;
}

// ---------------------------------------------------------------- catalog

struct PendingEntry {
  std::string name;
  int line = 0;
  int dim = 0;
  std::vector<std::string> params;
  std::vector<Rational> exclusions;
  BasicBracketTable<MPoly> brackets;
  std::set<std::pair<int, int>> seen;
  std::vector<ClaimedForm> forms;
};

/// Polynomial in the (at most one) declared parameter.
class CoefficientParser {
 public:
  CoefficientParser(Cursor& cur, const std::vector<std::string>& params)
      : cur_(cur), params_(params) {}

  MPoly factor() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.expect('(');
      MPoly p = poly();
      cur_.expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MPoly::constant(params_.size(), cur_.unsigned_rational());
    }
    const std::size_t start = cur_.pos();
    const auto name = cur_.identifier();
    if (name.empty()) {
      cur_.fail("expected a coefficient");
    }
    if (params_.empty() || name != params_.front()) {
      cur_.fail_at(start, "unknown parameter '" + std::string(name) + "'");
    }
    MPoly v = MPoly::variable(params_.size(), 0);
    if (cur_.accept('^')) {
      const int k = cur_.integer();
      MPoly p = MPoly::constant(params_.size(), Rational(1));
      for (int i = 0; i < k; ++i) {
        p = p * v;
      }
      return p;
    }
    return v;
  }

  MPoly poly() {
    MPoly out(params_.size());
    bool first = true;
    while (true) {
      bool negative = false;
      if (cur_.accept('-')) {
        negative = true;
      } else if (!cur_.accept('+') && !first) {
        break;
      }
      first = false;
      MPoly term = factor();
      while (cur_.accept('*')) {
        term = term * factor();
      }
      out += negative ? -term : term;
    }
    return out;
  }

 private:
  Cursor& cur_;
  const std::vector<std::string>& params_;
};

bool generator_ahead(Cursor& cur) {
  return cur.peek() == 'e' && std::isdigit(static_cast<unsigned char>(cur.peek_raw(1)));
}

BasicLieVector<MPoly> parse_bracket_rhs(Cursor& cur, const PendingEntry& entry) {
  BasicLieVector<MPoly> out;
  CoefficientParser coeffs(cur, entry.params);
  bool first = true;
  while (!cur.at_end()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    MPoly coeff = MPoly::constant(entry.params.size(), Rational(1));
    while (!generator_ahead(cur)) {
      coeff = coeff * coeffs.factor();
      cur.expect('*');
    }
    cur.expect('e');
    const std::size_t start = cur.pos();
    const int k = cur.integer();
    if (k < 1 || k > entry.dim) {
      cur.fail_at(start, "basis index e" + std::to_string(k) + " out of range 1.." +
                             std::to_string(entry.dim));
    }
    if (negative) {
      coeff = -coeff;
    }
    auto it = out.find(k);
    if (it == out.end()) {
      out.emplace(k, std::move(coeff));
    } else {
      it->second += coeff;
    }
  }
  if (first) {
    cur.fail("empty bracket value");
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') {
      quoted = !quoted;
    } else if (line[i] == '#' && !quoted) {
      return std::string(line.substr(0, i));
    }
  }
  return std::string(line);
}

CatalogEntry finish(PendingEntry& p) {
  return CatalogEntry{
      ParametricLieAlgebra(p.name, p.dim, p.params, p.brackets, p.exclusions), p.forms};
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::optional<PendingEntry> entry;
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  int line_no = 0;
  for (const auto line : lines) {
    ++line_no;
    std::string raw = strip_comment(line);
    if (!raw.empty() && raw.back() == '\r') {
      raw.pop_back();
    }
    Cursor cur(raw, line_no);
    if (cur.at_end()) {
      continue;
    }
    const std::size_t kw_pos = cur.pos();
    const std::string keyword(cur.identifier());
    if (keyword.empty()) {
      cur.fail("expected a keyword");
    }
    if (keyword == "algebra") {
      if (entry) {
        cur.fail_at(kw_pos, "'algebra' before 'end' of " + entry->name);
      }
      std::string name(cur.rest());
      name.erase(name.find_last_not_of(" \t") + 1);
      if (name.empty() || name.find_first_of(" \t") != std::string::npos) {
        cur.fail("algebra name must be a single non-empty token");
      }
      entry.emplace();
      entry->name = name;
      entry->line = line_no;
      continue;
    }
    if (!entry) {
      cur.fail_at(kw_pos, "'" + keyword + "' outside an algebra block");
    }
    if (keyword == "dim") {
      if (entry->dim != 0) {
        cur.fail_at(kw_pos, "duplicate 'dim'");
      }
      const std::size_t p = (cur.skip_ws(), cur.pos());
      const int d = cur.integer();
      if (d < 1 || d > kMaxAmbientDim - 1) {
        cur.fail_at(p, "dimension must lie in 1.." + std::to_string(kMaxAmbientDim - 1));
      }
      entry->dim = d;
    } else if (entry->dim == 0) {
      cur.fail_at(kw_pos, "'dim' must precede '" + keyword + "'");
    } else if (keyword == "param") {
      if (!entry->params.empty()) {
        cur.fail_at(kw_pos, "only one parameter is supported");
      }
      if (!entry->brackets.empty()) {
        cur.fail_at(kw_pos, "'param' must precede the brackets");
      }
      const auto name = cur.identifier();
      if (name.empty() || std::isdigit(static_cast<unsigned char>(name.back()))) {
        cur.fail("expected a parameter name");
      }
      entry->params.emplace_back(name);
      if (!cur.at_end()) {
        const std::size_t p = cur.pos();
        if (cur.identifier() != "exclude") {
          cur.fail_at(p, "expected 'exclude'");
        }
        cur.expect('{');
        if (!cur.accept('}')) {
          do {
            const bool negative = cur.accept('-');
            const Rational q = cur.unsigned_rational();
            entry->exclusions.push_back(negative ? Rational(-q) : q);
          } while (cur.accept(','));
          cur.expect('}');
        }
      }
    } else if (keyword == "bracket") {
      cur.accept(':');
      cur.expect('[');
      const std::size_t pi = (cur.skip_ws(), cur.pos());
      const int i = cur.integer();
      cur.expect(',');
      const std::size_t pj = (cur.skip_ws(), cur.pos());
      const int j = cur.integer();
      cur.expect(']');
      for (auto [v, p] : {std::pair{i, pi}, std::pair{j, pj}}) {
        if (v < 1 || v > entry->dim) {
          cur.fail_at(p, "bracket index " + std::to_string(v) + " out of range 1.." +
                             std::to_string(entry->dim));
        }
      }
      if (i == j) {
        cur.fail_at(pi, "bracket of a basis element with itself");
      }
      const std::pair key{std::min(i, j), std::max(i, j)};
      if (!entry->seen.insert(key).second) {
        cur.fail_at(kw_pos, "duplicate bracket [" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + "]");
      }
      cur.expect('=');
      auto value = parse_bracket_rhs(cur, *entry);
      if (i > j) {
        for (auto& [k, c] : value) {
          c = -c;
        }
      }
      if (!value.empty()) {
        entry->brackets.emplace(key, std::move(value));
      }
    } else if (keyword == "form") {
      const std::size_t p = (cur.skip_ws(), cur.pos());
      const auto kind = cur.identifier();
      ClaimedForm form;
      if (kind == "symplectic") {
        form.kind = FormKind::symplectic;
      } else if (kind == "contact") {
        form.kind = FormKind::contact;
      } else {
        cur.fail_at(p, "form kind must be 'symplectic' or 'contact'");
      }
      cur.expect('"');
      const std::string_view rest = cur.rest();
      const auto close = rest.find('"');
      if (close == std::string_view::npos) {
        cur.fail("unterminated form string");
      }
      form.expr = std::string(rest.substr(0, close));
      if (rest.find_first_not_of(" \t", close + 1) != std::string_view::npos) {
        cur.fail_at(cur.pos() + close + 1, "unexpected text after form string");
      }
      entry->forms.push_back(std::move(form));
      continue;
    } else if (keyword == "end") {
      out.push_back(finish(*entry));
      entry.reset();
    } else {
      cur.fail_at(kw_pos, "unknown keyword '" + keyword + "'");
    }
    if (!cur.at_end()) {
      cur.fail("unexpected trailing text");
    }
  }
  if (entry) {
    throw ParseError(entry->line, 1, "missing 'end' for algebra " + entry->name);
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

namespace {

std::string render_param_poly(const MPoly& p, const std::string& name) {
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    const unsigned power = e.empty() ? 0 : e.front();
    std::string mono = power == 0 ? "" : power == 1 ? name : name + "^" + std::to_string(power);
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + "*" + mono;
    }
  }
  return out;
}

std::string render_rhs(const BasicLieVector<MPoly>& value, const std::vector<std::string>& params) {
  const std::string name = params.empty() ? "" : params.front();
  std::string out;
  bool first = true;
  for (const auto& [k, c] : value) {
    const std::string gen = "e" + std::to_string(k);
    if (c.size() == 1) {
      const auto& [e, q] = *c.terms().begin();
      MPoly magnitude = q < 0 ? -c : c;
      out += first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
      const std::string coeff = render_param_poly(magnitude, name);
      out += coeff == "1" ? gen : coeff + "*" + gen;
    } else {
      out += first ? "" : " + ";
      out += "(" + render_param_poly(c, name) + ")*" + gen;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string render_catalog(std::span<const CatalogEntry> entries) {
  std::string out;
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const auto& e = entries[n];
    if (n > 0) {
      out += "\n";
    }
    out += "algebra " + e.name() + "\n";
    out += "dim " + std::to_string(e.dim()) + "\n";
    if (e.law.is_parametric()) {
      out += "param " + e.law.params().front();
      if (!e.law.exclusions().empty()) {
        out += " exclude {";
        for (std::size_t i = 0; i < e.law.exclusions().size(); ++i) {
          out += (i ? ", " : "") + to_string(e.law.exclusions()[i]);
        }
        out += "}";
      }
      out += "\n";
    }
    for (const auto& [key, value] : e.law.brackets()) {
      out += "bracket [" + std::to_string(key.first) + "," + std::to_string(key.second) +
             "] = " + render_rhs(value, e.law.params()) + "\n";
    }
    for (const auto& f : e.claimed_forms) {
      out += "form " + to_string(f.kind) + " \"" + f.expr + "\"\n";
    }
    out += "end\n";
  }
  return out;
}

CatalogEntry entry_from_algebra(const LieAlgebra& g, std::vector<ClaimedForm> forms) {
  BasicBracketTable<MPoly> table;
  for (const auto& [key, value] : g.brackets()) {
    auto& target = table[key];
    for (const auto& [k, c] : value) {
      target.emplace(k, MPoly::constant(0, c));
    }
  }
  return CatalogEntry{ParametricLieAlgebra(g.name(), g.dim(), {}, table), std::move(forms)};
}

LieAlgebra heisenberg(int dim) {
  if (dim < 3 || dim % 2 == 0 || dim > kMaxAmbientDim - 1) {
    throw std::invalid_argument("heisenberg dimension must be odd and at least 3");
  }
  BracketTable table;
  for (int i = 1; 2 * i + 1 <= dim; ++i) {
    table[{2 * i, 2 * i + 1}] = {{1, Rational(1)}};
  }
  return LieAlgebra("heisenberg:" + std::to_string(dim), dim, table);
}

LieAlgebra abelian(int dim) {
  if (dim < 1 || dim > kMaxAmbientDim - 1) {
    throw std::invalid_argument("abelian dimension out of range");
  }
  return LieAlgebra("abelian:" + std::to_string(dim), dim);
}

LieAlgebra g13457C() {
  // Inverts dx7 = x1x6 + x2x5 - x3x4, dx5 = x1x4, dx4 = x1x3, dx3 = x1x2 through
  // dx_k = -sum c_ij^k x_i x_j up to one global sign; the brackets are taken positive.
  BracketTable table;
  table[{1, 2}] = {{3, Rational(1)}};
  table[{1, 3}] = {{4, Rational(1)}};
  table[{1, 4}] = {{5, Rational(1)}};
  table[{1, 6}] = {{7, Rational(1)}};
  table[{2, 5}] = {{7, Rational(1)}};
  table[{3, 4}] = {{7, Rational(-1)}};
  return LieAlgebra("g13457C", 7, table);
}

LieAlgebra builtin(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view base = name.substr(0, colon);
  if (colon == std::string_view::npos) {
    if (base == "g13457C") {
      return g13457C();
    }
    throw std::invalid_argument("unknown builtin '" + std::string(name) +
                                "' (expected heisenberg:<n>, abelian:<n> or g13457C)");
  }
  const std::string size_text(name.substr(colon + 1));
  if (size_text.empty() || size_text.size() > 3 ||
      size_text.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad size in builtin '" + std::string(name) + "'");
  }
  const int size = std::stoi(size_text);
  if (base == "heisenberg") {
    return heisenberg(size);
  }
  if (base == "abelian") {
    return abelian(size);
  }
  throw std::invalid_argument("unknown builtin '" + std::string(name) + "'");
}

Multivector parse_form(std::string_view expr, int dim, bool has_y) {
  const int ambient = dim + (has_y ? 1 : 0);
  return parse_form_with(expr, ambient, [&](std::string_view tok, Cursor& cur, std::size_t at) {
    if (tok == "y") {
      if (!has_y) {
        cur.fail_at(at, "y used without a one-dimensional factor");
      }
      return dim + 1;
    }
    if (tok.size() > 1 && tok[0] == 'x' &&
        tok.substr(1).find_first_not_of("0123456789") == std::string_view::npos) {
      const std::string digits(tok.substr(1));
      const int k = digits.size() > 3 ? 1000 : std::stoi(digits);
      if (k < 1 || k > dim) {
        cur.fail_at(at, "generator " + std::string(tok) + " out of range for dimension " +
                            std::to_string(dim));
      }
      return k;
    }
    cur.fail_at(at, "unknown generator '" + std::string(tok) + "'");
  });
}

Multivector parse_form(std::string_view expr, std::span<const std::string> labels) {
  return parse_form_with(expr, static_cast<int>(labels.size()),
                         [&](std::string_view tok, Cursor& cur, std::size_t at) {
                           for (std::size_t i = 0; i < labels.size(); ++i) {
                             if (labels[i] == tok) {
                               return static_cast<int>(i) + 1;
                             }
                           }
                           cur.fail_at(at, "unknown generator '" + std::string(tok) + "'");
                         });
}

}  // namespace nilsym
