#pragma once

#include "nilsym/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace nilsym {

/// Sparse multivariate polynomial over the rationals in variables t1..t_nvars.
class MPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Terms = std::map<Exponents, Rational>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  /// The variable t_{index+1}; index is 0-based.
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Largest exponent of one variable; -1 for zero.
  int degree_in(std::size_t var) const;

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;
  /// Value at exponent vector all zero.
  Rational constant_term() const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Fixes one variable; the result keeps nvars with that exponent zeroed.
  MPoly substitute(std::size_t var, const Rational& value) const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rational& s);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  /// e.g. `t1*t6 - t2*t5 + t3*t4`, terms in descending lexicographic order.
  std::string to_string(std::string_view var_prefix = "t") const;

 private:
  void check_nvars(const MPoly& other) const;

  std::size_t nvars_;
  Terms terms_;
};

inline bool coeff_is_zero(const MPoly& p) { return p.is_zero(); }

inline bool is_identically_zero(const MPoly& p) { return p.is_zero(); }

/// Lexicographically least point of the grid {0..d}^nvars (d = total degree) where p
/// does not vanish. Variables are fixed one at a time; a fixed prefix is extended only
/// while the restricted polynomial stays nonzero, which a nonzero polynomial of
/// per-variable degree <= d always permits on d+1 grid values.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<Rational> find_nonvanishing_point(const MPoly& p);

}  // namespace nilsym
