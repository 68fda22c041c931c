#pragma once

#include "nilsym/mpoly.hpp"
#include "nilsym/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nilsym {

/// Sparse linear combination sum_k c_k e_k keyed by 1-based basis index.
template <class Coeff>
using BasicLieVector = std::map<int, Coeff>;
using LieVector = BasicLieVector<Rational>;

/// Brackets [e_i, e_j] for i < j.
template <class Coeff>
using BasicBracketTable = std::map<std::pair<int, int>, BasicLieVector<Coeff>>;
using BracketTable = BasicBracketTable<Rational>;

/// Finite-dimensional Lie algebra over Q given by structure constants c_ij^k.
/// Only i < j brackets are stored; antisymmetry is implied.
class LieAlgebra {
 public:
  /// Normalizes keys with i > j (flipping the sign), drops zero coefficients and
  /// validates index ranges. Empty labels default to e1..e_dim.
  LieAlgebra(std::string name, int dim, const BracketTable& brackets = {},
             std::vector<std::string> basis_labels = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  /// Labels of the dual generators: e<k> -> x<k>, f<k> -> y<k>, f -> y,
  /// anything else lowercased.
  std::vector<std::string> dual_labels() const;
  const BracketTable& brackets() const { return brackets_; }
  bool is_abelian() const { return brackets_.empty(); }

  /// [e_i, e_j] for any 1-based i, j.
  LieVector bracket(int i, int j) const;
  Rational structure_constant(int i, int j, int k) const;
  /// Bilinear extension to arbitrary coordinate vectors.
  RationalVector bracket(const RationalVector& a, const RationalVector& b) const;
  /// Matrix of ad(e_i): column j holds the coordinates of [e_i, e_j].
  RationalMatrix adjoint(int i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.brackets_ == b.brackets_;
  }

 private:
  std::string name_;
  int dim_;
  BracketTable brackets_;
  std::vector<std::string> labels_;
};

struct JacobiResult {
  bool holds = true;
  /// First (i, j, k), i < j < k, in lexicographic order where the cyclic sum is nonzero.
  std::optional<std::array<int, 3>> violating_triple;
};

JacobiResult jacobi_check(const LieAlgebra& g);
inline bool jacobi_holds(const LieAlgebra& g) { return jacobi_check(g).holds; }

/// dims of C_1 < C_2 < ... until the series stabilizes.
struct UcsProfile {
  std::vector<int> dims;
  bool nilpotent = false;

  int nilpotency_index() const { return static_cast<int>(dims.size()); }
};

UcsProfile upper_central_series(const LieAlgebra& g);

/// Block-diagonal product; h's basis indices are shifted by dim(g). The second factor's
/// basis is labeled f (dimension one) or f1..fm so that its dual generators print as y
/// or y1..ym.
LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h);

/// Transport along the basis f_a = sum_i T(i,a) e_i (columns of T are the new basis).
/// Throws std::invalid_argument when T is singular or of the wrong size.
LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& T);

/// Lie algebra law whose structure constants are polynomials in named parameters.
class ParametricLieAlgebra {
 public:
  ParametricLieAlgebra(std::string name, int dim, std::vector<std::string> params,
                       const BasicBracketTable<MPoly>& brackets,
                       std::vector<Rational> exclusions = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<Rational>& exclusions() const { return exclusions_; }
  const BasicBracketTable<MPoly>& brackets() const { return brackets_; }
  bool is_parametric() const { return !params_.empty(); }

  friend bool operator==(const ParametricLieAlgebra&, const ParametricLieAlgebra&) = default;

 private:
  std::string name_;
  int dim_;
  std::vector<std::string> params_;
  BasicBracketTable<MPoly> brackets_;
  std::vector<Rational> exclusions_;
};

/// Substitutes every parameter. Throws std::invalid_argument for an unbound parameter
/// or a value listed in the family's exclusions (or in `extra_exclusions`). Bindings for
/// names the family does not use are ignored.
LieAlgebra instantiate_params(const ParametricLieAlgebra& family,
                              const std::map<std::string, Rational>& bindings,
                              std::span<const Rational> extra_exclusions = {});

}  // namespace nilsym
