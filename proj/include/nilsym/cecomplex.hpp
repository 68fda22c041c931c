#pragma once

#include "nilsym/exterior.hpp"
#include "nilsym/liealg.hpp"

#include <vector>

namespace nilsym {

/// Chevalley-Eilenberg complex (Lambda g*, d) with dx_k = -sum_{i<j} c_ij^k x_i x_j,
/// extended to all degrees as a graded derivation.
class CEComplex {
 public:
  explicit CEComplex(LieAlgebra g);

  const LieAlgebra& algebra() const { return algebra_; }
  int dim() const { return algebra_.dim(); }
  /// Entry k-1 is dx_k.
  const std::vector<Multivector>& generator_differentials() const { return generator_d_; }

  /// d on a monomial x_{i_1}..x_{i_p} is sum_t (-1)^(t-1) x_{i_1}..dx_{i_t}..x_{i_p}.
  /// Coeff must be multipliable by Rational.
  template <class Coeff>
  BasicMultivector<Coeff> differential(const BasicMultivector<Coeff>& f) const;

  /// Matrix of d : Lambda^p -> Lambda^(p+1) in the lexicographic monomial bases.
  RationalMatrix differential_matrix(int degree) const;

  /// d(dx_k) = 0 for every generator.
  bool d_squared_is_zero() const;

 private:
  LieAlgebra algebra_;
  std::vector<Multivector> generator_d_;
};

inline CEComplex build_complex(const LieAlgebra& g) { return CEComplex(g); }

template <class Coeff>
BasicMultivector<Coeff> CEComplex::differential(const BasicMultivector<Coeff>& f) const {
  if (f.ambient_dim() != dim()) {
    throw std::invalid_argument("form lives in dimension " + std::to_string(f.ambient_dim()) +
                                ", complex in " + std::to_string(dim()));
  }
  BasicMultivector<Coeff> out(dim());
  for (const auto& [m, c] : f.terms()) {
    int position = 0;
    for (int i : m.indices()) {
      // dx_i has even degree, so it can be moved to the front after removing x_i,
      // which costs (-1)^(position of x_i).
      const Monomial rest = m.without(i);
      const int outer_sign = (position & 1) ? -1 : 1;
      ++position;
      for (const auto& [dm, dc] : generator_d_[static_cast<std::size_t>(i - 1)].terms()) {
        const int sign = wedge_sign(dm, rest) * outer_sign;
        if (sign == 0) {
          continue;
        }
        out.add_term(dm.united(rest), c * Rational(sign > 0 ? dc : Rational(-dc)));
      }
    }
  }
  return out;
}

/// Basis of ker d in one degree, as the reduced row-echelon basis over the
/// lexicographic monomial basis.
std::vector<Multivector> cocycle_basis(const CEComplex& c, int degree);

/// Basis of im(d : Lambda^(degree-1) -> Lambda^degree), reduced row-echelon.
std::vector<Multivector> coboundary_basis(const CEComplex& c, int degree);

struct CochainBasisReport {
  int degree = 0;
  long dim_cochains = 0;
  long dim_cocycles = 0;
  long dim_coboundaries = 0;
  long betti = 0;
};

/// One report per degree 0..dim. Throws std::domain_error when d^2 != 0.
std::vector<CochainBasisReport> betti_numbers(const CEComplex& c);

}  // namespace nilsym
