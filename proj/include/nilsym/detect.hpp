#pragma once

// Exact decision procedures for invariant symplectic and contact structures.
//
// Symplectic (dim 2m): a closed 2-form is sum_i t_i beta_i over a basis of the
// degree-2 cocycles; omega(t)^m has a single top coefficient, a polynomial
// P(t) = m! Pf(t). The algebra is symplectic iff P is not identically zero, and any
// point with P != 0 is a witness. The argument is purely formal so "no" is a proof.
//
// Contact (dim 2n+1): for the generic 1-form alpha(s) = sum_i s_i x_i the top
// coefficient Q(s) of alpha ^ (d alpha)^n decides existence the same way.

#include "nilsym/cecomplex.hpp"
#include "nilsym/exterior.hpp"
#include "nilsym/liealg.hpp"
#include "nilsym/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilsym {

using PolyMultivector = BasicMultivector<MPoly>;

enum class CertificateKind { identically_zero_polynomial, witness };
enum class FormKind { symplectic, contact };

std::string to_string(CertificateKind k);
std::string to_string(FormKind k);

struct SymplecticVerdict {
  bool admits = false;
  std::optional<Multivector> witness;
  int pfaffian_nvars = 0;
  int pfaffian_degree = 0;
  CertificateKind certificate = CertificateKind::identically_zero_polynomial;
};

struct ContactVerdict {
  bool admits = false;
  std::optional<Multivector> witness;
  int polynomial_nvars = 0;
  int polynomial_degree = 0;
  CertificateKind certificate = CertificateKind::identically_zero_polynomial;
};

struct PfaffianData {
  MPoly pfaffian;                          // P(t) / m!
  std::vector<Multivector> cocycle_basis;  // beta_1..beta_k, t_i multiplies beta_i
};

/// Closed 2-form with polynomial coefficients: sum_i t_i beta_i.
PolyMultivector generic_combination(std::span<const Multivector> basis);

/// Requires even dimension and the Jacobi identity (std::invalid_argument /
/// std::domain_error otherwise).
PfaffianData pfaffian_polynomial(const LieAlgebra& g);
SymplecticVerdict symplectic_decide(const LieAlgebra& g);

/// Q(s) for alpha(s) = sum s_i x_i; s_i is variable i-1. Requires odd dimension.
MPoly contact_polynomial(const LieAlgebra& g);
ContactVerdict contact_decide(const LieAlgebra& g);

/// Clears denominators and divides by the content so the coefficients are coprime
/// integers, with the first term (in monomial order) positive.
Multivector canonicalize_witness(const Multivector& form);

struct FormCheck {
  bool passed = false;
  bool closed = false;         // symplectic only; true for contact checks
  bool nondegenerate = false;  // omega^m != 0, or alpha ^ (d alpha)^n != 0
  std::string failure;         // empty when passed
};

/// Throws std::invalid_argument on a dimension parity mismatch or when the form's
/// ambient dimension differs from the algebra's.
FormCheck verify_claimed_form(const LieAlgebra& g, const Multivector& form, FormKind kind);

/// Witness of the shape sum x_i x_j + c x_l y on g x a, split into its parts.
struct PairingShape {
  Multivector base;  // the part without y, over the ambient dim of g x a
  int pivot = 0;     // l
  Rational pivot_coefficient;
};

/// std::nullopt unless `form` (on g x a, y = index dim+1) is homogeneous of degree 2 and
/// has exactly one term involving y.
std::optional<PairingShape> pairing_shape(const Multivector& form, int algebra_dim);

/// Combines symplectic witnesses wg on g x a and wh on h x a, both of the form
/// sum x_i x_j + x_l y, into sum x_i x_j + x_l y_r + sum y_s y_t on g x h, and checks the
/// result before returning it. Throws std::invalid_argument on malformed inputs and
/// std::domain_error when the combined form is not symplectic.
Multivector product_symplectic_witness(const Multivector& wg, const Multivector& wh,
                                       const LieAlgebra& g, const LieAlgebra& h);

}  // namespace nilsym
