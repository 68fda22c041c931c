#include "nilsym/detect.hpp"

#include <stdexcept>

namespace nilsym {

std::string to_string(CertificateKind k) {
  return k == CertificateKind::witness ? "witness" : "identically-zero-polynomial";
}

std::string to_string(FormKind k) { return k == FormKind::symplectic ? "symplectic" : "contact"; }

namespace {

void require_jacobi(const CEComplex& c) {
  if (!c.d_squared_is_zero()) {
    throw std::domain_error(c.algebra().name() + " violates the Jacobi identity");
  }
}

/// Coefficient of x_1..x_n, or the zero polynomial.
MPoly top_coefficient(const PolyMultivector& f, std::size_t nvars) {
  const MPoly* c = f.find(Monomial::top(f.ambient_dim()));
  return c ? *c : MPoly(nvars);
}

Rational factorial(int m) {
  Rational out(1);
  for (int i = 2; i <= m; ++i) {
    out *= i;
  }
  return out;
}

Multivector combine(std::span<const Multivector> basis, std::span<const Rational> t, int n) {
  Multivector out(n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!t[i].is_zero()) {
      out += scale(t[i], basis[i]);
    }
  }
  return out;
}

}  // namespace

PolyMultivector generic_combination(std::span<const Multivector> basis) {
  if (basis.empty()) {
    throw std::invalid_argument("generic combination of an empty basis");
  }
  const std::size_t k = basis.size();
  PolyMultivector out(basis.front().ambient_dim());
  for (std::size_t i = 0; i < k; ++i) {
    const MPoly t = MPoly::variable(k, i);
    for (const auto& [m, c] : basis[i].terms()) {
      out.add_term(m, t * c);
    }
  }
  return out;
}

PfaffianData pfaffian_polynomial(const LieAlgebra& g) {
  if (g.dim() % 2 != 0) {
    throw std::invalid_argument("symplectic structures need even dimension; " + g.name() +
                                " has dimension " + std::to_string(g.dim()));
  }
  const CEComplex complex(g);
  require_jacobi(complex);
  const int m = g.dim() / 2;
  PfaffianData out{MPoly(0), cocycle_basis(complex, 2)};
  const std::size_t k = out.cocycle_basis.size();
  out.pfaffian = MPoly(k);
  if (k == 0) {
    return out;
  }
  const PolyMultivector omega = generic_combination(out.cocycle_basis);
  const PolyMultivector top = wedge_power(omega, m, MPoly::constant(k, Rational(1)));
  out.pfaffian = top_coefficient(top, k) * (Rational(1) / factorial(m));
  return out;
}

SymplecticVerdict symplectic_decide(const LieAlgebra& g) {
  const PfaffianData data = pfaffian_polynomial(g);
  SymplecticVerdict v;
  v.pfaffian_nvars = static_cast<int>(data.cocycle_basis.size());
  v.pfaffian_degree = g.dim() / 2;
  if (is_identically_zero(data.pfaffian)) {
    return v;
  }
  const auto t = find_nonvanishing_point(data.pfaffian);
  Multivector omega = canonicalize_witness(combine(data.cocycle_basis, t, g.dim()));
  if (!verify_claimed_form(g, omega, FormKind::symplectic).passed) {
    throw std::logic_error("symplectic witness failed verification for " + g.name());
  }
  v.admits = true;
  v.witness = std::move(omega);
  v.certificate = CertificateKind::witness;
  return v;
}

MPoly contact_polynomial(const LieAlgebra& g) {
  if (g.dim() % 2 == 0) {
    throw std::invalid_argument("contact structures need odd dimension; " + g.name() +
                                " has dimension " + std::to_string(g.dim()));
  }
  const CEComplex complex(g);
  require_jacobi(complex);
  const int n = g.dim();
  const auto nvars = static_cast<std::size_t>(n);
  PolyMultivector alpha(n);
  for (int i = 1; i <= n; ++i) {
    alpha.add_term(Monomial::generator(i), MPoly::variable(nvars, static_cast<std::size_t>(i - 1)));
  }
  const PolyMultivector d_alpha = complex.differential(alpha);
  const PolyMultivector power = wedge_power(d_alpha, (n - 1) / 2, MPoly::constant(nvars, Rational(1)));
  return top_coefficient(wedge(alpha, power), nvars);
}

ContactVerdict contact_decide(const LieAlgebra& g) {
  const MPoly q = contact_polynomial(g);
  ContactVerdict v;
  v.polynomial_nvars = g.dim();
  v.polynomial_degree = (g.dim() + 1) / 2;
  if (is_identically_zero(q)) {
    return v;
  }
  const auto s = find_nonvanishing_point(q);
  Multivector alpha(g.dim());
  for (int i = 1; i <= g.dim(); ++i) {
    alpha.add_term(Monomial::generator(i), s[static_cast<std::size_t>(i - 1)]);
  }
  alpha = canonicalize_witness(alpha);
  if (!verify_claimed_form(g, alpha, FormKind::contact).passed) {
    throw std::logic_error("contact witness failed verification for " + g.name());
  }
  v.admits = true;
  v.witness = std::move(alpha);
  v.certificate = CertificateKind::witness;
  return v;
}

Multivector canonicalize_witness(const Multivector& form) {
  if (form.is_zero()) {
    return form;
  }
  Integer den_lcm(1);
  for (const auto& [m, c] : form.terms()) {
    den_lcm = lcm(den_lcm, Integer(denominator(c)));
  }
  Integer content(0);
  for (const auto& [m, c] : form.terms()) {
    const Integer scaled = Integer(numerator(c)) * (den_lcm / Integer(denominator(c)));
    content = gcd(content, abs(scaled));
  }
  Rational factor(den_lcm, content);
  if (form.terms().begin()->second < 0) {
    factor = -factor;
  }
  return scale(factor, form);
}

FormCheck verify_claimed_form(const LieAlgebra& g, const Multivector& form, FormKind kind) {
  if (form.ambient_dim() != g.dim()) {
    throw std::invalid_argument("form lives in dimension " + std::to_string(form.ambient_dim()) +
                                " but " + g.name() + " has dimension " + std::to_string(g.dim()));
  }
  const bool even = g.dim() % 2 == 0;
  if (kind == FormKind::symplectic && !even) {
    throw std::invalid_argument("symplectic check needs even dimension, got " +
                                std::to_string(g.dim()));
  }
  if (kind == FormKind::contact && even) {
    throw std::invalid_argument("contact check needs odd dimension, got " +
                                std::to_string(g.dim()));
  }
  const CEComplex complex(g);
  FormCheck r;
  const int degree = kind == FormKind::symplectic ? 2 : 1;
  if (form.is_zero() || !form.is_homogeneous(degree)) {
    r.failure = "not a homogeneous " + std::to_string(degree) + "-form";
    return r;
  }
  const auto labels = g.dual_labels();
  const Multivector d_form = complex.differential(form);
  if (kind == FormKind::symplectic) {
    r.closed = d_form.is_zero();
    r.nondegenerate = !wedge_power(form, g.dim() / 2).is_zero();
    if (!r.closed) {
      r.failure = "not closed: d(form) = " + render(d_form, labels);
    } else if (!r.nondegenerate) {
      r.failure = "degenerate: top wedge power vanishes";
    }
  } else {
    r.closed = true;
    r.nondegenerate = !wedge(form, wedge_power(d_form, (g.dim() - 1) / 2)).is_zero();
    if (!r.nondegenerate) {
      r.failure = "not contact: alpha ^ (d alpha)^n vanishes";
    }
  }
  r.passed = r.closed && r.nondegenerate;
  return r;
}

std::optional<PairingShape> pairing_shape(const Multivector& form, int algebra_dim) {
  if (form.ambient_dim() != algebra_dim + 1 || form.is_zero() || !form.is_homogeneous(2)) {
    return std::nullopt;
  }
  const int y = algebra_dim + 1;
  PairingShape shape{Multivector(form.ambient_dim()), 0, Rational(0)};
  for (const auto& [m, c] : form.terms()) {
    if (!m.contains(y)) {
      shape.base.add_term(m, c);
      continue;
    }
    if (shape.pivot != 0) {
      return std::nullopt;
    }
    shape.pivot = m.without(y).max_index();
    shape.pivot_coefficient = c;
  }
  if (shape.pivot == 0) {
    return std::nullopt;
  }
  return shape;
}

Multivector product_symplectic_witness(const Multivector& wg, const Multivector& wh,
                                       const LieAlgebra& g, const LieAlgebra& h) {
  const auto sg = pairing_shape(wg, g.dim());
  const auto sh = pairing_shape(wh, h.dim());
  if (!sg) {
    throw std::invalid_argument("first witness is not of the form sum x_i x_j + x_l y on " +
                                g.name() + " x a");
  }
  if (!sh) {
    throw std::invalid_argument("second witness is not of the form sum x_i x_j + x_l y on " +
                                h.name() + " x a");
  }
  const LieAlgebra product = direct_product(g, h);
  const int n = product.dim();
  const int shift = g.dim();
  Multivector omega(n);
  for (const auto& [m, c] : sg->base.terms()) {
    omega.add_term(m, c);
  }
  omega.add_term(Monomial::from_indices(std::array{sg->pivot, shift + sh->pivot}),
                 sg->pivot_coefficient * sh->pivot_coefficient);
  for (const auto& [m, c] : sh->base.terms()) {
    omega.add_term(Monomial::from_mask(m.mask() << shift), c);
  }
  const FormCheck check = verify_claimed_form(product, omega, FormKind::symplectic);
  if (!check.passed) {
    std::string hint;
    const CEComplex cg(g);
    const CEComplex ch(h);
    if (!cg.generator_differentials()[static_cast<std::size_t>(sg->pivot - 1)].is_zero() ||
        !ch.generator_differentials()[static_cast<std::size_t>(sh->pivot - 1)].is_zero()) {
      hint = " (the generator paired with y is not closed)";
    }
    throw std::domain_error("combined form on " + product.name() + " is not symplectic: " +
                            check.failure + hint);
  }
  return omega;
}

}  // namespace nilsym
