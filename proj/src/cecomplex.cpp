#include "nilsym/cecomplex.hpp"

#include "nilsym/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilsym {

CEComplex::CEComplex(LieAlgebra g) : algebra_(std::move(g)) {
  const int n = algebra_.dim();
  generator_d_.assign(static_cast<std::size_t>(n), Multivector(n));
  for (const auto& [key, value] : algebra_.brackets()) {
    const Monomial m = Monomial::from_indices(std::array{key.first, key.second});
    for (const auto& [k, c] : value) {
      generator_d_[static_cast<std::size_t>(k - 1)].add_term(m, -c);
    }
  }
}

RationalMatrix CEComplex::differential_matrix(int degree) const {
  const int n = dim();
  const auto source = monomials_of_degree(n, degree);
  const auto target = monomials_of_degree(n, degree + 1);
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(target.size()),
                                          static_cast<Eigen::Index>(source.size()));
  for (std::size_t col = 0; col < source.size(); ++col) {
    const Multivector image = differential(Multivector(n, source[col], Rational(1)));
    for (const auto& [mono, c] : image.terms()) {
      const auto row = std::lower_bound(target.begin(), target.end(), mono) - target.begin();
      m(row, static_cast<Eigen::Index>(col)) = c;
    }
  }
  return m;
}

bool CEComplex::d_squared_is_zero() const {
  return std::all_of(generator_d_.begin(), generator_d_.end(),
                     [&](const Multivector& dx) { return differential(dx).is_zero(); });
}

namespace {

std::vector<Multivector> rows_as_forms(const RationalMatrix& rows, int n, int degree) {
  const auto basis = monomials_of_degree(n, degree);
  std::vector<Multivector> out;
  out.reserve(static_cast<std::size_t>(rows.rows()));
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    Multivector f(n);
    for (Eigen::Index c = 0; c < rows.cols(); ++c) {
      f.add_term(basis[static_cast<std::size_t>(c)], rows(r, c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<Multivector> cocycle_basis(const CEComplex& c, int degree) {
  if (degree < 0 || degree > c.dim()) {
    throw std::invalid_argument("degree out of range");
  }
  return rows_as_forms(kernel_basis(c.differential_matrix(degree)), c.dim(), degree);
}

std::vector<Multivector> coboundary_basis(const CEComplex& c, int degree) {
  if (degree < 0 || degree > c.dim()) {
    throw std::invalid_argument("degree out of range");
  }
  if (degree == 0) {
    return {};
  }
  const RationalMatrix d = c.differential_matrix(degree - 1);
  return rows_as_forms(row_space_basis(RationalMatrix(d.transpose())), c.dim(), degree);
}

std::vector<CochainBasisReport> betti_numbers(const CEComplex& c) {
  if (!c.d_squared_is_zero()) {
    throw std::domain_error("d^2 != 0: " + c.algebra().name() + " violates the Jacobi identity");
  }
  const int n = c.dim();
  std::vector<long> ranks(static_cast<std::size_t>(n + 1), 0);  // rank of d out of degree p
  for (int p = 0; p < n; ++p) {
    ranks[static_cast<std::size_t>(p)] = static_cast<long>(rank(c.differential_matrix(p)));
  }
  std::vector<CochainBasisReport> out;
  for (int p = 0; p <= n; ++p) {
    CochainBasisReport r;
    r.degree = p;
    r.dim_cochains = static_cast<long>(monomials_of_degree(n, p).size());
    r.dim_cocycles = r.dim_cochains - ranks[static_cast<std::size_t>(p)];
    r.dim_coboundaries = p == 0 ? 0 : ranks[static_cast<std::size_t>(p - 1)];
    r.betti = r.dim_cocycles - r.dim_coboundaries;
    out.push_back(r);
  }
  return out;
}

}  // namespace nilsym
