#pragma once

// Seeded random generators shared by the unit and acceptance tests.

#include "nilsym/exterior.hpp"
#include "nilsym/linalg.hpp"
#include "nilsym/liealg.hpp"

#include <random>

namespace nilsym::testing {

inline Rational small_rational(std::mt19937& rng, int range = 3, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

/// Sparse-ish unimodular-or-not random matrix, re-drawn until invertible.
inline RationalMatrix random_invertible(std::mt19937& rng, int n) {
  std::bernoulli_distribution keep(0.35);
  for (;;) {
    RationalMatrix t = RationalMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          Rational d = small_rational(rng, 2, 2);
          t(i, j) = d.is_zero() ? Rational(1) : d;
        } else if (keep(rng)) {
          t(i, j) = small_rational(rng, 2, 2);
        }
      }
    }
    if (!determinant(t).is_zero()) {
      return t;
    }
  }
}

inline RationalVector random_point(std::mt19937& rng, std::size_t n) {
  RationalVector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    v(static_cast<Eigen::Index>(i)) = small_rational(rng, 5, 4);
  }
  return v;
}

/// Random homogeneous form of the given degree with a handful of terms.
inline Multivector random_form(std::mt19937& rng, int dim, int degree, int terms = 4) {
  Multivector out(dim);
  const auto basis = monomials_of_degree(dim, degree);
  if (basis.empty()) {
    return out;
  }
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < terms; ++t) {
    out.add_term(basis[pick(rng)], small_rational(rng));
  }
  return out;
}

inline Multivector random_mixed_form(std::mt19937& rng, int dim) {
  Multivector out(dim);
  std::uniform_int_distribution<int> deg(0, dim);
  for (int t = 0; t < 3; ++t) {
    out += random_form(rng, dim, deg(rng), 2);
  }
  return out;
}

/// Algebras that violate the Jacobi identity, built by hand.
inline std::vector<LieAlgebra> jacobi_violators() {
  auto v = [](int k, int c = 1) { return LieVector{{k, Rational(c)}}; };
  std::vector<LieAlgebra> out;
  out.emplace_back("v1", 3, BracketTable{{{1, 2}, v(3)}, {{2, 3}, v(1)}, {{1, 3}, v(1, -1)}});
  out.emplace_back("v2", 3, BracketTable{{{1, 2}, v(3)}, {{1, 3}, v(2)}, {{2, 3}, v(2)}});
  out.emplace_back("v3", 4, BracketTable{{{1, 2}, v(3)}, {{2, 3}, v(4)}, {{1, 3}, v(1)}});
  out.emplace_back("v4", 4, BracketTable{{{1, 2}, v(3)}, {{1, 3}, v(4)}, {{2, 3}, v(2)}});
  out.emplace_back("v5", 4, BracketTable{{{1, 2}, v(3)}, {{3, 4}, v(1)}});
  out.emplace_back("v6", 5, BracketTable{{{1, 2}, v(3)}, {{1, 3}, v(4)}, {{2, 3}, v(5)},
                                         {{1, 4}, v(5)}, {{2, 4}, v(1)}});
  out.emplace_back("v7", 5, BracketTable{{{1, 2}, v(5)}, {{3, 4}, v(5)}, {{1, 5}, v(2)}});
  out.emplace_back("v8", 3, BracketTable{{{1, 2}, v(1)}, {{1, 3}, v(3)}, {{2, 3}, v(1)}});
  out.emplace_back("v9", 6, BracketTable{{{1, 2}, v(3)}, {{1, 3}, v(4)}, {{1, 4}, v(5)},
                                         {{2, 3}, v(6)}, {{4, 5}, v(1)}});
  out.emplace_back("v10", 4, BracketTable{{{1, 2}, LieVector{{3, Rational(1)}, {4, Rational(1)}}},
                                          {{3, 4}, v(1, 2)},
                                          {{2, 4}, v(2)}});
  return out;
}

}  // namespace nilsym::testing
