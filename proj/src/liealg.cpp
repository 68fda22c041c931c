#include "nilsym/liealg.hpp"

#include "nilsym/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace nilsym {

namespace {

void check_index(int i, int dim) {
  if (i < 1 || i > dim) {
    throw std::invalid_argument("basis index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(dim));
  }
}

template <class Coeff>
BasicBracketTable<Coeff> normalize(const BasicBracketTable<Coeff>& raw, int dim) {
  BasicBracketTable<Coeff> out;
  for (const auto& [key, value] : raw) {
    auto [i, j] = key;
    check_index(i, dim);
    check_index(j, dim);
    bool has_nonzero = false;
    for (const auto& [k, c] : value) {
      check_index(k, dim);
      has_nonzero = has_nonzero || !coeff_is_zero(c);
    }
    if (i == j) {
      if (has_nonzero) {
        throw std::invalid_argument("nonzero bracket of e" + std::to_string(i) + " with itself");
      }
      continue;
    }
    const bool flip = i > j;
    auto& target = out[{std::min(i, j), std::max(i, j)}];
    for (const auto& [k, c] : value) {
      auto it = target.find(k);
      Coeff term = flip ? Coeff(-c) : c;
      if (it == target.end()) {
        if (!coeff_is_zero(term)) {
          target.emplace(k, std::move(term));
        }
      } else {
        it->second += term;
        if (coeff_is_zero(it->second)) {
          target.erase(it);
        }
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.empty(); });
  return out;
}

std::vector<std::string> default_basis_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back("e" + std::to_string(i));
  }
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, int dim, const BracketTable& brackets,
                       std::vector<std::string> basis_labels)
    : name_(std::move(name)), dim_(dim), labels_(std::move(basis_labels)) {
  if (dim < 1 || dim > 64) {
    throw std::invalid_argument("Lie algebra dimension must lie in 1..64");
  }
  brackets_ = normalize(brackets, dim);
  if (labels_.empty()) {
    labels_ = default_basis_labels(dim);
  }
  if (static_cast<int>(labels_.size()) != dim) {
    throw std::invalid_argument("basis label count does not match dimension");
  }
}

std::vector<std::string> LieAlgebra::dual_labels() const {
  std::vector<std::string> out;
  out.reserve(labels_.size());
  for (const auto& label : labels_) {
    std::string d = label;
    if (!d.empty() && d[0] == 'e') {
      d[0] = 'x';
    } else if (!d.empty() && d[0] == 'f') {
      d[0] = 'y';
    } else {
      std::transform(d.begin(), d.end(), d.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    }
    out.push_back(std::move(d));
  }
  return out;
}

LieVector LieAlgebra::bracket(int i, int j) const {
  check_index(i, dim_);
  check_index(j, dim_);
  if (i == j) {
    return {};
  }
  auto it = brackets_.find({std::min(i, j), std::max(i, j)});
  if (it == brackets_.end()) {
    return {};
  }
  if (i < j) {
    return it->second;
  }
  LieVector out;
  for (const auto& [k, c] : it->second) {
    out.emplace(k, -c);
  }
  return out;
}

Rational LieAlgebra::structure_constant(int i, int j, int k) const {
  check_index(k, dim_);
  const LieVector v = bracket(i, j);
  auto it = v.find(k);
  return it == v.end() ? Rational(0) : it->second;
}

RationalVector LieAlgebra::bracket(const RationalVector& a, const RationalVector& b) const {
  if (a.size() != dim_ || b.size() != dim_) {
    throw std::invalid_argument("coordinate vector length does not match dimension");
  }
  RationalVector out = RationalVector::Zero(dim_);
  for (const auto& [key, value] : brackets_) {
    const auto [i, j] = key;
    // [a, b] picks up a_i b_j - a_j b_i on the stored pair (i, j).
    const Rational w = a(i - 1) * b(j - 1) - a(j - 1) * b(i - 1);
    if (w.is_zero()) {
      continue;
    }
    for (const auto& [k, c] : value) {
      out(k - 1) += w * c;
    }
  }
  return out;
}

RationalMatrix LieAlgebra::adjoint(int i) const {
  RationalMatrix m = RationalMatrix::Zero(dim_, dim_);
  for (int j = 1; j <= dim_; ++j) {
    for (const auto& [k, c] : bracket(i, j)) {
      m(k - 1, j - 1) = c;
    }
  }
  return m;
}

JacobiResult jacobi_check(const LieAlgebra& g) {
  const int n = g.dim();
  // [[u, v], e_w] expanded through the bracket table.
  auto outer = [&](const LieVector& inner, int w, LieVector& acc) {
    for (const auto& [k, c] : inner) {
      for (const auto& [l, d] : g.bracket(k, w)) {
        acc[l] += c * d;
      }
    }
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        LieVector sum;
        outer(g.bracket(i, j), k, sum);
        outer(g.bracket(j, k), i, sum);
        outer(g.bracket(k, i), j, sum);
        for (const auto& [l, c] : sum) {
          if (!c.is_zero()) {
            return {false, std::array<int, 3>{i, j, k}};
          }
        }
      }
    }
  }
  return {};
}

UcsProfile upper_central_series(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<RationalMatrix> ads;
  ads.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    ads.push_back(g.adjoint(j));
  }
  UcsProfile profile;
  RationalMatrix current(0, n);  // rows span C_i
  while (true) {
    // Rows of `annihilator` cut out span(C_i); x is in C_{i+1} iff every ad(e_j) x lands there.
    const RationalMatrix annihilator = kernel_basis(current);
    RationalMatrix conditions(annihilator.rows() * n, n);
    for (int j = 0; j < n; ++j) {
      conditions.middleRows(j * annihilator.rows(), annihilator.rows()) =
          annihilator * ads[static_cast<std::size_t>(j)];
    }
    RationalMatrix next = kernel_basis(conditions);
    if (next.rows() == current.rows()) {
      break;
    }
    profile.dims.push_back(static_cast<int>(next.rows()));
    current = std::move(next);
    if (current.rows() == n) {
      break;
    }
  }
  profile.nilpotent = current.rows() == n;
  return profile;
}

LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h) {
  const int shift = g.dim();
  BracketTable table = g.brackets();
  for (const auto& [key, value] : h.brackets()) {
    LieVector shifted;
    for (const auto& [k, c] : value) {
      shifted.emplace(k + shift, c);
    }
    table.emplace(std::pair{key.first + shift, key.second + shift}, std::move(shifted));
  }
  std::vector<std::string> labels = g.basis_labels();
  if (h.dim() == 1) {
    labels.emplace_back("f");
  } else {
    for (int i = 1; i <= h.dim(); ++i) {
      labels.push_back("f" + std::to_string(i));
    }
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    labels.clear();
  }
  return LieAlgebra(g.name() + " x " + h.name(), g.dim() + h.dim(), table, std::move(labels));
}

LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& T) {
  const int n = g.dim();
  if (T.rows() != n || T.cols() != n) {
    throw std::invalid_argument("basis change matrix has the wrong size");
  }
  const auto T_inv = inverse(T);
  if (!T_inv) {
    throw std::invalid_argument("basis change matrix is singular");
  }
  BracketTable table;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const RationalVector image = *T_inv * g.bracket(RationalVector(T.col(a)),
                                                      RationalVector(T.col(b)));
      LieVector v;
      for (int k = 0; k < n; ++k) {
        if (!image(k).is_zero()) {
          v.emplace(k + 1, image(k));
        }
      }
      if (!v.empty()) {
        table.emplace(std::pair{a + 1, b + 1}, std::move(v));
      }
    }
  }
  return LieAlgebra(g.name(), n, table, g.basis_labels());
}

ParametricLieAlgebra::ParametricLieAlgebra(std::string name, int dim,
                                           std::vector<std::string> params,
                                           const BasicBracketTable<MPoly>& brackets,
                                           std::vector<Rational> exclusions)
    : name_(std::move(name)),
      dim_(dim),
      params_(std::move(params)),
      exclusions_(std::move(exclusions)) {
  if (dim < 1 || dim > 64) {
    throw std::invalid_argument("Lie algebra dimension must lie in 1..64");
  }
  for (const auto& [key, value] : brackets) {
    for (const auto& [k, c] : value) {
      if (c.nvars() != params_.size()) {
        throw std::invalid_argument("coefficient polynomial does not match parameter count");
      }
    }
  }
  if (!exclusions_.empty() && params_.empty()) {
    throw std::invalid_argument("exclusions given without a parameter");
  }
  brackets_ = normalize(brackets, dim);
}

LieAlgebra instantiate_params(const ParametricLieAlgebra& family,
                              const std::map<std::string, Rational>& bindings,
                              std::span<const Rational> extra_exclusions) {
  std::vector<Rational> point;
  for (const auto& name : family.params()) {
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      throw std::invalid_argument("parameter '" + name + "' of " + family.name() + " is unbound");
    }
    point.push_back(it->second);
  }
  // Exclusions refer to the family's first (in practice only) parameter.
  if (!point.empty()) {
    auto excluded = [&](const Rational& q) { return q == point.front(); };
    if (std::any_of(family.exclusions().begin(), family.exclusions().end(), excluded) ||
        std::any_of(extra_exclusions.begin(), extra_exclusions.end(), excluded)) {
      throw std::invalid_argument(family.params().front() + " = " + to_string(point.front()) +
                                  " is excluded for " + family.name());
    }
  }
  BracketTable table;
  for (const auto& [key, value] : family.brackets()) {
    LieVector v;
    for (const auto& [k, c] : value) {
      const Rational q = c.evaluate(point);
      if (!q.is_zero()) {
        v.emplace(k, q);
      }
    }
    if (!v.empty()) {
      table.emplace(key, std::move(v));
    }
  }
  return LieAlgebra(family.name(), family.dim(), table);
}

}  // namespace nilsym
