#pragma once

// Exterior (Grassmann) algebra on an ordered basis of 1-forms x_1..x_n.
// Multivectors are sparse and templated on the coefficient ring so that the
// same code serves rational forms and forms with polynomial coefficients.

#include "nilsym/rational.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilsym {

inline constexpr int kMaxAmbientDim = 64;

/// A wedge product of distinct generators x_{i_1} < ... < x_{i_k}, stored as a bitset
/// (bit i-1 set for x_i). Ordered by degree, then lexicographically on index lists.
class Monomial {
 public:
  constexpr Monomial() = default;

  static constexpr Monomial from_mask(std::uint64_t mask) { return Monomial(mask); }
  static Monomial generator(int index) {
    check_index(index);
    return Monomial(std::uint64_t{1} << (index - 1));
  }
  /// Indices must be strictly increasing and 1-based.
  static Monomial from_indices(std::span<const int> indices) {
    std::uint64_t mask = 0;
    int previous = 0;
    for (int i : indices) {
      check_index(i);
      if (i <= previous) {
        throw std::invalid_argument("monomial indices must be strictly increasing");
      }
      mask |= std::uint64_t{1} << (i - 1);
      previous = i;
    }
    return Monomial(mask);
  }
  /// x_1 ... x_n
  static Monomial top(int n) {
    if (n < 0 || n > kMaxAmbientDim) {
      throw std::invalid_argument("ambient dimension out of range");
    }
    return Monomial(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int index) const { return (mask_ >> (index - 1)) & 1u; }
  /// Largest index present, 0 for the empty monomial.
  constexpr int max_index() const { return 64 - std::countl_zero(mask_); }
  constexpr bool disjoint(Monomial other) const { return (mask_ & other.mask_) == 0; }
  constexpr Monomial without(int index) const {
    return Monomial(mask_ & ~(std::uint64_t{1} << (index - 1)));
  }
  constexpr Monomial united(Monomial other) const { return Monomial(mask_ | other.mask_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  friend constexpr bool operator==(Monomial a, Monomial b) = default;
  friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
      return c;
    }
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) {
      return std::strong_ordering::equal;
    }
    // The list holding the smallest differing index sorts first.
    return (a.mask_ & diff & (~diff + 1)) != 0 ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
  }

 private:
  constexpr explicit Monomial(std::uint64_t mask) : mask_(mask) {}
  static void check_index(int i) {
    if (i < 1 || i > kMaxAmbientDim) {
      throw std::invalid_argument("generator index out of range");
    }
  }
  std::uint64_t mask_ = 0;
};

/// Sign of the permutation sorting the concatenation of `a` then `b`, or 0 when they
/// share an index. Counts inversions: pairs (i in a, j in b) with i > j.
constexpr int wedge_sign(Monomial a, Monomial b) {
  if (!a.disjoint(b)) {
    return 0;
  }
  int inversions = 0;
  for (std::uint64_t m = b.mask(); m != 0; m &= m - 1) {
    const int j = std::countr_zero(m);
    inversions += j == 63 ? 0 : std::popcount(a.mask() >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

/// Monomials of degree p in n generators, in lexicographic order.
std::vector<Monomial> monomials_of_degree(int n, int p);

/// Sparse element of the exterior algebra with coefficients in Coeff.
/// Coeff needs ring operators and an overload of coeff_is_zero().
template <class Coeff>
class BasicMultivector {
 public:
  using Terms = std::map<Monomial, Coeff>;

  explicit BasicMultivector(int ambient_dim) : dim_(ambient_dim) {
    if (ambient_dim < 0 || ambient_dim > kMaxAmbientDim) {
      throw std::invalid_argument("ambient dimension out of range");
    }
  }
  BasicMultivector(int ambient_dim, Monomial m, Coeff c) : BasicMultivector(ambient_dim) {
    add_term(m, std::move(c));
  }

  static BasicMultivector scalar(int ambient_dim, Coeff c) {
    return BasicMultivector(ambient_dim, Monomial{}, std::move(c));
  }
  static BasicMultivector generator(int ambient_dim, int index, Coeff one) {
    return BasicMultivector(ambient_dim, Monomial::generator(index), std::move(one));
  }

  int ambient_dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// nullptr when the monomial is absent.
  const Coeff* find(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Accumulates c * m, dropping the entry if it cancels.
  void add_term(Monomial m, Coeff c) {
    if (m.max_index() > dim_) {
      throw std::invalid_argument("monomial exceeds ambient dimension");
    }
    if (coeff_is_zero(c)) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(m, std::move(c));
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) {
        terms_.erase(it);
      }
    }
  }
  void subtract_term(Monomial m, const Coeff& c) { add_term(m, -c); }

  /// Degree of the highest nonzero component, -1 for zero.
  int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  bool is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_) {
      if (m.degree() != degree) {
        return false;
      }
    }
    return true;
  }

  BasicMultivector& operator+=(const BasicMultivector& other) {
    check_same_dim(other);
    for (const auto& [m, c] : other.terms_) {
      add_term(m, c);
    }
    return *this;
  }
  BasicMultivector& operator-=(const BasicMultivector& other) {
    check_same_dim(other);
    for (const auto& [m, c] : other.terms_) {
      add_term(m, -c);
    }
    return *this;
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void check_same_dim(const BasicMultivector& other) const {
    if (other.dim_ != dim_) {
      throw std::invalid_argument("ambient dimension mismatch: " + std::to_string(dim_) +
                                  " vs " + std::to_string(other.dim_));
    }
  }

 private:
  int dim_;
  Terms terms_;
};

using Multivector = BasicMultivector<Rational>;

template <class Coeff>
BasicMultivector<Coeff> operator+(BasicMultivector<Coeff> a, const BasicMultivector<Coeff>& b) {
  a += b;
  return a;
}

template <class Coeff>
BasicMultivector<Coeff> operator-(BasicMultivector<Coeff> a, const BasicMultivector<Coeff>& b) {
  a -= b;
  return a;
}

template <class Coeff>
BasicMultivector<Coeff> operator-(const BasicMultivector<Coeff>& a) {
  BasicMultivector<Coeff> out(a.ambient_dim());
  for (const auto& [m, c] : a.terms()) {
    out.add_term(m, -c);
  }
  return out;
}

/// s * a for a scalar s of any type multiplying Coeff.
template <class Coeff, class S>
BasicMultivector<Coeff> scale(const S& s, const BasicMultivector<Coeff>& a) {
  BasicMultivector<Coeff> out(a.ambient_dim());
  for (const auto& [m, c] : a.terms()) {
    out.add_term(m, c * s);
  }
  return out;
}

template <class Coeff>
BasicMultivector<Coeff> degree_component(const BasicMultivector<Coeff>& a, int degree) {
  BasicMultivector<Coeff> out(a.ambient_dim());
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() == degree) {
      out.add_term(m, c);
    }
  }
  return out;
}

template <class Coeff>
BasicMultivector<Coeff> wedge(const BasicMultivector<Coeff>& a, const BasicMultivector<Coeff>& b) {
  a.check_same_dim(b);
  BasicMultivector<Coeff> out(a.ambient_dim());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int sign = wedge_sign(ma, mb);
      if (sign == 0) {
        continue;
      }
      Coeff c = ca * cb;
      out.add_term(ma.united(mb), sign > 0 ? std::move(c) : -c);
    }
  }
  return out;
}

/// a^k with a^0 = unit (the empty monomial scaled by `unit`).
template <class Coeff>
BasicMultivector<Coeff> wedge_power(const BasicMultivector<Coeff>& a, int k, const Coeff& unit) {
  if (k < 0) {
    throw std::invalid_argument("negative wedge power");
  }
  if (k == 0) {
    return BasicMultivector<Coeff>::scalar(a.ambient_dim(), unit);
  }
  BasicMultivector<Coeff> out = a;
  for (int i = 1; i < k && !out.is_zero(); ++i) {
    out = wedge(out, a);
  }
  return out;
}

inline Multivector wedge_power(const Multivector& a, int k) {
  return wedge_power(a, k, Rational(1));
}

/// Dual generator labels x1..xn.
std::vector<std::string> default_dual_labels(int n);

/// Canonical text: terms in monomial order joined by " + " / " - ", coefficients
/// as `p/q` (omitted when 1), generators joined by '^', e.g. `x1^x2 - 1/2*x3^x4`.
/// An empty label span means x1..xn.
std::string render(const Multivector& a, std::span<const std::string> labels = {});

}  // namespace nilsym
