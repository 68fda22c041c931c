#include "nilsym/mpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace nilsym {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw std::invalid_argument("variable index out of range");
  }
  Exponents e(nvars, 0);
  e[index] = 1;
  MPoly p(nvars);
  p.add_term(e, Rational(1));
  return p;
}

int MPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  }
  return best;
}

int MPoly::degree_in(std::size_t var) const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    best = std::max(best, static_cast<int>(e.at(var)));
  }
  return best;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) {
    throw std::invalid_argument("exponent vector length does not match nvars");
  }
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

Rational MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

Rational MPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) {
    throw std::invalid_argument("evaluation point has length " + std::to_string(point.size()) +
                                ", expected " + std::to_string(nvars_));
  }
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < nvars_ && !t.is_zero(); ++v) {
      for (std::uint32_t k = 0; k < e[v]; ++k) {
        t *= point[v];
      }
    }
    sum += t;
  }
  return sum;
}

MPoly MPoly::substitute(std::size_t var, const Rational& value) const {
  if (var >= nvars_) {
    throw std::invalid_argument("variable index out of range");
  }
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::uint32_t k = 0; k < e[var]; ++k) {
      t *= value;
    }
    Exponents reduced = e;
    reduced[var] = 0;
    out.add_term(reduced, t);
  }
  return out;
}

void MPoly::check_nvars(const MPoly& other) const {
  if (other.nvars_ != nvars_) {
    throw std::invalid_argument("polynomial variable count mismatch: " + std::to_string(nvars_) +
                                " vs " + std::to_string(other.nvars_));
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_nvars(other);
  for (const auto& [e, c] : other.terms_) {
    add_term(e, c);
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_nvars(other);
  for (const auto& [e, c] : other.terms_) {
    add_term(e, -c);
  }
  return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) {
    c *= s;
  }
  return *this;
}

MPoly operator-(const MPoly& a) {
  MPoly out = a;
  for (auto& [e, c] : out.terms_) {
    c = -c;
  }
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_nvars(b);
  MPoly out(a.nvars_);
  MPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < a.nvars_; ++v) {
        e[v] = ea[v] + eb[v];
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MPoly::to_string(std::string_view var_prefix) const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    std::string mono;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) {
        continue;
      }
      if (!mono.empty()) {
        mono += '*';
      }
      mono += std::string(var_prefix) + std::to_string(v + 1);
      if (e[v] > 1) {
        mono += "^" + std::to_string(e[v]);
      }
    }
    if (mono.empty()) {
      out += nilsym::to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += nilsym::to_string(magnitude) + "*" + mono;
    }
  }
  return out;
}

std::vector<Rational> find_nonvanishing_point(const MPoly& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("identically zero polynomial has no nonvanishing point");
  }
  const int d = p.total_degree();
  std::vector<Rational> point;
  point.reserve(p.nvars());
  MPoly rest = p;
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    bool fixed = false;
    for (int value = 0; value <= d; ++value) {
      MPoly restricted = rest.substitute(v, Rational(value));
      if (!restricted.is_zero()) {
        point.emplace_back(value);
        rest = std::move(restricted);
        fixed = true;
        break;
      }
    }
    if (!fixed) {
      throw std::logic_error("grid search exhausted on a nonzero polynomial");
    }
  }
  return point;
}

}  // namespace nilsym
