#include "nilsym/exterior.hpp"

#include <algorithm>

namespace nilsym {

std::vector<Monomial> monomials_of_degree(int n, int p) {
  std::vector<Monomial> out;
  if (p < 0 || p > n) {
    return out;
  }
  // Lexicographic enumeration of p-subsets of {1..n}.
  std::vector<int> idx(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    idx[static_cast<std::size_t>(i)] = i + 1;
  }
  while (true) {
    out.push_back(Monomial::from_indices(idx));
    int t = p - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - p + t + 1) {
      --t;
    }
    if (t < 0) {
      break;
    }
    ++idx[static_cast<std::size_t>(t)];
    for (int j = t + 1; j < p; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<std::string> default_dual_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    out.push_back("x" + std::to_string(i));
  }
  return out;
}

std::string render(const Multivector& a, std::span<const std::string> labels) {
  if (a.is_zero()) {
    return "0";
  }
  std::vector<std::string> fallback;
  if (labels.empty()) {
    fallback = default_dual_labels(a.ambient_dim());
    labels = fallback;
  }
  if (static_cast<int>(labels.size()) < a.ambient_dim()) {
    throw std::invalid_argument("too few labels for rendering");
  }
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const bool negative = c < 0;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (m.empty()) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += to_string(magnitude) + "*";
    }
    bool first_gen = true;
    for (int i : m.indices()) {
      if (!first_gen) {
        out += '^';
      }
      first_gen = false;
      out += labels[static_cast<std::size_t>(i - 1)];
    }
  }
  return out;
}

}  // namespace nilsym
