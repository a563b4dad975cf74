#pragma once

// Independent reference computations shared by the unit tests and the acceptance run.

#include <stdexcept>
#include <vector>

#include "littlewood/partition.hpp"
#include "littlewood/schur.hpp"

namespace oracle {

using namespace littlewood;
using Poly = XPoly<Rational>;

inline Poly var(int n, int i, int power = 1) {
  Exponent e{};
  e[i] = static_cast<std::int16_t>(power);
  return Poly::monomial(n, e, 1);
}

// Determinant by Laplace expansion along the first row; n <= 4 here.
inline Poly det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t size = m.size();
  if (size == 1) return m[0][0];
  Poly out(m[0][0].nvars());
  for (std::size_t c = 0; c < size; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < size; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Poly term = m[0][c] * det(minor);
    if (c % 2) term = -term;
    out += term;
  }
  return out;
}

// Exact division of a polynomial by (x_i - x_j) via synthetic division in x_i.
inline Poly divide_by_difference(const Poly& f, int i, int j) {
  const int n = f.nvars();
  Poly rest = f, quotient(n);
  while (!rest.is_zero()) {
    // the term with the largest x_i exponent, lexicographically last after moving x_i first
    auto lead = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      if (it->first[i] > lead->first[i] || (it->first[i] == lead->first[i] && it->first > lead->first)) lead = it;
    }
    Exponent e = lead->first;
    const Rational c = lead->second;
    if (e[i] <= 0) throw std::logic_error("not divisible by x_i - x_j");
    e[i] = static_cast<std::int16_t>(e[i] - 1);
    const Poly step = Poly::monomial(n, e, c);
    quotient += step;
    rest -= step * (var(n, i) - var(n, j));
  }
  return quotient;
}

// s_lambda = det(x_i^{lambda_j + n - j}) / prod_{i<j} (x_i - x_j)
inline Poly bialternant(const Partition& lambda, int n) {
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r)].push_back(var(n, r, lambda.part(c + 1) + n - c - 1));
  }
  Poly a = det(m);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) a = divide_by_difference(a, i, j);
  }
  return a;
}

}  // namespace oracle
