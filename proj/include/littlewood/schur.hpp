#pragma once

#include <map>

#include "littlewood/partition.hpp"
#include "littlewood/xpoly.hpp"

namespace littlewood {

/// s_lambda(x_1, ..., x_n) as an explicit polynomial; zero when l(lambda) > n.
///
/// Built from semistandard tableaux through the branching rule
///   s_lambda(x_1..x_n) = sum_{mu < lambda horizontal strip} s_mu(x_1..x_{n-1}) x_n^{|lambda|-|mu|},
/// i.e. a sum over Gelfand-Tsetlin patterns. Results are memoized per
/// (lambda, n); the cache is safe for concurrent use.
const XPoly<Rational>& schur(const Partition& lambda, int n);

/// Drops every cached Schur polynomial.
void clear_schur_cache();

template <class Coef>
struct SchurExpansion {
  int nvars = 0;
  std::map<Partition, Coef> coeffs;

  Coef coeff(const Partition& lambda) const {
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? Coef() : it->second;
  }
};

/// Inverse of the Schur basis: repeatedly removes the lexicographically
/// largest monomial x^lambda with c * s_lambda. Lexicographic order refines
/// dominance within each degree, so every step is triangular.
template <class Coef>
SchurExpansion<Coef> schur_expand(const XPoly<Coef>& f) {
  if (!f.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "input is not symmetric in x_1..x_n");
  const int n = f.nvars();
  SchurExpansion<Coef> out{n, {}};
  XPoly<Coef> rest = f;
  std::size_t guard = 0;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().rbegin();
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
      if (lead[i] < 0 || (i > 0 && lead[i] > lead[i - 1])) {
        throw Error(ErrorCode::NonterminatingRemainder,
                    "leading monomial " + monomial_to_string(lead, n) + " is not a partition");
      }
      parts.push_back(lead[i]);
    }
    Partition lambda(parts);
    const Coef coefficient = c;
    const auto& s = schur(lambda, n);
    for (const auto& [e, k] : s.terms()) rest.add_term(e, -(coefficient * k));
    out.coeffs.emplace(std::move(lambda), coefficient);
    if (++guard > 1'000'000) throw Error(ErrorCode::NonterminatingRemainder, "Schur expansion did not terminate");
  }
  return out;
}

template <class Coef>
XPoly<Coef> schur_reconstruct(const SchurExpansion<Coef>& e, std::optional<int> bound = std::nullopt) {
  XPoly<Coef> out(e.nvars, bound);
  for (const auto& [lambda, c] : e.coeffs) {
    for (const auto& [m, k] : schur(lambda, e.nvars).terms()) out.add_term(m, c * k);
  }
  return out;
}

}  // namespace littlewood
