#pragma once

#include <optional>
#include <vector>

#include "littlewood/qseries.hpp"
#include "littlewood/xpoly.hpp"

namespace littlewood {

/// The infinite product (c q^w y; q^step)_infinity, a factor of a ratio of
/// q-shifted factorials in an auxiliary variable y.
struct PochhammerFactor {
  Rational c = 1;
  int q_weight = 0;
  int step = 1;
};

/// Coefficients f_k(q) of y^k in prod(numerators) / prod(denominators),
/// each f_k truncated at q-order `order`. A denominator factor of q-weight 0
/// turns into a geometric series in y, which needs `y_degree_cap`; without a
/// cap that case throws NonconvergentAtOrder.
std::vector<QSeries> pochhammer_ratio_series(const std::vector<PochhammerFactor>& numerators,
                                             const std::vector<PochhammerFactor>& denominators, int order,
                                             std::optional<int> y_degree_cap = std::nullopt);

/// The univariate series above with y -> x^{y_image} in a ring of nvars
/// variables (Laurent images allowed).
XPoly<QSeries> pochhammer_ratio_in(const std::vector<PochhammerFactor>& numerators,
                                   const std::vector<PochhammerFactor>& denominators, const Exponent& y_image,
                                   int nvars, int order, std::optional<int> x_degree_bound = std::nullopt);

/// Converts exact rational coefficients to series truncated at `order`.
/// 1/(1 - y) with y the monomial y_image, up to total x-degree `degree`.
XPoly<QSeries> geometric_series_in(const Exponent& y_image, int nvars, int order, int degree);

XPoly<QSeries> with_series_coefficients(const XPoly<Rational>& f, int order);

}  // namespace littlewood
