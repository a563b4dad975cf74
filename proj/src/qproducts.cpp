#include "littlewood/qproducts.hpp"

#include "littlewood/error.hpp"

namespace littlewood {

namespace {

void trim_tail(std::vector<QSeries>& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

}  // namespace

std::vector<QSeries> pochhammer_ratio_series(const std::vector<PochhammerFactor>& numerators,
                                             const std::vector<PochhammerFactor>& denominators, int order,
                                             std::optional<int> y_degree_cap) {
  // Without weight-0 denominators, y^k is O(q^{order+1}) once k exceeds the
  // order plus the number of weight-0 numerator factors.
  int weightless_numerators = 0;
  for (const auto& f : numerators) {
    if (f.step <= 0) throw Error(ErrorCode::NonconvergentAtOrder, "Pochhammer step must be positive");
    if (f.q_weight == 0 && sgn(f.c) != 0) ++weightless_numerators;
  }
  bool weightless_denominator = false;
  for (const auto& f : denominators) {
    if (f.step <= 0) throw Error(ErrorCode::NonconvergentAtOrder, "Pochhammer step must be positive");
    if (f.q_weight == 0 && sgn(f.c) != 0) weightless_denominator = true;
  }
  if (weightless_denominator && !y_degree_cap) {
    throw Error(ErrorCode::NonconvergentAtOrder, "weight-0 denominator needs an x-degree bound");
  }
  int limit = weightless_denominator ? *y_degree_cap : order + weightless_numerators;
  if (y_degree_cap) limit = std::min(limit, *y_degree_cap);
  const auto size = static_cast<std::size_t>(limit) + 1;

  std::vector<QSeries> p(1, QSeries::one(order));
  for (const auto& f : numerators) {
    if (sgn(f.c) == 0) continue;
    for (int w = f.q_weight; w <= order; w += f.step) {
      // p *= (1 - c q^w y)
      const std::size_t grown = std::min(p.size() + 1, size);
      p.resize(grown, QSeries::zero(order));
      for (std::size_t k = grown; k-- > 1;) {
        QSeries t = p[k - 1].shifted(w);
        t *= f.c;
        p[k] -= t;
      }
      trim_tail(p);
    }
  }
  for (const auto& f : denominators) {
    if (sgn(f.c) == 0) continue;
    for (int w = f.q_weight; w <= order; w += f.step) {
      // p /= (1 - c q^w y): p_k += c q^w p_{k-1}, ascending in k.
      p.resize(size, QSeries::zero(order));
      for (std::size_t k = 1; k < size; ++k) {
        if (p[k - 1].is_zero()) continue;
        QSeries t = p[k - 1].shifted(w);
        t *= f.c;
        p[k] += t;
      }
      trim_tail(p);
    }
  }
  return p;
}

XPoly<QSeries> pochhammer_ratio_in(const std::vector<PochhammerFactor>& numerators,
                                   const std::vector<PochhammerFactor>& denominators, const Exponent& y_image,
                                   int nvars, int order, std::optional<int> x_degree_bound) {
  std::optional<int> cap;
  const int step_degree = total_degree(y_image);
  if (x_degree_bound && step_degree > 0) cap = *x_degree_bound / step_degree;
  const auto coeffs = pochhammer_ratio_series(numerators, denominators, order, cap);
  XPoly<QSeries> out(nvars, x_degree_bound);
  Exponent e{};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out.add_term(e, coeffs[k]);
    e = e + y_image;
  }
  return out;
}

XPoly<QSeries> geometric_series_in(const Exponent& y_image, int nvars, int order, int degree) {
  XPoly<QSeries> out(nvars, degree);
  const int step = total_degree(y_image);
  if (step <= 0) throw Error(ErrorCode::NonconvergentAtOrder, "geometric series needs a monomial of positive degree");
  Exponent e{};
  for (int k = 0; k * step <= degree; ++k) {
    out.add_term(e, QSeries::one(order));
    e = e + y_image;
  }
  return out;
}

XPoly<QSeries> with_series_coefficients(const XPoly<Rational>& f, int order) {
  return f.map_coeffs([order](const Rational& c) { return QSeries(LaurentPoly(c), order); });
}

}  // namespace littlewood
