#include <gmpxx.h>

#include "littlewood/qproducts.hpp"
#include "littlewood/rational_function.hpp"
#include "littlewood/verify.hpp"

namespace littlewood {

namespace {

QSeries q_ratio(const LaurentPoly& num, const LaurentPoly& den, int D) {
  return QSeries(num, D) / QSeries(den, D);
}

// q^b H^o / H^e
QSeries hook_ratio_series(const Partition& lambda, long b, int D) {
  return q_ratio(hook_poly(lambda, ParityVariant::Odd).shifted(static_cast<int>(b)),
                 hook_poly(lambda, ParityVariant::Even), D);
}

// C^e(q^z) H^o / (C^o(q^z) H^e), exact.
RationalFunction content_hook_ratio(const Partition& lambda, int z) {
  return RationalFunction(content_poly(lambda, z, ParityVariant::Even) * hook_poly(lambda, ParityVariant::Odd),
                          content_poly(lambda, z, ParityVariant::Odd) * hook_poly(lambda, ParityVariant::Even));
}

Rational odd_over_even_hooks(const Partition& lambda) {
  Rational r = 1;
  for (int h : hook_multisets(lambda).all) {
    if (h % 2) {
      r *= h;
    } else {
      r /= h;
    }
  }
  return r;
}

bool is_bounded_identity(IdentityId id) { return id == IdentityId::B1 || id == IdentityId::B2; }

Exponent unit(int i, int power = 1) {
  Exponent e{};
  e[i] = static_cast<std::int16_t>(power);
  return e;
}

// (1 - y)^{-1/2} = sum_k C(2k, k) / 4^k y^k with y = x_i^2.
XPoly<QSeries> inverse_sqrt_factor(int i, int n, int d) {
  XPoly<QSeries> out(n, d);
  Rational c = 1;
  for (int k = 0; 2 * k <= d; ++k) {
    out.add_term(unit(i, 2 * k), QSeries(c));
    c *= Rational(2 * k + 1, 2 * k + 2);  // C(2k+2,k+1)/4^{k+1} over C(2k,k)/4^k
  }
  return out;
}

}  // namespace

std::optional<QSeries> lhs_coefficient(IdentityId id, const Partition& lambda, int D, int m) {
  switch (id) {
    case IdentityId::L1:
      if (!has_empty_two_core(lambda)) return std::nullopt;
      return hook_ratio_series(lambda, b_statistic(lambda), D);
    case IdentityId::L2:
      if (!has_empty_two_core(lambda)) return std::nullopt;
      return hook_ratio_series(lambda, b_statistic(conjugate(lambda)), D);
    case IdentityId::COR:
      if (!has_empty_two_core(lambda)) return std::nullopt;
      return QSeries(odd_over_even_hooks(lambda));
    case IdentityId::CLASSICAL_1:
      return QSeries(1);
    case IdentityId::CLASSICAL_2:
      if (!lambda.is_even()) return std::nullopt;
      return QSeries(1);
    case IdentityId::CLASSICAL_3:
      if (!conjugate(lambda).is_even()) return std::nullopt;
      return QSeries(1);
    case IdentityId::KAWANAKA: {
      LaurentPoly num(1), den(1);
      for (int h : hook_multisets(lambda).all) {
        num *= LaurentPoly::one_minus(-1, h);
        den *= LaurentPoly::one_minus(1, h);
      }
      return q_ratio(num, den, D);
    }
    case IdentityId::B1:
    case IdentityId::B2: {
      if (!has_empty_two_core(lambda) || lambda.largest() > 2 * m) return std::nullopt;
      const long b = b_statistic(lambda);
      const long bc = b_statistic(conjugate(lambda));
      RationalFunction c = content_hook_ratio(lambda, -2 * m);
      if (id == IdentityId::B1) {
        c *= LaurentPoly::q_power(static_cast<int>(bc));
      } else {
        c *= RationalFunction(LaurentPoly::q_power(static_cast<int>(2 * bc - b)) +
                                  LaurentPoly::q_power(static_cast<int>(m + b)),
                              LaurentPoly(1) + LaurentPoly::q_power(m));
      }
      return c.to_qseries(D);
    }
    default:
      throw Error(ErrorCode::UnsupportedFamily, std::string(to_string(id)) + " has no Schur-expansion sum side");
  }
}

SchurExpansion<QSeries> lhs_sum(IdentityId id, int n, int d, int D, int m) {
  EnumerationBounds bounds;
  bounds.max_length = n;
  if (is_bounded_identity(id)) {
    bounds.max_part = 2 * m;
    bounds.max_size = 2 * m * n;
  } else {
    bounds.max_size = d;
  }
  SchurExpansion<QSeries> out{n, {}};
  for (const auto& lambda : enumerate_partitions(bounds)) {
    if (auto c = lhs_coefficient(id, lambda, D, m); c && !c->is_zero()) out.coeffs.emplace(lambda, std::move(*c));
  }
  return out;
}

XPoly<QSeries> rhs_product(IdentityId id, int n, int d, int D) {
  XPoly<QSeries> out = XPoly<QSeries>::constant(n, QSeries(1), d);
  for (int i = 0; i < n; ++i) {
    switch (id) {
      case IdentityId::L1:
        out *= pochhammer_ratio_in({{1, 1, 2}}, {{1, 0, 2}}, unit(i, 2), n, D, d);
        break;
      case IdentityId::L2:
        out *= pochhammer_ratio_in({{1, 2, 2}}, {{1, 1, 2}}, unit(i, 2), n, D, d);
        break;
      case IdentityId::KAWANAKA:
        out *= pochhammer_ratio_in({{-1, 1, 1}}, {{1, 0, 1}}, unit(i), n, D, d);
        break;
      case IdentityId::COR:
        out *= inverse_sqrt_factor(i, n, d);
        break;
      case IdentityId::CLASSICAL_1:
        out *= geometric_series_in(unit(i), n, QSeries::kExact, d);
        break;
      case IdentityId::CLASSICAL_2:
        out *= geometric_series_in(unit(i, 2), n, QSeries::kExact, d);
        break;
      case IdentityId::CLASSICAL_3:
        break;
      default:
        throw Error(ErrorCode::UnsupportedFamily, std::string(to_string(id)) + " has no product side");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out *= geometric_series_in(unit(i) + unit(j), n, QSeries::kExact, d);
    }
  }
  return out;
}

std::optional<Partition> q_zero_degeneration_failure(IdentityId id, int max_size) {
  if (id != IdentityId::L1 && id != IdentityId::L2) {
    throw Error(ErrorCode::UnsupportedFamily, "q = 0 degeneration is defined for L1 and L2");
  }
  EnumerationBounds bounds;
  bounds.max_size = max_size;
  for (const auto& lambda : enumerate_partitions(bounds)) {
    const auto c = lhs_coefficient(id, lambda, 0);
    const Rational at_zero = c ? c->coeff(0) : Rational(0);
    const bool indicator = id == IdentityId::L1 ? lambda.is_even() : conjugate(lambda).is_even();
    if (at_zero != Rational(indicator ? 1 : 0)) return lambda;
  }
  return std::nullopt;
}

bool conjugation_identity_holds(const Partition& lambda, int m) {
  const Partition conj = conjugate(lambda);
  const RationalFunction left =
      content_hook_ratio(conj, 2 * m) * LaurentPoly::q_power(static_cast<int>(b_statistic(lambda)));
  const RationalFunction right =
      content_hook_ratio(lambda, -2 * m) * LaurentPoly::q_power(static_cast<int>(b_statistic(conj)));
  return left == right;
}

}  // namespace littlewood
