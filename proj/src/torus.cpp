#include "littlewood/torus.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "littlewood/qproducts.hpp"
#include "littlewood/schur.hpp"

namespace littlewood {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::I_qq: return "I_qq";
    case Family::I_1q2: return "I_1q2";
    case Family::K_halfquarters: return "K_halfquarters";
    case Family::K_1m1qmq: return "K_1m1qmq";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::I_qq, Family::I_1q2, Family::K_halfquarters, Family::K_1m1qmq}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::UnsupportedFamily, "unknown family '" + std::string(name) + "'");
}

bool is_koornwinder_family(Family f) { return f == Family::K_halfquarters || f == Family::K_1m1qmq; }

Family integral_family_of(Family f) {
  switch (f) {
    case Family::K_halfquarters: return Family::I_qq;
    case Family::K_1m1qmq: return Family::I_1q2;
    default: return f;
  }
}

Family koornwinder_family_of(Family f) {
  switch (f) {
    case Family::I_qq: return Family::K_halfquarters;
    case Family::I_1q2: return Family::K_1m1qmq;
    default: return f;
  }
}

namespace {

struct DensityCache {
  std::shared_mutex mutex;
  std::map<std::tuple<int, Family, int>, std::unique_ptr<XPoly<QSeries>>> entries;
};

DensityCache& density_cache() {
  static DensityCache c;
  return c;
}

XPoly<QSeries> build_density(int n, Family weight, int order) {
  // Per-variable factor as a ratio in y = x^{+-2}.
  std::vector<PochhammerFactor> num, den;
  if (weight == Family::I_qq) {
    num = {{1, 0, 2}};
    den = {{1, 1, 2}};
  } else {
    num = {{1, 1, 2}};
    den = {{1, 2, 2}};
  }
  XPoly<QSeries> out = XPoly<QSeries>::constant(n, QSeries::one(order));
  for (int i = 0; i < n; ++i) {
    Exponent up{}, down{};
    up[i] = 2;
    down[i] = -2;
    out *= pochhammer_ratio_in(num, den, up, n, order);
    out *= pochhammer_ratio_in(num, den, down, n, order);
  }
  XPoly<Rational> cross = XPoly<Rational>::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Exponent e{};
          e[i] = static_cast<std::int16_t>(si);
          e[j] = static_cast<std::int16_t>(sj);
          cross *= XPoly<Rational>::constant(n, 1) - XPoly<Rational>::monomial(n, e, 1);
        }
      }
    }
  }
  return out * with_series_coefficients(cross, order);
}

Rational torus_normalization(int n) {
  Integer denom = 1;
  for (int k = 1; k <= n; ++k) denom *= 2 * k;  // 2^n n!
  return Rational(1, 1) / Rational(denom);
}

}  // namespace

const XPoly<QSeries>& density(const DensitySpec& spec) {
  if (spec.n < 1 || spec.n > kMaxVars) throw Error(ErrorCode::TooManyVariables, "torus dimension out of range");
  const Family weight = integral_family_of(spec.family);
  const auto key = std::make_tuple(spec.n, weight, spec.order);
  auto& c = density_cache();
  {
    std::shared_lock lock(c.mutex);
    auto it = c.entries.find(key);
    if (it != c.entries.end()) return *it->second;
  }
  auto built = std::make_unique<XPoly<QSeries>>(build_density(spec.n, weight, spec.order));
  std::unique_lock lock(c.mutex);
  auto [it, inserted] = c.entries.try_emplace(key, std::move(built));
  return *it->second;
}

XPoly<Rational> double_variables(const XPoly<Rational>& f) {
  if (f.nvars() % 2 != 0) throw Error(ErrorCode::InverseSubstitution, "doubling needs an even variable count");
  const int n = f.nvars() / 2;
  std::vector<Exponent> images;
  for (int i = 0; i < n; ++i) {
    Exponent up{}, down{};
    up[i] = 1;
    down[i] = -1;
    images.push_back(up);
    images.push_back(down);
  }
  return f.substitute(images, n);
}

QSeries torus_integral(const XPoly<Rational>& f, const DensitySpec& spec) {
  if (f.nvars() != spec.n) throw Error(ErrorCode::TooManyVariables, "integrand lives in the wrong torus");
  QSeries ct = constant_term_of_product(f, density(spec));
  return (ct * torus_normalization(spec.n)).with_order(spec.order);
}

QSeries z_n_integral(const DensitySpec& spec) {
  return torus_integral(XPoly<Rational>::constant(spec.n, 1), spec);
}

TorusIntegralResult integral_I(const Partition& lambda, const DensitySpec& spec) {
  if (lambda.length() > 2 * spec.n) {
    throw Error(ErrorCode::LengthExceedsBound,
                "length of " + lambda.to_string() + " exceeds 2n = " + std::to_string(2 * spec.n));
  }
  const auto integrand = double_variables(schur(lambda, 2 * spec.n));
  QSeries value = torus_integral(integrand, spec) / z_n_integral(spec);
  return {value.with_order(spec.order), lambda, spec};
}

QSeries z_n_closed(const DensitySpec& spec) {
  if (is_koornwinder_family(spec.family)) {
    throw Error(ErrorCode::UnsupportedFamily, "Z_n is defined for the I families; use gustafson_norm");
  }
  // (a, b) = (q^alpha, q^beta).
  const int alpha = spec.family == Family::I_qq ? 1 : 0;
  const int beta = spec.family == Family::I_qq ? 1 : 2;
  const int d = spec.order;
  const int n = spec.n;
  QSeries num = QSeries::one(d), den = QSeries::one(d);
  for (int i = 1; i <= n; ++i) {
    num *= qpochhammer(1, alpha + beta + n + i - 2, 1, d);
    den *= qpochhammer(1, i, 1, d);
    den *= qpochhammer(-1, alpha + i - 1, 1, d);
    den *= qpochhammer(-1, beta + i - 1, 1, d);
    den *= qpochhammer(1, alpha + beta + 2 * i - 2, 2, d).pow(2);
  }
  return num / den;
}

TSpec tspec_of(Family f) {
  switch (integral_family_of(f)) {
    case Family::I_qq: return {{{1, 1}, {-1, 1}, {1, 1}, {-1, 1}}};
    default: return {{{1, 0}, {-1, 0}, {1, 2}, {-1, 2}}};
  }
}

namespace {

HalfPower times(const HalfPower& a, const HalfPower& b) { return {a.sign * b.sign, a.half_exponent + b.half_exponent}; }

// (h q^shift; q)_inf for a parameter product h that must be an integer power.
QSeries pochhammer_of(const HalfPower& h, int shift, int order) {
  if (h.half_exponent % 2 != 0) {
    throw Error(ErrorCode::UnsupportedFamily, "parameter product is a half-integer power of q");
  }
  return qpochhammer(h.sign, h.half_exponent / 2 + shift, 1, order);
}

}  // namespace

QSeries gustafson_norm(int n, const TSpec& t, int order) {
  const HalfPower all = times(times(t[0], t[1]), times(t[2], t[3]));
  QSeries num = QSeries::one(order), den = QSeries::one(order);
  for (int i = 1; i <= n; ++i) {
    // t = q throughout.
    num *= qpochhammer(1, 1, 1, order);
    num *= pochhammer_of(all, n + i - 2, order);
    den *= qpochhammer(1, 1, 1, order);
    den *= qpochhammer(1, i, 1, order);
    for (int r = 0; r < 4; ++r) {
      for (int s = r + 1; s < 4; ++s) den *= pochhammer_of(times(t[r], t[s]), i - 1, order);
    }
  }
  return num / den;
}

QSeries inner_product(const XPoly<Rational>& f, const XPoly<Rational>& g, const DensitySpec& spec) {
  return torus_integral(f * g.inverted(), spec);
}

}  // namespace littlewood
