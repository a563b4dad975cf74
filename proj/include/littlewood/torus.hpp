#pragma once

#include <array>
#include <string>
#include <string_view>

#include "littlewood/partition.hpp"
#include "littlewood/qseries.hpp"
#include "littlewood/xpoly.hpp"

namespace littlewood {

/// The four supported weights on the n-torus. All of them are stored after
/// cancelling the half-integer powers of q, so that only integer powers occur:
///   I_qq, K_halfquarters : (x^{+-2}; q^2)_inf / (q x^{+-2}; q^2)_inf
///   I_1q2, K_1m1qmq     : (q x^{+-2}; q^2)_inf / (q^2 x^{+-2}; q^2)_inf
/// times prod_{i<j} (1 - x_i^{+-} x_j^{+-}) in every case.
/// I_qq and I_1q2 are the (a,b) = (q,q) and (1,q^2) integrals; the K families
/// are the Koornwinder weights at q = t with (t_0..t_3) equal to
/// (q^{1/2}, -q^{1/2}, q^{1/2}, -q^{1/2}) and (1, -1, q, -q).
enum class Family { I_qq, I_1q2, K_halfquarters, K_1m1qmq };

std::string_view to_string(Family f);
Family parse_family(std::string_view name);
/// The I family sharing the weight of a K family, and vice versa.
Family integral_family_of(Family f);
Family koornwinder_family_of(Family f);
bool is_koornwinder_family(Family f);

struct DensitySpec {
  int n = 1;
  Family family = Family::I_qq;
  int order = 20;
};

/// Weight as a Laurent polynomial in x_1..x_n with series coefficients,
/// exact to q-order D. Memoized per (weight, n, D).
const XPoly<QSeries>& density(const DensitySpec& spec);

/// x_1..x_{2n} -> x_1, x_1^{-1}, ..., x_n, x_n^{-1}.
XPoly<Rational> double_variables(const XPoly<Rational>& f);

/// (1/(2^n n!)) CT[f(x) density(x)].
QSeries torus_integral(const XPoly<Rational>& f, const DensitySpec& spec);

struct TorusIntegralResult {
  QSeries value;
  Partition lambda;
  DensitySpec spec;
};

/// I_lambda^{(n)} = (1/Z_n) int s_lambda(x^{+-}) density dT; requires l(lambda) <= 2n.
TorusIntegralResult integral_I(const Partition& lambda, const DensitySpec& spec);

/// Z_n(a,b;q) by integration (lambda = 0) and by its product formula.
QSeries z_n_integral(const DensitySpec& spec);
QSeries z_n_closed(const DensitySpec& spec);

/// A Koornwinder parameter sign * q^{half_exponent / 2}.
struct HalfPower {
  int sign = 1;
  int half_exponent = 0;
};
using TSpec = std::array<HalfPower, 4>;
TSpec tspec_of(Family f);

/// <1,1> at q = t by Gustafson's product formula.
QSeries gustafson_norm(int n, const TSpec& t, int order);

/// <f, g> = (1/(2^n n!)) CT[f(x) g(x^{-1}) density(x)].
QSeries inner_product(const XPoly<Rational>& f, const XPoly<Rational>& g, const DensitySpec& spec);

}  // namespace littlewood
