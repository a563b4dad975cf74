#include <doctest.h>

#include "littlewood/error.hpp"
#include "littlewood/pfaffian.hpp"
#include "littlewood/torus.hpp"

using namespace littlewood;

namespace {

constexpr Family kAll[] = {Family::I_qq, Family::I_1q2, Family::K_halfquarters, Family::K_1m1qmq};

XPoly<Rational> x_power(int n, int i, int power) {
  Exponent e{};
  e[i] = static_cast<std::int16_t>(power);
  return XPoly<Rational>::monomial(n, e, 1);
}

// f(x) -> f(x^{-1}) or f(-x) on the coefficient level
XPoly<QSeries> transform(const XPoly<QSeries>& f, bool invert, bool negate) {
  XPoly<QSeries> out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    int degree = 0;
    for (int i = 0; i < f.nvars(); ++i) {
      if (invert) g[i] = static_cast<std::int16_t>(-g[i]);
      degree += e[i];
    }
    out.add_term(g, negate && degree % 2 != 0 ? -c : c);
  }
  return out;
}

}  // namespace

TEST_SUITE("torus") {
  TEST_CASE("families parse and pair up") {
    for (Family f : kAll) CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("I_nope"), Error);
    CHECK(integral_family_of(Family::K_halfquarters) == Family::I_qq);
    CHECK(integral_family_of(Family::K_1m1qmq) == Family::I_1q2);
    CHECK(koornwinder_family_of(Family::I_qq) == Family::K_halfquarters);
    CHECK(is_koornwinder_family(Family::K_1m1qmq));
    CHECK_FALSE(is_koornwinder_family(Family::I_1q2));
  }

  TEST_CASE("density at q-order zero") {
    // (1 - x^2)(1 - x^{-2}) = 2 - x^2 - x^{-2}
    const auto& w = density({1, Family::I_qq, 0});
    CHECK(w.size() == 3);
    CHECK(w.constant_term() == QSeries(Rational(2), 0));
    CHECK(w.coeff(make_exponent({2})) == QSeries(Rational(-1), 0));
    const auto& v = density({1, Family::I_1q2, 0});
    CHECK(v.size() == 1);
    CHECK(v.constant_term() == QSeries(Rational(1), 0));
  }

  TEST_CASE("density is invariant under x -> 1/x and x -> -x (property)") {
    for (Family f : kAll) {
      for (int n = 1; n <= 2; ++n) {
        const auto& w = density({n, f, 6});
        CHECK(transform(w, true, false) == w);
        CHECK(transform(w, false, true) == w);
      }
    }
  }

  TEST_CASE("normalization and norms") {
    for (int n = 1; n <= 2; ++n) {
      for (Family f : {Family::I_qq, Family::I_1q2}) {
        const DensitySpec spec{n, f, 10};
        CHECK(z_n_integral(spec) == z_n_closed(spec));
      }
      for (Family f : {Family::K_halfquarters, Family::K_1m1qmq}) {
        const DensitySpec spec{n, f, 10};
        CHECK(torus_integral(XPoly<Rational>::constant(n, 1), spec) == gustafson_norm(n, tspec_of(f), 10));
      }
    }
    CHECK_THROWS_AS(z_n_closed({1, Family::K_1m1qmq, 4}), Error);
  }

  TEST_CASE("integral examples") {
    const DensitySpec spec{1, Family::I_qq, 8};
    CHECK(integral_I(Partition(), spec).value == QSeries::one(8));
    CHECK(integral_I(Partition({1}), spec).value.is_zero());
    CHECK(integral_I(Partition({1, 1}), spec).value == QSeries::one(8));
    CHECK(integral_I(Partition({2}), spec).value == closed_form_int1(Partition({2}), 1).to_qseries(8));
    CHECK_THROWS_AS(integral_I(Partition({1, 1, 1}), spec), Error);
  }

  TEST_CASE("integrals vanish or equal the closed forms") {
    EnumerationBounds b;
    b.max_size = 6;
    for (int n = 1; n <= 2; ++n) {
      b.max_length = 2 * n;
      for (const auto& l : enumerate_partitions(b)) {
        const auto one = integral_I(l, {n, Family::I_qq, 8}).value;
        const auto two = integral_I(l, {n, Family::I_1q2, 8}).value;
        if (!has_empty_two_core(l)) {
          CHECK(one.is_zero());
          CHECK(two.is_zero());
          continue;
        }
        CHECK(one == closed_form_int1(l, n).to_qseries(8));
        CHECK(two == closed_form_int2(l, n).to_qseries(8));
      }
    }
  }

  TEST_CASE("inner product") {
    const DensitySpec spec{1, Family::K_halfquarters, 8};
    const auto m1 = x_power(1, 0, 1) + x_power(1, 0, -1);
    const auto one = XPoly<Rational>::constant(1, 1);
    CHECK(inner_product(m1, one, spec).is_zero());
    CHECK(inner_product(one, one, spec) == gustafson_norm(1, tspec_of(Family::K_halfquarters), 8));
    // symmetric in its arguments for symmetric Laurent polynomials
    const auto m2 = x_power(1, 0, 2) + x_power(1, 0, -2);
    CHECK(inner_product(m2, one, spec) == inner_product(one, m2, spec));
  }

  TEST_CASE("doubling variables") {
    XPoly<Rational> f(2);
    f.add_term(make_exponent({1, 0}), 1);
    f.add_term(make_exponent({0, 1}), 1);
    const auto g = double_variables(f);
    CHECK(g.nvars() == 1);
    CHECK(g == x_power(1, 0, 1) + x_power(1, 0, -1));
    CHECK_THROWS_AS(double_variables(XPoly<Rational>(3)), Error);
  }
}
