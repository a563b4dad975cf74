#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "littlewood/error.hpp"
#include "littlewood/koornwinder.hpp"
#include "littlewood/rational_function.hpp"

using namespace littlewood;

namespace {

using Poly = XPoly<Rational>;

Poly monomial(std::initializer_list<int> e) {
  return Poly::monomial(static_cast<int>(e.size()), make_exponent(e), 1);
}

// Rational polynomial with series coefficients, all exact.
XPoly<QSeries> lift(const Poly& f, int order) {
  XPoly<QSeries> out(f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, QSeries(c, order));
  return out;
}

std::vector<Partition> inside_square(int side) {
  EnumerationBounds b;
  b.max_size = 2 * side;
  b.max_part = side;
  b.max_length = 2;
  return enumerate_partitions(b);
}

QSeries inner(const KoornwinderPoly& a, const KoornwinderPoly& b, const DensitySpec& spec) {
  // <f, g> with series coefficients, expanded bilinearly over the orbit sums
  QSeries total = QSeries::zero(spec.order);
  for (const auto& [mu, c] : a.coeffs) {
    for (const auto& [nu, d] : b.coeffs) {
      total += c * d * inner_product(bc_orbit_sum(mu, a.n), bc_orbit_sum(nu, b.n), spec);
    }
  }
  return total;
}

constexpr Family kFamilies[] = {Family::K_halfquarters, Family::K_1m1qmq};

}  // namespace

TEST_SUITE("koornwinder") {
  TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition({1, 1}), Partition({2})));
    CHECK_FALSE(dominance_leq(Partition({2}), Partition({1, 1})));
    CHECK(dominance_leq(Partition(), Partition({1})));
    CHECK(dominance_leq(Partition({2}), Partition({2, 1})));
    CHECK_FALSE(dominance_leq(Partition({3}), Partition({2, 2})));
    CHECK(dominance_leq(Partition({2, 2}), Partition({2, 2})));
  }

  TEST_CASE("orbit sums") {
    CHECK(bc_orbit_sum(Partition({1}), 1) == monomial({1}) + monomial({-1}));
    CHECK(bc_orbit_sum(Partition({1, 1}), 2) ==
          monomial({1, 1}) + monomial({1, -1}) + monomial({-1, 1}) + monomial({-1, -1}));
    CHECK(bc_orbit_sum(Partition(), 3) == Poly::constant(3, 1));
    CHECK(bc_orbit_sum(Partition({2, 1}), 2).size() == 8);
    CHECK(bc_orbit_sum(Partition({1}), 2).size() == 4);
  }

  TEST_CASE("dominated basis") {
    const auto basis = dominated_basis(Partition({2}), 2);
    CHECK(basis == std::vector<Partition>{Partition(), Partition({1}), Partition({1, 1})});
    CHECK(dominated_basis(Partition(), 2).empty());
    CHECK(dominated_basis(Partition({1, 1}), 1) == std::vector<Partition>{Partition(), Partition({1})});
  }

  TEST_CASE("lowest polynomials") {
    for (Family f : kFamilies) {
      const auto k0 = koornwinder_poly(Partition(), 1, f, 8);
      CHECK(k0.expand() == lift(Poly::constant(1, 1), 8));
      const auto k1 = koornwinder_poly(Partition({1}), 1, f, 8);
      CHECK(k1.expand() == lift(monomial({1}) + monomial({-1}), 8));
    }
    CHECK_THROWS_AS(koornwinder_poly(Partition({1, 1, 1}), 2, Family::K_halfquarters, 4), Error);
  }

  TEST_CASE("orthogonality for n = 2 (property)") {
    for (Family f : kFamilies) {
      const DensitySpec spec{2, f, 6};
      const auto all = inside_square(2);
      std::vector<KoornwinderPoly> ks;
      for (const auto& l : all) ks.push_back(koornwinder_poly(l, 2, f, 6, ExecPolicy::Serial));
      for (std::size_t i = 0; i < ks.size(); ++i) {
        CHECK(ks[i].coeffs.at(ks[i].lambda) == QSeries::one(6));
        for (const auto& [mu, c] : ks[i].coeffs) CHECK(dominance_leq(mu, ks[i].lambda));
        for (std::size_t j = i + 1; j < ks.size(); ++j) CHECK(inner(ks[i], ks[j], spec).is_zero());
      }
    }
  }

  TEST_CASE("serial and parallel Gram-Schmidt agree") {
    for (Family f : kFamilies) {
      const auto a = koornwinder_poly(Partition({2, 1}), 2, f, 8, ExecPolicy::Serial);
      const auto b = koornwinder_poly(Partition({2, 1}), 2, f, 8, ExecPolicy::OpenMP);
      CHECK(a.coeffs == b.coeffs);
    }
  }

  TEST_CASE("bounded right-hand sides") {
    const auto zero = bounded_rhs(0, 2, Family::K_halfquarters, 6);
    CHECK(zero.coeffs.size() == 1);
    CHECK(zero.coeff(Partition()) == QSeries::one(6));

    const auto one = bounded_rhs(1, 1, Family::K_halfquarters, 6);
    CHECK(one.coeffs.size() == 2);
    CHECK(one.coeff(Partition()) == QSeries::one(6));
    CHECK(one.coeff(Partition({2})) == QSeries::one(6));

    const auto two = bounded_rhs(1, 2, Family::K_halfquarters, 10);
    const RationalFunction expected(LaurentPoly::q_power(1) * LaurentPoly::one_minus(1, 1), LaurentPoly::one_minus(1, 3));
    CHECK(two.coeff(Partition({1, 1})) == expected.to_qseries(10));
    CHECK(two.coeff(Partition()) == QSeries::one(10));
    CHECK(two.coeff(Partition({2})) == QSeries::one(10));
    CHECK(two.coeff(Partition({2, 2})) == QSeries::one(10));
  }

  TEST_CASE("limit examples") {
    const auto s = limit_stabilization(1, Family::K_halfquarters, 2, 4, 6);
    CHECK(s.matches_product);
    CHECK(s.series.coeff(make_exponent({2})) == QSeries(LaurentPoly(1) - LaurentPoly::q_power(1) + LaurentPoly::q_power(2) -
                                                            LaurentPoly::q_power(3) + LaurentPoly::q_power(4),
                                                        4));
    for (Family f : kFamilies) {
      const auto cross = limit_stabilization(2, f, 2, 4, 8);
      CHECK(cross.matches_product);
      CHECK(cross.series.coeff(make_exponent({1, 1})) == QSeries::one(4));
      const auto flat = limit_stabilization(1, f, 0, 4, 3);
      CHECK(flat.first_stable_m == 0);
      CHECK(flat.series.constant_term() == QSeries::one(4));
    }
    CHECK_THROWS_AS(limit_stabilization(1, Family::K_1m1qmq, 4, 8, 2), Error);
  }

  TEST_CASE("limit matches the product for small degrees") {
    for (Family f : kFamilies) {
      for (int d = 0; d <= 4; ++d) {
        const auto s = limit_stabilization(1, f, d, 6, 6 + d + 2);
        CHECK(s.matches_product);
      }
    }
  }

  TEST_CASE("cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "littlewood_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto k = koornwinder_poly(Partition({2}), 2, Family::K_1m1qmq, 6);
    {
      KoornwinderCache cache(dir);
      CHECK(cache.size() == 0);
      CHECK_FALSE(cache.find(Partition({2}), 2, Family::K_1m1qmq, 6).has_value());
      const auto computed = koornwinder_poly(Partition({2}), 2, Family::K_1m1qmq, 6, ExecPolicy::Serial, &cache);
      CHECK(computed.coeffs == k.coeffs);
      cache.save();
    }
    KoornwinderCache reloaded(dir);
    CHECK(reloaded.size() >= 1);
    const auto hit = reloaded.find(Partition({2}), 2, Family::K_1m1qmq, 6);
    REQUIRE(hit.has_value());
    CHECK(hit->coeffs == k.coeffs);
    CHECK_FALSE(reloaded.find(Partition({2}), 2, Family::K_halfquarters, 6).has_value());
    std::filesystem::remove_all(dir);
  }
}
