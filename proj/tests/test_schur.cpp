#include <doctest.h>

#include <numeric>

#include "generators.hpp"
#include "oracles.hpp"
#include "littlewood/error.hpp"
#include "littlewood/schur.hpp"

using namespace littlewood;

namespace {

using Poly = XPoly<Rational>;
using oracle::bialternant;
using oracle::var;

std::vector<Partition> all_up_to(int size, int max_length) {
  EnumerationBounds b;
  b.max_size = size;
  b.max_length = max_length;
  return enumerate_partitions(b);
}

}  // namespace

TEST_SUITE("schur") {
  TEST_CASE("small Schur polynomials") {
    CHECK(schur(Partition({1}), 2) == var(2, 0) + var(2, 1));
    CHECK(schur(Partition({2, 1}), 2) == var(2, 0, 2) * var(2, 1) + var(2, 0) * var(2, 1, 2));
    CHECK(schur(Partition({1, 1, 1}), 2).is_zero());
    CHECK(schur(Partition(), 3) == Poly::constant(3, 1));
  }

  TEST_CASE("tableaux agree with the bialternant (oracle)") {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& l : all_up_to(8, n)) CHECK(schur(l, n) == bialternant(l, n));
    }
  }

  TEST_CASE("setting the last variable to zero drops a variable") {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& l : all_up_to(7, n + 1)) {
        const Poly wide = schur(l, n + 1).set_variable_zero(n);
        // the n-variable polynomial, viewed in n + 1 variables
        Poly narrow(n + 1);
        for (const auto& [e, c] : schur(l, n).terms()) narrow.add_term(e, c);
        CHECK(wide == narrow);
      }
    }
  }

  TEST_CASE("expansion examples") {
    const auto e = schur_expand(var(2, 0, 2) + var(2, 1, 2));
    CHECK(e.coeff(Partition({2})) == 1);
    CHECK(e.coeff(Partition({1, 1})) == -1);
    CHECK(e.coeffs.size() == 2);
    CHECK(schur_expand(schur(Partition({3, 1}), 3)).coeffs.size() == 1);
    CHECK(schur_expand(var(2, 0) * var(2, 1)).coeff(Partition({1, 1})) == 1);
    CHECK_THROWS_AS(schur_expand(var(2, 0)), Error);
  }

  TEST_CASE("round trip on random sparse combinations (property)") {
    gen::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = rng.uniform(1, 4);
      SchurExpansion<Rational> chosen{n, {}};
      const auto pool = all_up_to(8, n);
      for (int k = 0; k < 4; ++k) {
        const Rational c = rng.nonzero_rational();
        chosen.coeffs[pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))]] = c;
      }
      const auto back = schur_expand(schur_reconstruct(chosen));
      CHECK(back.coeffs == chosen.coeffs);
    }
  }
}
