#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "littlewood/error.hpp"
#include "littlewood/partition.hpp"
#include "littlewood/rational_function.hpp"
#include "littlewood/verify.hpp"

using namespace littlewood;

namespace {

// Literal domino stripping: the 2-core does not depend on the order of removal.
Partition strip_dominoes(Partition lambda) {
  for (;;) {
    std::vector<int> p = lambda.parts();
    bool removed = false;
    const int len = static_cast<int>(p.size());
    for (int i = 0; i < len && !removed; ++i) {
      const int below = i + 1 < len ? p[static_cast<std::size_t>(i + 1)] : 0;
      if (p[static_cast<std::size_t>(i)] - below >= 2) {
        p[static_cast<std::size_t>(i)] -= 2;
        removed = true;
      } else if (i + 1 < len && p[static_cast<std::size_t>(i)] == below) {
        const int next = i + 2 < len ? p[static_cast<std::size_t>(i + 2)] : 0;
        if (below > next) {
          --p[static_cast<std::size_t>(i)];
          --p[static_cast<std::size_t>(i + 1)];
          removed = true;
        }
      }
    }
    if (!removed) return lambda;
    lambda = Partition(p);
  }
}

// b straight from the definition, with the sign exponent written out.
long b_by_definition(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  long b = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[i]; ++j) {
      const int exponent = lambda[i] + conj[j] - i - j + 1;
      b += (exponent % 2 == 0 ? 1 : -1) * static_cast<long>(lambda[i] - i);
    }
  }
  return b;
}

std::vector<Partition> all_up_to(int size) {
  EnumerationBounds b;
  b.max_size = size;
  return enumerate_partitions(b);
}

LaurentPoly q(int e) { return LaurentPoly::q_power(e); }
LaurentPoly one_minus_q(int e) { return LaurentPoly::one_minus(1, e); }

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("canonical form and parsing") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition::parse("6,4,3,1") == Partition({6, 4, 3, 1}));
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse(" 2, 2 ") == Partition({2, 2}));
    CHECK(Partition({6, 4, 3, 1}).to_string() == "6,4,3,1");
    CHECK_THROWS_AS(Partition::parse("1,2"), Error);
    CHECK_THROWS_AS(Partition::parse("a"), Error);
    CHECK(Partition({6, 4, 3, 1}).size() == 14);
  }

  TEST_CASE("conjugation") {
    CHECK(conjugate(Partition({6, 4, 3, 1})) == Partition({4, 3, 3, 2, 1, 1}));
    CHECK(conjugate(Partition()).empty());
    CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
    for (const auto& p : all_up_to(10)) CHECK(conjugate(conjugate(p)) == p);
  }

  TEST_CASE("hook data") {
    const auto h = hook_data(Partition({6, 4, 3, 1}), {2, 2});
    CHECK(h.arm == 2);
    CHECK(h.leg == 1);
    CHECK(h.hook == 4);
    CHECK(hook_data(Partition({1}), {1, 1}).hook == 1);
    const auto r = hook_data(Partition({2, 2}), {1, 1});
    CHECK(r.hook == 3);
    CHECK(r.content == 0);
    CHECK(r.even_diagonal);
    CHECK_THROWS_AS(hook_data(Partition({2}), {2, 1}), Error);
  }

  TEST_CASE("hook multisets") {
    const auto h = hook_multisets(Partition({6, 4, 3, 1}));
    CHECK(h.odd == std::vector<int>{1, 1, 1, 1, 3, 7, 9});
    CHECK(h.even == std::vector<int>{2, 2, 4, 4, 4, 6, 6});
    const auto t = hook_multisets(Partition({1, 1}));
    CHECK(t.odd == std::vector<int>{1});
    CHECK(t.even == std::vector<int>{2});
    CHECK(hook_multisets(Partition()).all.empty());
  }

  TEST_CASE("2-cores") {
    CHECK(two_core(Partition({6, 4, 3, 1})).empty());
    CHECK(two_core(Partition({2, 1})) == Partition({2, 1}));
    CHECK(two_core(Partition({3, 1})).empty());
    CHECK(has_empty_two_core(Partition({2, 2}), TwoCoreMethod::HookCount));
    CHECK(has_empty_two_core(Partition({2, 1, 1}), TwoCoreMethod::BetaParity, 4));
    CHECK_FALSE(has_empty_two_core(Partition({3, 2, 1}), TwoCoreMethod::BetaParity, 4));
    CHECK_FALSE(has_empty_two_core(Partition({1})));
    for (const auto& p : all_up_to(12)) CHECK(two_core(p) == strip_dominoes(p));
  }

  TEST_CASE("2-core methods agree (property)") {
    for (const auto& p : all_up_to(14)) {
      const bool abacus = has_empty_two_core(p, TwoCoreMethod::Abacus);
      CHECK(abacus == has_empty_two_core(p, TwoCoreMethod::HookCount));
      for (int pad = (p.length() + 1) / 2 * 2; pad <= p.length() + 6; pad += 2) {
        CHECK(abacus == has_empty_two_core(p, TwoCoreMethod::BetaParity, pad));
      }
    }
  }

  TEST_CASE("the statistic b") {
    CHECK(b_statistic(Partition({2, 1, 1, 1})) == 0);
    CHECK(b_statistic(Partition({2, 2})) == 0);
    CHECK(b_statistic(Partition({6, 4, 3, 1})) == 3);
    CHECK(b_statistic(conjugate(Partition({6, 4, 3, 1}))) == 2);
    for (const auto& p : all_up_to(12)) CHECK(b_statistic(p) == b_by_definition(p));
  }

  TEST_CASE("b is nonnegative on empty 2-cores and vanishes exactly on even partitions") {
    for (const auto& p : all_up_to(14)) {
      if (!has_empty_two_core(p)) continue;
      CHECK(b_statistic(p) >= 0);
      CHECK((b_statistic(p) == 0) == p.is_even());
    }
  }

  TEST_CASE("b through lambda + delta") {
    CHECK(b_via_delta(Partition({1, 1}), 2) == 1);
    CHECK(b_conj_via_delta(Partition({1, 1}), 2) == 0);
    CHECK(b_via_delta(Partition(), 3) == 0);
    CHECK(b_via_delta(Partition({6, 4, 3, 1}), 4) == 3);
    CHECK(b_conj_via_delta(Partition({6, 4, 3, 1}), 4) == 2);
    CHECK_THROWS_AS(b_via_delta(Partition({1, 1, 1}), 1), Error);
    CHECK_THROWS_AS(b_conj_via_delta(Partition({1}), 1), Error);
    for (const auto& p : all_up_to(12)) {
      for (int n = std::max(1, p.length()); n <= 6; ++n) {
        CHECK(b_via_delta(p, n) == b_statistic(p));
        if (has_empty_two_core(p)) CHECK(b_conj_via_delta(p, n) == b_statistic(conjugate(p)));
      }
    }
  }

  TEST_CASE("hook and content polynomials") {
    const Partition p({1, 1});
    CHECK(hook_poly(p, ParityVariant::Odd) == one_minus_q(1));
    CHECK(hook_poly(p, ParityVariant::Even) == one_minus_q(2));
    CHECK(content_poly(Partition({2}), 2) == one_minus_q(2) * one_minus_q(3));
    const Partition sq({2, 2});
    CHECK(content_poly(sq, -2, ParityVariant::Even) == (LaurentPoly(1) - q(-2)) * (LaurentPoly(1) - q(-2)));
    CHECK(content_poly(sq, -2, ParityVariant::Odd) == (LaurentPoly(1) - q(-1)) * (LaurentPoly(1) - q(-3)));
    for (const auto& l : all_up_to(9)) {
      CHECK(hook_poly(l) == hook_poly(l, ParityVariant::Even) * hook_poly(l, ParityVariant::Odd));
      CHECK(hook_poly(l) == hook_poly(conjugate(l)));
    }
  }

  TEST_CASE("conjugation identity (property)") {
    for (const auto& l : all_up_to(10)) {
      if (!has_empty_two_core(l)) continue;
      for (int m = 0; m <= 5; ++m) CHECK(conjugation_identity_holds(l, m));
    }
  }

  TEST_CASE("enumeration") {
    EnumerationBounds b;
    b.max_size = 4;
    const auto cores = enumerate_partitions(b, [](const Partition& p) { return has_empty_two_core(p); });
    const std::vector<Partition> expected{Partition(),       Partition({2}),    Partition({1, 1}),
                                          Partition({4}),    Partition({3, 1}), Partition({2, 2}),
                                          Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    CHECK(cores == expected);
    b.max_size = 0;
    CHECK(enumerate_partitions(b) == std::vector<Partition>{Partition()});
    b.max_size = 2;
    b.max_length = 1;
    CHECK(enumerate_partitions(b) == std::vector<Partition>{Partition(), Partition({1}), Partition({2})});
    // counts match the partition numbers 1, 1, 2, 3, 5, 7, 11, 15, 22
    EnumerationBounds all;
    all.max_size = 8;
    CHECK(enumerate_partitions(all).size() == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22);
  }

  TEST_CASE("random partitions stay canonical") {
    gen::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
      const Partition p = rng.partition(20);
      CHECK(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
      CHECK(Partition::parse(p.to_string()) == p);
      CHECK(hook_multisets(p).all.size() == static_cast<std::size_t>(p.size()));
    }
  }
}
