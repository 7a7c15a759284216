#include <doctest.h>

#include "naive.hpp"
#include "pisano/conjectures.hpp"

using namespace pisano;

TEST_SUITE("conjectures") {
  TEST_CASE("named sequence parameters") {
    CHECK(params_of(NamedSequence::fibonacci) == RecurrenceParams{1, 1, 0, 1});
    CHECK(params_of(NamedSequence::lucas) == RecurrenceParams{1, 1, 2, 1});
    CHECK(params_of(NamedSequence::pell) == RecurrenceParams{2, 1, 0, 1});
    CHECK(params_of(NamedSequence::jacobsthal) == RecurrenceParams{1, 2, 0, 1});
    CHECK(named_sequence_from_string("pell") == NamedSequence::pell);
    CHECK_FALSE(named_sequence_from_string("tribonacci").has_value());
  }

  TEST_CASE("degenerate_period") {
    CHECK(degenerate_period(2, 17) == 17);
    CHECK(degenerate_period(0, 2) == 2);
    CHECK(degenerate_period(-2, 9) == 18);
    CHECK(degenerate_period(1, 2) == 3);
    CHECK(degenerate_period(-1, 7) == 3);
    CHECK_THROWS_AS(degenerate_period(3, 5), std::domain_error);
    for (i64 a = -2; a <= 2; ++a) {
      for (u64 m = 2; m <= 300; ++m) CHECK(degenerate_period(a, m) == naive::period(a, -1, 0, 1, m).second);
    }
  }

  TEST_CASE("lucas_fixed_points") {
    CHECK(lucas_fixed_points(100) == std::vector<u64>{24});
    CHECK(lucas_fixed_points(23).empty());
    CHECK(lucas_fixed_points(2).empty());
    CHECK(lucas_fixed_points(2000) == std::vector<u64>{24});
  }

  TEST_CASE("pell_fixed_points") {
    CHECK(pell_fixed_points(20) == std::vector<u64>{2, 4, 8, 16});
    CHECK(pell_fixed_points(3) == std::vector<u64>{2});
    CHECK(pell_fixed_points(2) == std::vector<u64>{2});
    std::vector<u64> powers;
    for (u64 x = 2; x <= 2048; x *= 2) powers.push_back(x);
    CHECK(pell_fixed_points(2048) == powers);
  }

  TEST_CASE("jacobsthal_fixed_points") {
    CHECK(jacobsthal_fixed_points(60) == std::vector<u64>{6, 18, 54});
    CHECK(jacobsthal_fixed_points(5).empty());
    CHECK(jacobsthal_fixed_points(18) == std::vector<u64>{6, 18});
    CHECK(jacobsthal_fixed_points(500) == naive::fixed_points(1, 2, 0, 1, 2, 500));
  }

  TEST_CASE("named_period_row") {
    CHECK(named_period_row(NamedSequence::fibonacci, 2, 24) ==
          std::vector<u64>{3, 8, 6, 20, 24, 16, 12, 24, 60, 10, 24, 28, 48, 40, 24, 36, 24, 18, 60, 16, 30, 48, 24});
    CHECK(named_period_row(NamedSequence::pell, 2, 9) == std::vector<u64>{2, 8, 4, 12, 8, 6, 8, 24});
    CHECK(named_period_row(NamedSequence::lucas, 2, 8) == std::vector<u64>{3, 8, 6, 4, 24, 16, 12});
    CHECK(named_period_row(NamedSequence::jacobsthal, 3, 24) ==
          std::vector<u64>{6, 2, 4, 6, 6, 2, 18, 4, 10, 6, 12, 6, 12, 2, 8, 18, 18, 4, 6, 10, 22, 6});
    CHECK_THROWS(named_period_row(NamedSequence::lucas, 1, 8));
  }

  TEST_CASE("b_minus1_family") {
    const auto f3 = b_minus1_family(3);
    CHECK(f3.singular);
    CHECK_FALSE(f3.pure_powers_of_critical_prime);
    CHECK(f3.composites == std::vector<CompositeForm>{{12, {{5, 0}}}});

    const auto f4 = b_minus1_family(4);  // 12 = 2^2 * 3
    CHECK(f4.case_label == "a>2 (iv)");
    CHECK(f4.composites.size() == 2);

    const auto f5 = b_minus1_family(5);  // 21 = 3 * 7
    CHECK(f5.case_label == "a>2 (v)");
    CHECK_THROWS_AS(b_minus1_family(2), std::domain_error);
    CHECK_THROWS_AS(b_minus1_family(-1), std::domain_error);
  }

  TEST_CASE("critical primes") {
    CHECK_FALSE(critical_prime(3, 3000).has_value());
    CHECK(critical_primes(3, 3000).empty());
    // neither 2 nor 3 qualifies for a = 4: 8 and 3 are not fixed
    CHECK(critical_primes(4, 3000).empty());
    CHECK(critical_prime(5, 3000) == 3u);
    CHECK(critical_prime(7, 3000) == 5u);
    CHECK(critical_prime(-3, 3000) == 5u);
    CHECK(critical_prime(-20, 3000) == 11u);
    // more than one prime qualifies for a = 14
    CHECK(critical_primes(14, 3000) == std::vector<u64>{2, 3});
    CHECK_FALSE(critical_prime(14, 3000).has_value());
  }

  TEST_CASE("a = 3: powers of 5 are not fixed") {
    for (u64 q = 5; q <= 3125; q *= 5) CHECK(naive::period(3, -1, 0, 1, q).second != q);
  }

  TEST_CASE("b_minus1_contains") {
    const auto f7 = b_minus1_family(7);  // 45 = 3^2 * 5, case (i)
    const auto crit = critical_primes(7, 3000);
    CHECK(b_minus1_contains(f7, crit, 25));
    CHECK(b_minus1_contains(f7, crit, 90));
    CHECK_FALSE(b_minus1_contains(f7, crit, 9));
    for (u64 m = 2; m <= 1500; ++m) {
      CHECK(b_minus1_contains(f7, crit, m) == (naive::period(7, -1, 0, 1, m).second == m));
    }
  }
}
