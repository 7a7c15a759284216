#include <doctest.h>

#include "naive.hpp"
#include "pisano/period.hpp"

using namespace pisano;

TEST_SUITE("period") {
  TEST_CASE("period_oracle examples") {
    CHECK(period_oracle({1, 1, 0, 1}, 10) == PeriodResult{0, 60});
    CHECK(period_oracle({2, 1, 0, 1}, 4) == PeriodResult{0, 4});
    CHECK(period_oracle({3, 1, 0, 1}, 6) == PeriodResult{0, 6});
    CHECK(period_oracle({1, 2, 0, 1}, 6).period == 6);
    CHECK_THROWS_AS(period_oracle({1, 1, 0, 1}, 1), std::domain_error);
  }

  TEST_CASE("period_oracle matches a state-remembering walk") {
    for (i64 a = -4; a <= 4; ++a) {
      for (i64 b = -4; b <= 4; ++b) {
        for (u64 m = 2; m <= 60; ++m) {
          const auto [pre, per] = naive::period(a, b, 1, 2, m);
          const auto r = period_oracle({a, b, 1, 2}, m);
          CHECK(r.preperiod == pre);
          CHECK(r.period == per);
          if (naive::gcd(naive::residue(b, m), m) == 1) CHECK(r.pure());
        }
      }
    }
  }

  TEST_CASE("period_oracle on a modulus above 2^31") {
    // F_50 = 12586269025; the Fibonacci period modulo F_n is 2n for even n
    const u64 m = 12586269025ULL;
    CHECK(period_oracle({1, 1, 0, 1}, m) == PeriodResult{0, 100});
    CHECK(pisano_structured(1, m) == 100);
  }

  TEST_CASE("pisano_prime examples") {
    CHECK(pisano_prime(1, 5) == 20);
    CHECK(pisano_prime(3, 13) == 52);
    CHECK(pisano_prime(4, 2) == 2);
    CHECK(pisano_prime(1, 3) == 8);
    CHECK(pisano_prime(3, 3) == 2);
    CHECK(pisano_prime(5, 2) == 3);
    CHECK(pisano_prime_detail(1, 5).branch == PrimeBranch::ramified);
    CHECK(pisano_prime_detail(1, 11).branch == PrimeBranch::split);
    CHECK(pisano_prime_detail(1, 7).branch == PrimeBranch::inert);
  }

  TEST_CASE("pisano_prime against the naive walk") {
    for (u64 k = 1; k <= 30; ++k) {
      for (u64 p = 2; p < 800; ++p) {
        if (!naive::is_prime(p)) continue;
        const auto d = pisano_prime_detail(k, p);
        CHECK(d.period == naive::pisano(k, p));
        CHECK_FALSE(d.used_oracle_fallback);
      }
    }
  }

  TEST_CASE("pisano_prime_power") {
    CHECK(pisano_prime_power(1, 2, 3) == 12);
    CHECK(pisano_prime_power(4, 2, 2) == 2);
    CHECK(pisano_prime_power(1, 5, 2) == 100);
  }

  TEST_CASE("powers of two for even K") {
    // includes K with v2(K) >= e, where the exponent formula bottoms out at pi_K(2) = 2
    for (u64 k = 2; k <= 64; k += 2) {
      for (unsigned e = 1; e <= 9; ++e) CHECK(pisano_prime_power(k, 2, e) == naive::pisano(k, 1ULL << e));
    }
  }

  TEST_CASE("pisano_structured examples") {
    CHECK(pisano_structured(1, 24) == 24);
    CHECK(pisano_structured(1, 12) == 24);
    CHECK(pisano_structured(2, 13) == pisano_structured(2, 169));
    CHECK_THROWS_AS(pisano_structured(1, 1), std::domain_error);
  }

  TEST_CASE("pisano_structured against the naive walk") {
    for (u64 k = 1; k <= 12; ++k) {
      for (u64 m = 2; m <= 600; ++m) CHECK(pisano_structured(k, m) == naive::pisano(k, m));
    }
  }

  TEST_CASE("structured engine on large prime moduli") {
    // 5 is a non-residue mod both primes, so the period divides 2(p + 1)
    for (u64 p : {1000000007ULL, 18446744073709551557ULL}) {
      CAPTURE(p);
      const u64 per = pisano_structured(1, p);
      CHECK(per > 0);
      CHECK((2 * (static_cast<u128>(p) + 1)) % per == 0);
      CHECK(matrix_power_state({1, 1, 0, 1}, per, p) == StatePair{0, 1, p});
    }
  }

  TEST_CASE("overflow is reported, not wrapped") {
    // pi(p^2) = p * pi(p) overflows for p near 2^32 with pi(p) = 2(p+1)
    const u64 p = 4294967197ULL;
    CHECK_THROWS_AS(pisano_structured(1, p * p), ArithmeticOverflow);
    CHECK_THROWS_AS(discriminant(1ULL << 32), ArithmeticOverflow);
    CHECK(discriminant(3) == 13);
  }

  TEST_CASE("wall-sun-sun primes") {
    CHECK(is_k_wall_sun_sun(2, 13));
    CHECK(is_k_wall_sun_sun(2, 31));
    CHECK(is_k_wall_sun_sun(4, 2));
    CHECK_FALSE(is_k_wall_sun_sun(2, 2));
    CHECK_FALSE(is_k_wall_sun_sun(1, 2));
    for (u64 k = 1; k <= 50; ++k) CHECK(is_k_wall_sun_sun(k, 2) == (k % 4 == 0));
  }

  TEST_CASE("max_wss_exponent") {
    CHECK(max_wss_exponent(2, 13, 4).exponent == 2);
    CHECK(max_wss_exponent(1, 5, 4).exponent == 1);
    CHECK(max_wss_exponent(4, 2, 4).exponent == 2);
    for (u64 k = 1; k <= 20; ++k) {
      for (u64 p : {2, 3, 5, 7, 13}) {
        const auto w = max_wss_exponent(k, p, 5);
        u64 pe = p;
        unsigned e = 1;
        for (unsigned x = 2; x <= 5 && pe * p <= 200000; ++x) {
          pe *= p;
          if (naive::pisano(k, pe) == naive::pisano(k, p)) e = x;
          else break;
        }
        if (w.exponent <= 4) CHECK(w.exponent == e);
      }
    }
  }

  TEST_CASE("period is even above 2") {
    for (u64 k = 1; k <= 24; ++k) {
      for (u64 m = 3; m <= 500; ++m) CHECK(pisano_structured(k, m) % 2 == 0);
    }
  }
}
