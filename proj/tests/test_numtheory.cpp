#include <doctest.h>

#include <limits>
#include <random>

#include "naive.hpp"
#include "pisano/numtheory.hpp"

using namespace pisano;

TEST_SUITE("numtheory") {
  TEST_CASE("gcd and lcm") {
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(6, 8) == 2);
    CHECK(gcd(0, 0) == 0);
    CHECK(lcm(12, 8) == 24);
    CHECK(lcm(3, 2) == 6);
    CHECK(lcm(1, 9) == 9);
    CHECK_THROWS_AS(lcm(0, 5), std::domain_error);
    CHECK_THROWS_AS(lcm(std::numeric_limits<u64>::max(), std::numeric_limits<u64>::max() - 1), ArithmeticOverflow);
  }

  TEST_CASE("gcd/lcm against naive on random pairs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
      const u64 a = rng() % 100000 + 1, b = rng() % 100000 + 1;
      CHECK(gcd(a, b) == naive::gcd(a, b));
      CHECK(lcm(a, b) * gcd(a, b) == a * b);
    }
  }

  TEST_CASE("checked arithmetic") {
    CHECK(checked_mul(1ULL << 31, 1ULL << 32) == 1ULL << 63);
    CHECK_THROWS_AS(checked_mul(1ULL << 32, 1ULL << 32), ArithmeticOverflow);
    CHECK(checked_pow(5, 3) == 125);
    CHECK(checked_pow(7, 0) == 1);
    CHECK_THROWS_AS(checked_pow(2, 64), ArithmeticOverflow);
  }

  TEST_CASE("mod_pow") {
    CHECK(mod_pow(u64{2}, 10, 1000) == 24);
    CHECK(mod_pow(u64{5}, 0, 7) == 1);
    CHECK(mod_pow(u64{7}, 1, 7) == 0);
    CHECK(mod_pow(i64{-2}, 3, 7) == 6);
    const u64 big = 18446744073709551557ULL;  // largest 64-bit prime
    CHECK(mod_pow(u64{3}, big - 1, big) == 1);
  }

  TEST_CASE("reduce") {
    CHECK(reduce(-1, 7) == 6);
    CHECK(reduce(-14, 7) == 0);
    CHECK(reduce(15, 7) == 1);
  }

  TEST_CASE("mod_inv") {
    CHECK(mod_inv(2, 5) == 3);
    CHECK(mod_inv(1, 9) == 1);
    try {
      (void)mod_inv(3, 6);
      FAIL("expected NotInvertible");
    } catch (const NotInvertible& e) {
      CHECK(e.gcd() == 3);
      CHECK(e.value() == 3);
      CHECK(e.modulus() == 6);
    }
  }

  TEST_CASE("mod_inv property") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
      const u64 m = rng() % 100000 + 2, a = rng() % m;
      if (naive::gcd(a, m) != 1) {
        CHECK_THROWS_AS(mod_inv(a, m), NotInvertible);
        continue;
      }
      const u64 x = mod_inv(a, m);
      CHECK(x < m);
      CHECK(a * x % m == 1 % m);
    }
  }

  TEST_CASE("is_prime") {
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(169));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(3215031751ULL));        // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
    for (u64 n = 0; n < 20000; ++n) CHECK(is_prime(n) == naive::is_prime(n));
  }

  TEST_CASE("factorize") {
    auto f = factorize(8);
    CHECK(f.factors == std::vector<PrimePower>{{2, 3}});
    f = factorize(260);
    CHECK(f.factors == std::vector<PrimePower>{{2, 2}, {5, 1}, {13, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK_THROWS(factorize(0));
    CHECK(f.has_prime(13));
    CHECK_FALSE(f.has_prime(3));
    CHECK(f.exponent_of(2) == 2);
    CHECK(f.primes() == std::vector<u64>{2, 5, 13});

    // semiprime of two 32-bit primes exercises Pollard-Brent
    f = factorize(4294967291ULL * 4294967279ULL);
    CHECK(f.factors == std::vector<PrimePower>{{4294967279ULL, 1}, {4294967291ULL, 1}});
    CHECK(factorize(18446744073709551557ULL).factors.size() == 1);
  }

  TEST_CASE("factorize invariants") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3000; ++i) {
      const u64 n = i < 1000 ? static_cast<u64>(i + 1) : rng() % 1000000000000ULL + 1;
      const auto f = factorize(n);
      CHECK(f.reassemble() == n);
      for (std::size_t j = 0; j < f.factors.size(); ++j) {
        CHECK(naive::is_prime(f.factors[j].prime));
        CHECK(f.factors[j].exponent >= 1);
        if (j > 0) CHECK(f.factors[j - 1].prime < f.factors[j].prime);
      }
      if (n < 1000000) {
        const auto ref = naive::factor(n);
        REQUIRE(ref.size() == f.factors.size());
        for (std::size_t j = 0; j < ref.size(); ++j) {
          CHECK(ref[j].first == f.factors[j].prime);
          CHECK(ref[j].second == f.factors[j].exponent);
        }
      }
    }
  }

  TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(mod_inv(2, 5) * 1 % 5, 5) == 4);
    CHECK(multiplicative_order(1, 7) == 1);
    CHECK(multiplicative_order(mod_inv(2, 13) * 3 % 13, 13) == 4);
    CHECK_THROWS_AS(multiplicative_order(0, 7), NotInvertible);
    CHECK_THROWS_AS(multiplicative_order(14, 7), NotInvertible);
    CHECK_THROWS_AS(multiplicative_order(2, 9), std::domain_error);
    for (u64 p : {3, 5, 7, 11, 13, 101, 997, 7919}) {
      for (u64 a = 1; a < std::min<u64>(p, 60); ++a) {
        const u64 d = multiplicative_order(a, p);
        CHECK(d == naive::order(a, p));
        CHECK((p - 1) % d == 0);
      }
    }
  }

  TEST_CASE("p_adic_valuation") {
    CHECK(p_adic_valuation(8, 2) == 3);
    CHECK(p_adic_valuation(12, 3) == 1);
    CHECK(p_adic_valuation(7, 2) == 0);
    CHECK_THROWS(p_adic_valuation(0, 2));
  }

  TEST_CASE("divisors and legendre") {
    CHECK(divisors(factorize(12)) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(factorize(1)) == std::vector<u64>{1});
    CHECK(legendre(4, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(14, 7) == 0);
    for (u64 p : {5, 13, 29, 101}) {
      for (u64 a = 1; a < p; ++a) {
        bool square = false;
        for (u64 x = 1; x < p; ++x) square = square || x * x % p == a;
        CHECK(legendre(a, p) == (square ? 1 : -1));
      }
    }
  }
}
