#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "core/numbers.hpp"
#include "oracle.hpp"

using namespace qfr;

TEST_CASE("gcd basics and the undefined corner") {
    CHECK(num::gcd(12, 18) == 6);
    CHECK(num::gcd(0, 7) == 7);
    CHECK(num::gcd(7, 0) == 7);
    CHECK(num::gcd(1, 1) == 1);
    CHECK_THROWS_AS(num::gcd(0, 0), std::domain_error);
}

TEST_CASE("euler_phi small values and error") {
    CHECK(num::euler_phi(1) == 1);
    CHECK(num::euler_phi(2) == 1);
    CHECK(num::euler_phi(6) == 2);
    CHECK(num::euler_phi(8) == 4);
    CHECK(num::euler_phi(10) == 4);
    CHECK(num::euler_phi(12) == 4);
    CHECK_THROWS_AS(num::euler_phi(0), std::domain_error);
}

TEST_CASE("euler_phi of 2p is p - 1") {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u})
        CHECK(num::euler_phi(2 * p) == p - 1);
}

TEST_CASE("mobius values, squarefree pattern, multiplicativity") {
    CHECK(num::mobius(1) == 1);
    CHECK(num::mobius(2) == -1);
    CHECK(num::mobius(4) == 0);
    CHECK(num::mobius(6) == 1);
    CHECK(num::mobius(30) == -1);
    CHECK(num::mobius(12) == 0);
    CHECK_THROWS_AS(num::mobius(0), std::domain_error);
    for (std::uint64_t a = 1; a <= 40; ++a)
        for (std::uint64_t b = 1; b <= 40; ++b) {
            if (num::gcd(a, b) != 1) continue;
            CHECK(num::mobius(a * b) == num::mobius(a) * num::mobius(b));
        }
}

TEST_CASE("is_odd_prime") {
    CHECK_FALSE(num::is_odd_prime(1));
    CHECK_FALSE(num::is_odd_prime(2));
    CHECK(num::is_odd_prime(3));
    CHECK_FALSE(num::is_odd_prime(9));
    CHECK(num::is_odd_prime(101));
    CHECK_FALSE(num::is_odd_prime(91));  // 7 * 13
}

TEST_CASE("odd primes listing") {
    const std::vector<std::uint64_t> expect{3, 5, 7, 11, 13};
    CHECK(num::odd_primes_up_to(13) == expect);
    CHECK(num::odd_primes_up_to(2).empty());
}

TEST_CASE("ramanujan_sum pinned values") {
    CHECK(num::ramanujan_sum(0, 10) == 4);
    CHECK(num::ramanujan_sum(2, 10) == -1);
    CHECK(num::ramanujan_sum(1, 6) == 1);
    CHECK(num::ramanujan_sum(5, 10) == -4);
    CHECK(num::ramanujan_sum(0, 1) == 1);
    CHECK(num::ramanujan_sum(7, 1) == 1);
    CHECK_THROWS_AS(num::ramanujan_sum(3, 0), std::domain_error);
}

TEST_CASE("ramanujan_sum reduces k mod n and c(0, n) = phi(n)") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        CHECK(num::ramanujan_sum(0, n) ==
              static_cast<std::int64_t>(num::euler_phi(n)));
        for (std::uint64_t k = 0; k < n; ++k)
            CHECK(num::ramanujan_sum(k, n) == num::ramanujan_sum(k + 7 * n, n));
    }
}

TEST_CASE("closed form matches brute-force unit-root sums, n <= 512") {
    for (std::uint64_t n = 1; n <= 512; ++n)
        for (std::uint64_t k = 0; k < n; ++k) {
            const auto brute = oracle::ramanujan_bruteforce(k, n);
            const auto closed = static_cast<double>(num::ramanujan_sum(k, n));
            CHECK(std::abs(brute.real() - closed) <= 1e-9);
            CHECK(std::abs(brute.imag()) <= 1e-9);
        }
}

TEST_CASE("ramanujan_row agrees with per-entry values") {
    for (std::uint64_t n : {1u, 2u, 6u, 10u, 12u, 36u, 97u, 360u}) {
        const auto row = num::ramanujan_row(n);
        REQUIRE(row.size() == n);
        for (std::uint64_t k = 0; k < n; ++k)
            CHECK(row[k] == num::ramanujan_sum(k, n));
    }
}

TEST_CASE("row sums vanish: sum_k c(k, n) = 0 for 2 <= n <= 10000") {
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        std::int64_t total = 0;
        for (const std::int64_t c : num::ramanujan_row(n)) total += c;
        CHECK(total == 0);
    }
}
