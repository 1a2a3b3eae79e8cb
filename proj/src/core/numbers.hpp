#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Exact integer number theory for circulant spectra.
//
//   phi(n)            Euler totient
//   mobius(n)         Moebius function, in {-1, 0, +1}
//   ramanujan_sum     c(k, n) = mobius(t) * phi(n) / phi(t),  t = n / gcd(k, n)
//
// c(k, n) equals the sum of e^{2 pi i k j / n} over the units j of Z_n, so it
// is always an integer; the closed form above never touches floating point.

namespace qfr::num {

// gcd of nonnegative integers; rejects gcd(0, 0), which has no value.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Prime factorisation by trial division, (prime, exponent) pairs in
// increasing prime order. factor(1) is empty. Rejects n = 0.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

int mobius(std::uint64_t n);

// k is reduced mod n. phi(t) divides phi(n) whenever t divides n, so the
// division below is exact.
std::int64_t ramanujan_sum(std::uint64_t k, std::uint64_t n);

// c(k, n) for k = 0 .. n-1 in one pass. The value depends only on
// n / gcd(k, n), which ranges over the divisors of n, so one cached value
// per divisor serves the whole row.
std::vector<std::int64_t> ramanujan_row(std::uint64_t n);

bool is_prime(std::uint64_t n);

bool is_odd_prime(std::uint64_t p);

// Odd primes in increasing order, 3, 5, 7, ..., up to and including p_max.
std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t p_max);

}  // namespace qfr::num
