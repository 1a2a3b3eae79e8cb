#include "core/numbers.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace qfr::num {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factor: n must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::domain_error("euler_phi: n must be positive");
    std::uint64_t phi = n;
    for (const auto& [p, e] : factor(n)) phi = phi / p * (p - 1);
    return phi;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw std::domain_error("mobius: n must be positive");
    int sign = 1;
    for (const auto& [p, e] : factor(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::int64_t ramanujan_sum(std::uint64_t k, std::uint64_t n) {
    if (n == 0) throw std::domain_error("ramanujan_sum: n must be positive");
    const std::uint64_t t = n / std::gcd(k % n, n);
    const int mu = mobius(t);
    if (mu == 0) return 0;
    return static_cast<std::int64_t>(mu) *
           static_cast<std::int64_t>(euler_phi(n) / euler_phi(t));
}

std::vector<std::int64_t> ramanujan_row(std::uint64_t n) {
    if (n == 0) throw std::domain_error("ramanujan_row: n must be positive");
    const std::uint64_t phi_n = euler_phi(n);
    std::map<std::uint64_t, std::int64_t> by_divisor;
    std::vector<std::int64_t> row(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint64_t t = n / std::gcd(k, n);
        auto it = by_divisor.find(t);
        if (it == by_divisor.end()) {
            const int mu = mobius(t);
            const std::int64_t val =
                mu == 0 ? 0 : mu * static_cast<std::int64_t>(phi_n / euler_phi(t));
            it = by_divisor.emplace(t, val).first;
        }
        row[k] = it->second;
    }
    return row;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2)
        if (n % p == 0) return false;
    return true;
}

bool is_odd_prime(std::uint64_t p) { return p >= 3 && is_prime(p); }

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t p_max) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= p_max; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace qfr::num
