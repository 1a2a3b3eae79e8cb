#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "core/graph.hpp"
#include "core/numbers.hpp"
#include "core/spectrum.hpp"
#include "oracle.hpp"

using namespace qfr;

namespace {

std::vector<std::int64_t> sorted_desc(std::vector<std::int64_t> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

}  // namespace

TEST_CASE("graph construction and connection sets") {
    CHECK_THROWS_AS(UnitaryCayleyGraph(0), std::domain_error);
    CHECK_THROWS_AS(UnitaryCayleyGraph(1), std::domain_error);

    const UnitaryCayleyGraph g6(6);
    CHECK(g6.connection_set() == std::vector<std::uint64_t>{1, 5});
    CHECK(g6.degree() == 2);

    const UnitaryCayleyGraph g8(8);
    CHECK(g8.connection_set() == std::vector<std::uint64_t>{1, 3, 5, 7});
    CHECK(g8.degree() == 4);

    const UnitaryCayleyGraph g2(2);
    CHECK(g2.connection_set() == std::vector<std::uint64_t>{1});
    CHECK(g2.degree() == 1);
}

TEST_CASE("adjacency is a difference test") {
    for (std::uint64_t n : {2u, 5u, 6u, 8u, 12u, 30u}) {
        const UnitaryCayleyGraph g(n);
        for (std::uint64_t u = 0; u < n; ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (std::uint64_t v = 0; v < n; ++v) {
                const bool expect =
                    u != v && num::gcd((v + n - u) % n, n) == 1;
                CHECK(g.adjacent(u, v) == expect);
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
            }
        }
    }
}

TEST_CASE("degree equals phi(n) and regularity holds") {
    for (std::uint64_t n = 2; n <= 64; ++n) {
        const UnitaryCayleyGraph g(n);
        CHECK(g.degree() == num::euler_phi(n));
        for (std::uint64_t u = 0; u < n; ++u) {
            std::uint64_t deg = 0;
            for (std::uint64_t v = 0; v < n; ++v)
                if (g.adjacent(u, v)) ++deg;
            CHECK(deg == g.degree());
        }
    }
}

TEST_CASE("adjacency spectrum: pinned multisets") {
    const UnitaryCayleyGraph g6(6);
    CHECK(sorted_desc(adjacency_spectrum(g6).values) ==
          std::vector<std::int64_t>{2, 1, 1, -1, -1, -2});

    const UnitaryCayleyGraph g8(8);
    CHECK(sorted_desc(adjacency_spectrum(g8).values) ==
          std::vector<std::int64_t>{4, 0, 0, 0, 0, 0, 0, -4});
}

TEST_CASE("adjacency spectrum: per-index values for n = 10") {
    const UnitaryCayleyGraph g(10);
    const Spectrum s = adjacency_spectrum(g);
    CHECK(s.values[0] == 4);
    CHECK(s.values[5] == -4);
    for (std::size_t k = 1; k < 10; ++k) {
        if (k == 5) continue;
        CHECK(s.values[k] == (k % 2 == 1 ? 1 : -1));
    }
}

TEST_CASE("laplacian spectrum: pinned multisets") {
    const UnitaryCayleyGraph g6(6);
    CHECK(sorted_desc(laplacian_spectrum(g6).values) ==
          std::vector<std::int64_t>{4, 3, 3, 1, 1, 0});

    const UnitaryCayleyGraph g2(2);
    CHECK(sorted_desc(laplacian_spectrum(g2).values) ==
          std::vector<std::int64_t>{2, 0});

    const UnitaryCayleyGraph g8(8);
    CHECK(sorted_desc(laplacian_spectrum(g8).values) ==
          std::vector<std::int64_t>{8, 4, 4, 4, 4, 4, 4, 0});
}

TEST_CASE("laplacian values nonnegative with exactly one zero, n <= 512") {
    for (std::uint64_t n = 2; n <= 512; ++n) {
        const UnitaryCayleyGraph g(n);
        const Spectrum s = laplacian_spectrum(g);
        std::size_t zeros = 0;
        for (const std::int64_t v : s.values) {
            CHECK(v >= 0);
            if (v == 0) ++zeros;
        }
        CHECK(zeros == 1);
        CHECK(s.values[0] == 0);
    }
}

TEST_CASE("closed-form spectrum equals the DFT of the connection row, n <= 64") {
    for (std::uint64_t n = 2; n <= 64; ++n) {
        const UnitaryCayleyGraph g(n);
        const Spectrum s = adjacency_spectrum(g);
        for (std::uint64_t k = 0; k < n; ++k) {
            const auto dft = oracle::circulant_eigenvalue_dft(g, k);
            CHECK(std::abs(dft.real() - static_cast<double>(s.values[k])) <= 1e-9);
            CHECK(std::abs(dft.imag()) <= 1e-9);
        }
    }
}

TEST_CASE("classes partition the index set and match values") {
    for (std::uint64_t n : {2u, 6u, 8u, 12u, 30u, 60u}) {
        const UnitaryCayleyGraph g(n);
        for (const Spectrum& s : {adjacency_spectrum(g), laplacian_spectrum(g)}) {
            std::set<std::size_t> seen;
            std::int64_t prev = s.values[s.classes.front().front()] + 1;
            for (const auto& cls : s.classes) {
                REQUIRE(!cls.empty());
                const std::int64_t value = s.values[cls.front()];
                CHECK(value < prev);  // strictly decreasing class order
                prev = value;
                for (const std::size_t k : cls) {
                    CHECK(s.values[k] == value);
                    CHECK(seen.insert(k).second);
                }
            }
            CHECK(seen.size() == n);
        }
    }
}

TEST_CASE("idempotents: entries, hermitian, projection algebra") {
    const UnitaryCayleyGraph g2(2);
    const auto projs2 = idempotents(adjacency_spectrum(g2));
    REQUIRE(projs2.size() == 2);
    CHECK(projs2[0].eigenvalue == 1);
    CHECK(std::abs(projs2[0].entry(0, 0) - 0.5) <= 1e-12);
    CHECK(std::abs(projs2[0].entry(0, 1) - 0.5) <= 1e-12);
    CHECK(projs2[1].eigenvalue == -1);
    CHECK(std::abs(projs2[1].entry(0, 1) + 0.5) <= 1e-12);

    const UnitaryCayleyGraph g8(8);
    const auto projs8 = idempotents(adjacency_spectrum(g8));
    REQUIRE(projs8.size() == 3);
    std::vector<std::size_t> sizes;
    for (const auto& p : projs8) sizes.push_back(p.indices.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 6});

    for (std::uint64_t n : {6u, 12u, 15u}) {
        const UnitaryCayleyGraph g(n);
        const auto projs = idempotents(adjacency_spectrum(g));
        // Sum to identity.
        for (std::uint64_t j = 0; j < n; ++j)
            for (std::uint64_t k = 0; k < n; ++k) {
                std::complex<double> total{};
                for (const auto& p : projs) total += p.entry(j, k);
                const double expect = (j == k) ? 1.0 : 0.0;
                CHECK(std::abs(total - expect) <= 1e-12);
            }
        // E_a E_b = [a == b] E_a, and entries are hermitian.
        for (std::size_t a = 0; a < projs.size(); ++a)
            for (std::size_t b = 0; b < projs.size(); ++b)
                for (std::uint64_t j = 0; j < n; ++j)
                    for (std::uint64_t k = 0; k < n; ++k) {
                        std::complex<double> prod{};
                        for (std::uint64_t m = 0; m < n; ++m)
                            prod += projs[a].entry(j, m) * projs[b].entry(m, k);
                        const std::complex<double> expect =
                            (a == b) ? projs[a].entry(j, k) : std::complex<double>{};
                        CHECK(std::abs(prod - expect) <= 1e-12);
                        CHECK(std::abs(projs[a].entry(j, k) -
                                       std::conj(projs[a].entry(k, j))) <= 1e-12);
                    }
    }
}

TEST_CASE("eigenvalue partition for n = 2p") {
    const Partition2p part3 = eigenvalue_partition_2p(3);
    CHECK(part3.index_zero == std::vector<std::size_t>{0});
    CHECK(part3.index_p == std::vector<std::size_t>{3});
    CHECK(part3.unit_value == 1);
    CHECK(part3.unit_indices == std::vector<std::size_t>{1, 5});
    CHECK(part3.half_value == -1);
    CHECK(part3.half_indices == std::vector<std::size_t>{2, 4});

    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
        const Partition2p part = eigenvalue_partition_2p(p);
        const Spectrum s = adjacency_spectrum(UnitaryCayleyGraph(2 * p));
        CHECK(s.values[0] == static_cast<std::int64_t>(p - 1));
        CHECK(s.values[p] == -static_cast<std::int64_t>(p - 1));
        CHECK(part.unit_value == 1);
        CHECK(part.half_value == -1);
        CHECK(part.unit_indices.size() == p - 1);
        CHECK(part.half_indices.size() == p - 1);
        for (const std::size_t k : part.unit_indices) {
            CHECK(k % 2 == 1);
            CHECK(s.values[k] == part.unit_value);
        }
        for (const std::size_t k : part.half_indices) {
            CHECK(k % 2 == 0);
            CHECK(s.values[k] == part.half_value);
        }
    }
    CHECK_THROWS_AS(eigenvalue_partition_2p(2), std::domain_error);
    CHECK_THROWS_AS(eigenvalue_partition_2p(9), std::domain_error);
}

TEST_CASE("distinct adjacency eigenvalues of the 2p family") {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        const Spectrum s = adjacency_spectrum(UnitaryCayleyGraph(2 * p));
        const std::set<std::int64_t> distinct(s.values.begin(), s.values.end());
        const auto sp = static_cast<std::int64_t>(p);
        CHECK(distinct == std::set<std::int64_t>{sp - 1, 1, -1, -(sp - 1)});
    }
}

TEST_CASE("DOT export: pinned bytes and shape") {
    const UnitaryCayleyGraph g2(2);
    CHECK(g2.to_dot() == "graph X { 0 -- 1; }\n");

    const UnitaryCayleyGraph g4(4);
    CHECK(g4.to_dot() == "graph X { 0 -- 1; 0 -- 3; 1 -- 2; 2 -- 3; }\n");

    const UnitaryCayleyGraph g6(6);
    CHECK(g6.to_dot() ==
          "graph X { 0 -- 1; 0 -- 5; 1 -- 2; 2 -- 3; 3 -- 4; 4 -- 5; }\n");

    // K5: every pair adjacent.
    const UnitaryCayleyGraph g5(5);
    std::string dot = g5.to_dot();
    CHECK(std::count(dot.begin(), dot.end(), ';') == 10);
}

TEST_CASE("vertex bounds checking") {
    const UnitaryCayleyGraph g(6);
    CHECK_THROWS_AS(g.check_vertex(6), std::domain_error);
    CHECK_NOTHROW(g.check_vertex(5));
}
