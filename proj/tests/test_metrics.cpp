#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core/evolution.hpp"
#include "core/graph.hpp"
#include "core/metrics.hpp"
#include "core/numbers.hpp"
#include "core/revival.hpp"
#include "oracle.hpp"

using namespace qfr;
using oracle::cdouble;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

TEST_CASE("binary entropy: pinned values and conventions") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.75) == doctest::Approx(0.811278124459133).epsilon(1e-14));
    CHECK(binary_entropy(0.25) == doctest::Approx(0.811278124459133).epsilon(1e-14));
    CHECK(binary_entropy(0.2222) == doctest::Approx(0.7641643410048659).epsilon(1e-14));
    // Below the 0 log 0 floor the singular term is dropped; the result is
    // negligible but need not be exactly zero.
    CHECK(binary_entropy(1e-16) <= 1e-14);
    CHECK(binary_entropy(1.0 - 1e-16) <= 1e-14);
    CHECK_THROWS_AS(binary_entropy(-0.01), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.01), std::domain_error);
}

TEST_CASE("entropy of an amplitude pair") {
    const double s = std::sqrt(0.75);
    CHECK(entropy({0.5, 0.0}, {0.0, -s}) ==
          doctest::Approx(0.811278124459133).epsilon(1e-14));
    CHECK(entropy({1.0, 0.0}, {0.0, 0.0}) == 0.0);
    CHECK(entropy({0.0, 0.0}, {0.0, 1.0}) == 0.0);
    // Phases are irrelevant.
    CHECK(entropy({0.0, 0.5}, {s, 0.0}) ==
          doctest::Approx(0.811278124459133).epsilon(1e-14));
    // Non-normalized pairs are rejected.
    CHECK_THROWS_AS(entropy({0.9, 0.0}, {0.0, 0.9}), std::domain_error);
    CHECK_THROWS_AS(entropy({0.0, 0.0}, {0.0, 0.5}), std::domain_error);
}

TEST_CASE("revival entropy of the 2p family: pinned values") {
    CHECK(entropy_2p(3) == doctest::Approx(0.811278124459133).epsilon(1e-14));
    CHECK(entropy_2p(5) == doctest::Approx(0.454538851471507).epsilon(1e-14));
    CHECK(entropy_2p(7) == doctest::Approx(0.963981305616145).epsilon(1e-14));
    CHECK(entropy_2p(11) == doctest::Approx(0.871664228190667).epsilon(1e-14));
    CHECK(entropy_2p(13) == doctest::Approx(0.752735853235437).epsilon(1e-14));
    CHECK(entropy_2p(101) == doctest::Approx(0.036544933778502).epsilon(1e-12));
    CHECK_THROWS_AS(entropy_2p(2), std::domain_error);
    CHECK_THROWS_AS(entropy_2p(9), std::domain_error);

    // Definition check against the walk itself: entropy of the earliest
    // revival amplitudes.
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
        const UnitaryCayleyGraph g(2 * p);
        const RevivalClosedForm r = revival_time_2p(p);
        const AmplitudePair a = amplitude(g, Hamiltonian::adjacency, r.t_star, 0, p);
        CHECK(entropy_2p(p) == doctest::Approx(entropy(a.alpha, a.beta)).epsilon(1e-12));
    }
}

TEST_CASE("fidelity: pinned values") {
    // |beta|^2 at the earliest revival equals sin^2(2 pi / p).
    const UnitaryCayleyGraph g10(10);
    CHECK(fidelity(g10, 2.0 * kPi / 5.0, 0, 5) ==
          doctest::Approx(0.904508497187474).epsilon(1e-13));
    const UnitaryCayleyGraph g22(22);
    CHECK(fidelity(g22, 2.0 * kPi / 11.0, 0, 11) ==
          doctest::Approx(0.292292493499057).epsilon(1e-13));
    const UnitaryCayleyGraph g6(6);
    CHECK(fidelity(g6, 2.0 * kPi / 3.0, 0, 3) == doctest::Approx(0.75).epsilon(1e-13));
    // Away from revival the fidelity is still |U_{v,u}|^2.
    const AmplitudePair a = amplitude(g6, Hamiltonian::adjacency, 1.1, 0, 3);
    CHECK(fidelity(g6, 1.1, 0, 3) == doctest::Approx(std::norm(a.beta)).epsilon(1e-14));
}

TEST_CASE("usefulness: more than half the mass crosses exactly for p in {3, 5, 7}") {
    std::vector<std::uint64_t> useful;
    for (std::uint64_t p = 3; p <= 101; ++p) {
        if (!num::is_odd_prime(p)) continue;
        if (useful_for_communication(p)) useful.push_back(p);
    }
    CHECK(useful == std::vector<std::uint64_t>{3, 5, 7});
    CHECK_THROWS_AS(useful_for_communication(4), std::domain_error);
}

TEST_CASE("beam splitter block: n = 6 revival") {
    const UnitaryCayleyGraph g(6);
    const BeamSplitterBlock b = beam_splitter_block(g, 2.0 * kPi / 3.0, 0, 3);
    const double s = std::sqrt(3.0) / 2.0;
    CHECK(std::abs(b.entries[0] - cdouble{-0.5, 0.0}) <= 1e-12);
    CHECK(std::abs(b.entries[1] - cdouble{0.0, -s}) <= 1e-12);
    CHECK(std::abs(b.entries[2] - cdouble{0.0, -s}) <= 1e-12);
    CHECK(std::abs(b.entries[3] - cdouble{-0.5, 0.0}) <= 1e-12);
    CHECK(b.transmissivity == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(b.reflectivity == doctest::Approx(0.25).epsilon(1e-13));
    CHECK_FALSE(b.confinement_warning);
    CHECK(b.transmissivity + b.reflectivity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("beam splitter block: n = 2 swap, phase pinned by the dense oracle") {
    const UnitaryCayleyGraph g(2);
    const BeamSplitterBlock b = beam_splitter_block(g, kPi / 2.0, 0, 1);
    const oracle::Matrix u = oracle::dense_propagator(g, Hamiltonian::adjacency, kPi / 2.0);
    CHECK(std::abs(b.entries[0] - u.at(0, 0)) <= 1e-10);
    CHECK(std::abs(b.entries[1] - u.at(0, 1)) <= 1e-10);
    CHECK(std::abs(b.entries[2] - u.at(1, 0)) <= 1e-10);
    CHECK(std::abs(b.entries[3] - u.at(1, 1)) <= 1e-10);
    CHECK(std::abs(b.entries[1] - cdouble{0.0, 1.0}) <= 1e-10);
    CHECK(std::abs(b.entries[2] - cdouble{0.0, 1.0}) <= 1e-10);
    CHECK(b.transmissivity == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("beam splitter block: leaky times carry a confinement warning") {
    const UnitaryCayleyGraph g(6);
    const BeamSplitterBlock warned = beam_splitter_block(g, 1.0, 0, 3);
    CHECK(warned.confinement_warning);
    const BeamSplitterBlock clean = beam_splitter_block(g, 2.0 * kPi / 3.0, 0, 3);
    CHECK_FALSE(clean.confinement_warning);
}

TEST_CASE("entropy trend: maximum at p = 7, then strictly decreasing") {
    const auto trend = entropy_trend(101);
    REQUIRE(!trend.empty());
    CHECK(trend.front().first == 3);
    CHECK(trend.back().first == 101);

    std::uint64_t argmax = 0;
    double best = -1.0;
    for (const auto& [p, s] : trend) {
        if (s > best) { best = s; argmax = p; }
    }
    CHECK(argmax == 7);
    CHECK(best == doctest::Approx(0.963981305616145).epsilon(1e-12));

    // Strictly decreasing from p = 11 on.
    double prev = 2.0;
    for (const auto& [p, s] : trend) {
        if (p < 11) continue;
        CHECK(s < prev);
        prev = s;
    }
    CHECK(trend.back().second == doctest::Approx(0.036544933778502).epsilon(1e-12));
    CHECK(trend.back().second < 0.1);
}

TEST_CASE("metrics record ties the pieces together") {
    const UnitaryCayleyGraph g(10);
    const auto events = scan_revivals(g, Hamiltonian::adjacency, 0, 5, {});
    REQUIRE(!events.empty());
    const QfrEvent first = events.front();
    const MetricsRecord rec = metrics_record(g, first);
    CHECK(rec.entropy_bits == doctest::Approx(entropy_2p(5)).epsilon(1e-10));
    CHECK(rec.fidelity == doctest::Approx(0.904508497187474).epsilon(1e-10));
    CHECK(rec.useful);
    CHECK(rec.block.transmissivity == doctest::Approx(rec.fidelity).epsilon(1e-12));
    CHECK_FALSE(rec.block.confinement_warning);

    // A p = 11 revival transfers less than half the mass.
    const UnitaryCayleyGraph g22(22);
    const auto events22 = scan_revivals(g22, Hamiltonian::adjacency, 0, 11, {});
    REQUIRE(!events22.empty());
    const MetricsRecord rec22 = metrics_record(g22, events22.front());
    CHECK(rec22.fidelity == doctest::Approx(0.292292493499057).epsilon(1e-9));
    CHECK_FALSE(rec22.useful);
}
