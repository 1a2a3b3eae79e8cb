#include "core/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/evolution.hpp"
#include "core/numbers.hpp"

namespace qfr {

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: x outside [0, 1]");
    constexpr double floor = 1e-15;
    double s = 0.0;
    if (x > floor) s -= x * std::log2(x);
    if (1.0 - x > floor) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

double entropy(std::complex<double> alpha, std::complex<double> beta) {
    const double mass = std::norm(alpha) + std::norm(beta);
    if (std::abs(mass - 1.0) > 1e-9)
        throw std::domain_error("entropy: amplitudes are not normalised");
    double p = std::norm(beta);
    if (p > 1.0) p = 1.0;
    return binary_entropy(p);
}

double entropy_2p(std::uint64_t p) {
    if (!num::is_odd_prime(p))
        throw std::domain_error("entropy_2p: p must be an odd prime");
    const double s = std::sin(2.0 * std::numbers::pi / static_cast<double>(p));
    return binary_entropy(s * s);
}

double fidelity(const UnitaryCayleyGraph& g, double t, std::uint64_t u,
                std::uint64_t v) {
    return std::norm(amplitude(g, Hamiltonian::adjacency, t, u, v).beta);
}

bool useful_for_communication(std::uint64_t p) {
    if (!num::is_odd_prime(p))
        throw std::domain_error("useful_for_communication: p must be an odd prime");
    const double s = std::sin(2.0 * std::numbers::pi / static_cast<double>(p));
    return s * s > 0.5;
}

BeamSplitterBlock beam_splitter_block(const UnitaryCayleyGraph& g, double t,
                                      std::uint64_t u, std::uint64_t v) {
    const PairPropagator prop(g, Hamiltonian::adjacency, u, v);
    const AmplitudePair a = prop.eval(t);
    // The graph is vertex transitive and the propagator symmetric, so
    // U_vv = U_uu and U_uv = U_vu.
    BeamSplitterBlock block;
    block.entries = {a.alpha, a.beta, a.beta, a.alpha};
    block.reflectivity = std::norm(a.alpha);
    block.transmissivity = std::norm(a.beta);
    block.confinement_warning = prop.leak(t) > 1e-6;
    return block;
}

std::vector<std::pair<std::uint64_t, double>> entropy_trend(std::uint64_t p_max) {
    std::vector<std::pair<std::uint64_t, double>> out;
    for (const std::uint64_t p : num::odd_primes_up_to(p_max))
        out.emplace_back(p, entropy_2p(p));
    return out;
}

MetricsRecord metrics_record(const UnitaryCayleyGraph& g, const QfrEvent& event) {
    MetricsRecord rec;
    rec.entropy_bits = entropy(event.alpha, event.beta);
    rec.fidelity = std::norm(event.beta);
    rec.useful = rec.fidelity > 0.5;
    rec.block = beam_splitter_block(g, event.t, event.u, event.v);
    return rec;
}

}  // namespace qfr
