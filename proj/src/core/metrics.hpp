#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/revival.hpp"

// Communication figures of merit for a revival event. A confined pair acts
// as a 2x2 beam splitter with transmissivity |beta|^2; the split entropy
// S = H(|beta|^2) (binary entropy, bits) measures how balanced it is, and a
// transfer is deemed useful when more than half the mass crosses.

namespace qfr {

// H(|beta|^2) in bits. Throws std::domain_error unless |alpha|^2 + |beta|^2
// equals 1 within 1e-9.
double entropy(std::complex<double> alpha, std::complex<double> beta);

// Binary entropy with the 0 log 0 = 0 convention below 1e-15.
double binary_entropy(double x);

// Entropy of the earliest revival of the order-2p family:
// H(sin^2(2 pi / p)). Throws std::domain_error unless p is an odd prime.
double entropy_2p(std::uint64_t p);

// |U_A(t)_{v,u}|^2.
double fidelity(const UnitaryCayleyGraph& g, double t, std::uint64_t u,
                std::uint64_t v);

// sin^2(2 pi / p) > 1/2. Throws std::domain_error unless p is an odd prime.
bool useful_for_communication(std::uint64_t p);

struct BeamSplitterBlock {
    // Row-major [[U_uu, U_uv], [U_vu, U_vv]], adjacency propagator.
    std::array<std::complex<double>, 4> entries;
    double transmissivity = 0.0;  // |U_vu|^2
    double reflectivity = 0.0;    // |U_uu|^2
    // Set when leak(t) > 1e-6: the block is not close to unitary.
    bool confinement_warning = false;
};

BeamSplitterBlock beam_splitter_block(const UnitaryCayleyGraph& g, double t,
                                      std::uint64_t u, std::uint64_t v);

// (p, entropy_2p(p)) for every odd prime p <= p_max.
std::vector<std::pair<std::uint64_t, double>> entropy_trend(std::uint64_t p_max);

struct MetricsRecord {
    double entropy_bits = 0.0;
    double fidelity = 0.0;
    bool useful = false;  // fidelity > 1/2
    BeamSplitterBlock block;
};

MetricsRecord metrics_record(const UnitaryCayleyGraph& g, const QfrEvent& event);

}  // namespace qfr
