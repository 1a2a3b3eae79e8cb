#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "core/graph.hpp"
#include "core/spectrum.hpp"

// Continuous-time walk amplitudes from the integer spectrum.
//
// With w = e^{2 pi i / n} and lambda_k the adjacency eigenvalue at index k,
// the adjacency propagator entry from u to v is
//
//     U(t)_{v,u} = (1/n) sum_k e^{i lambda_k t} w^{(v-u) k}.
//
// alpha(t) = U(t)_{u,u} (return amplitude), beta(t) = U(t)_{v,u} (transfer
// amplitude). The Laplacian propagator is tied to the adjacency one by a
// global phase and conjugation,
//
//     U_L(t)_{v,u} = e^{-i phi(n) t} * conj(U_A(t)_{v,u}),
//
// which is how the laplacian tag is evaluated here; no second spectrum sum
// exists outside the tests. Magnitudes agree between the two tags, so every
// revival quantity is tag independent.
//
// leak(t) = 1 - |alpha|^2 - |beta|^2, clamped to [0, 1]: the walker mass
// outside the pair {u, v}. Sums are compensated (Kahan) so tolerances stay
// honest for large n.

namespace qfr {

struct AmplitudePair {
    double t = 0.0;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    std::complex<double> alpha;
    std::complex<double> beta;
};

// Repeated amplitude evaluation for one (graph, tag, pair): terms with equal
// (eigenvalue, character angle) collapse to weighted frequencies, so one
// evaluation costs O(distinct frequencies), not O(n).
class PairPropagator {
  public:
    PairPropagator(const UnitaryCayleyGraph& g, Hamiltonian h,
                   std::uint64_t u, std::uint64_t v);

    AmplitudePair eval(double t) const;
    double leak(double t) const;
    // d/dt (|alpha|^2 + |beta|^2); zero where leak is minimal.
    double confinement_slope(double t) const;

  private:
    struct Mode { double freq; double phase; double weight; };
    std::vector<Mode> alpha_modes_;
    std::vector<Mode> beta_modes_;
    std::uint64_t u_, v_;
    double inv_n_;
    double degree_;
    bool laplacian_;
};

AmplitudePair amplitude(const UnitaryCayleyGraph& g, Hamiltonian h, double t,
                        std::uint64_t u, std::uint64_t v);

// Row u of the propagator: row[k] = U(t)_{k,u}.
std::vector<std::complex<double>> transition_row(const UnitaryCayleyGraph& g,
                                                 Hamiltonian h, double t,
                                                 std::uint64_t u);

double leak(const UnitaryCayleyGraph& g, Hamiltonian h, double t,
            std::uint64_t u, std::uint64_t v);

}  // namespace qfr
