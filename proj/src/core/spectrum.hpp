#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/graph.hpp"

// Integer spectra of unitary Cayley graphs.
//
// The adjacency eigenvalue at Fourier index k is the Ramanujan sum c(k, n);
// the Laplacian eigenvalue is phi(n) - c(k, n). Both are exact integers.
// Eigenvectors are the DFT characters, shared by every circulant on Z_n, so
// spectral projectors reduce to index classes and never need a dense solver.

namespace qfr {

enum class Hamiltonian { adjacency, laplacian };

struct Spectrum {
    Hamiltonian hamiltonian;
    std::uint64_t order;
    // values[k] is the eigenvalue at Fourier index k.
    std::vector<std::int64_t> values;
    // Indices grouped by equal eigenvalue, classes ordered by decreasing
    // eigenvalue, indices increasing within a class.
    std::vector<std::vector<std::size_t>> classes;
};

Spectrum adjacency_spectrum(const UnitaryCayleyGraph& g);
Spectrum laplacian_spectrum(const UnitaryCayleyGraph& g);

// Spectral projector onto one eigenvalue class, kept in lazy form:
// entry(j, k) = (1/n) sum over class indices of w^{(j-k) kappa}, w = e^{2 pi i / n}.
struct Idempotent {
    std::int64_t eigenvalue;
    std::uint64_t order;
    std::vector<std::size_t> indices;

    std::complex<double> entry(std::size_t j, std::size_t k) const;
};

// One projector per distinct eigenvalue, same order as spectrum.classes.
std::vector<Idempotent> idempotents(const Spectrum& s);

// Adjacency index classes for order 2p, p an odd prime. The closed form
// assigns +1 to the odd indices other than p and -1 to the even indices
// other than 0; the labels carry the computed values rather than assuming
// them.
struct Partition2p {
    std::vector<std::size_t> index_zero;   // {0},  eigenvalue p - 1
    std::vector<std::size_t> index_p;      // {p},  eigenvalue -(p - 1)
    std::int64_t unit_value;               // eigenvalue on indices coprime to 2p
    std::vector<std::size_t> unit_indices;
    std::int64_t half_value;               // eigenvalue on even indices != 0
    std::vector<std::size_t> half_indices;
};

// Throws std::domain_error unless p is an odd prime.
Partition2p eigenvalue_partition_2p(std::uint64_t p);

}  // namespace qfr
