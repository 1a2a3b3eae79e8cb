#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/graph.hpp"

// Strong cospectrality: u and v are strongly cospectral when every spectral
// projector E satisfies E e_u = +/- E e_v. For circulants on Z_n this reduces
// to integer arithmetic: with d = v - u, each class index kappa must give
// w^{d kappa} in {+1, -1}, constant within its eigenvalue class. On these
// graphs the strongly cospectral pairs are exactly the antipodal ones.

namespace qfr {

enum class CospectralMethod { idempotent_bruteforce, antipodal_formula };

// Exact integer criterion. Throws std::domain_error when u == v or out of range.
bool is_strongly_cospectral(const UnitaryCayleyGraph& g, std::uint64_t u,
                            std::uint64_t v);

// Floating-point check on the merged projector columns; tolerance 1e-10.
// Cross-validates the integer criterion.
bool is_strongly_cospectral_idempotent(const UnitaryCayleyGraph& g,
                                       std::uint64_t u, std::uint64_t v);

struct CospectralReport {
    std::uint64_t n = 0;
    CospectralMethod method = CospectralMethod::antipodal_formula;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // u < v, sorted
};

CospectralReport enumerate_pairs(const UnitaryCayleyGraph& g, CospectralMethod method);

}  // namespace qfr
