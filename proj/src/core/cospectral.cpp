#include "core/cospectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "core/spectrum.hpp"

namespace qfr {

namespace {

void check_pair(const UnitaryCayleyGraph& g, std::uint64_t u, std::uint64_t v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::domain_error("cospectrality needs two distinct vertices");
}

}  // namespace

bool is_strongly_cospectral(const UnitaryCayleyGraph& g, std::uint64_t u,
                            std::uint64_t v) {
    check_pair(g, u, v);
    const std::uint64_t n = g.order();
    const std::uint64_t d = (v + n - u) % n;
    const Spectrum spec = adjacency_spectrum(g);
    for (const auto& cls : spec.classes) {
        int common = 0;
        for (const std::size_t kappa : cls) {
            const std::uint64_t r = d * kappa % n;
            // w^{d kappa} must be real: 2 d kappa = 0 mod n.
            if (2 * r % n != 0) return false;
            const int sign = (r == 0) ? 1 : -1;
            if (common == 0) common = sign;
            else if (common != sign) return false;
        }
    }
    return true;
}

bool is_strongly_cospectral_idempotent(const UnitaryCayleyGraph& g,
                                       std::uint64_t u, std::uint64_t v) {
    check_pair(g, u, v);
    constexpr double tol = 1e-10;
    const std::uint64_t n = g.order();
    for (const Idempotent& proj : idempotents(adjacency_spectrum(g))) {
        // Compare columns E e_u and E e_v; the sign comes from the first
        // entry that is clearly nonzero, then must hold everywhere.
        std::vector<std::complex<double>> x(n), y(n);
        for (std::uint64_t k = 0; k < n; ++k) {
            x[k] = proj.entry(k, u);
            y[k] = proj.entry(k, v);
        }
        double sign = 0.0;
        for (std::uint64_t k = 0; k < n; ++k) {
            if (std::abs(y[k]) > tol) {
                sign = (std::abs(x[k] - y[k]) <= std::abs(x[k] + y[k])) ? 1.0 : -1.0;
                break;
            }
        }
        if (sign == 0.0) continue;  // zero column, nothing to constrain
        for (std::uint64_t k = 0; k < n; ++k)
            if (std::abs(x[k] - sign * y[k]) > tol) return false;
    }
    return true;
}

CospectralReport enumerate_pairs(const UnitaryCayleyGraph& g, CospectralMethod method) {
    CospectralReport report;
    report.n = g.order();
    report.method = method;
    const std::uint64_t n = g.order();
    if (method == CospectralMethod::antipodal_formula) {
        if (n % 2 == 0)
            for (std::uint64_t k = 0; k < n / 2; ++k)
                report.pairs.emplace_back(k, k + n / 2);
        return report;
    }
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t v = u + 1; v < n; ++v)
            if (is_strongly_cospectral_idempotent(g, u, v))
                report.pairs.emplace_back(u, v);
    return report;
}

}  // namespace qfr
