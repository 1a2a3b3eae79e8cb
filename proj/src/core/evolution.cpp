#include "core/evolution.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace qfr {

namespace {

// Compensated accumulator; the amplitude sums run over up to n unit-modulus
// terms and feed 1e-12 scale comparisons downstream.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

std::complex<double> phase_factor(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

PairPropagator::PairPropagator(const UnitaryCayleyGraph& g, Hamiltonian h,
                               std::uint64_t u, std::uint64_t v)
    : u_(u), v_(v) {
    g.check_vertex(u);
    g.check_vertex(v);
    const std::uint64_t n = g.order();
    const Spectrum spec = adjacency_spectrum(g);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    const std::uint64_t d = (v + n - u) % n;

    std::map<std::int64_t, double> alpha_groups;
    std::map<std::pair<std::int64_t, std::uint64_t>, double> beta_groups;
    for (std::uint64_t k = 0; k < n; ++k) {
        alpha_groups[spec.values[k]] += 1.0;
        beta_groups[{spec.values[k], d * k % n}] += 1.0;
    }
    for (const auto& [freq, weight] : alpha_groups)
        alpha_modes_.push_back({static_cast<double>(freq), 0.0, weight});
    for (const auto& [key, weight] : beta_groups)
        beta_modes_.push_back(
            {static_cast<double>(key.first), step * static_cast<double>(key.second), weight});

    inv_n_ = 1.0 / static_cast<double>(n);
    degree_ = static_cast<double>(g.degree());
    laplacian_ = (h == Hamiltonian::laplacian);
}

AmplitudePair PairPropagator::eval(double t) const {
    Kahan are, aim, bre, bim;
    for (const auto& m : alpha_modes_) {
        const double angle = m.freq * t;
        are.add(m.weight * std::cos(angle));
        aim.add(m.weight * std::sin(angle));
    }
    for (const auto& m : beta_modes_) {
        const double angle = m.freq * t + m.phase;
        bre.add(m.weight * std::cos(angle));
        bim.add(m.weight * std::sin(angle));
    }
    AmplitudePair out;
    out.t = t;
    out.u = u_;
    out.v = v_;
    out.alpha = std::complex<double>{are.sum, aim.sum} * inv_n_;
    out.beta = std::complex<double>{bre.sum, bim.sum} * inv_n_;
    if (laplacian_) {
        const std::complex<double> twist = phase_factor(-degree_ * t);
        out.alpha = twist * std::conj(out.alpha);
        out.beta = twist * std::conj(out.beta);
    }
    return out;
}

double PairPropagator::leak(double t) const {
    const AmplitudePair a = eval(t);
    const double mass = std::norm(a.alpha) + std::norm(a.beta);
    const double l = 1.0 - mass;
    if (l < 0.0) return 0.0;
    if (l > 1.0) return 1.0;
    return l;
}

double PairPropagator::confinement_slope(double t) const {
    // The tags share magnitudes, so differentiate the adjacency sums.
    Kahan are, aim, bre, bim, dare, daim, dbre, dbim;
    for (const auto& m : alpha_modes_) {
        const double angle = m.freq * t;
        const double c = std::cos(angle), s = std::sin(angle);
        are.add(m.weight * c);
        aim.add(m.weight * s);
        dare.add(m.weight * -m.freq * s);
        daim.add(m.weight * m.freq * c);
    }
    for (const auto& m : beta_modes_) {
        const double angle = m.freq * t + m.phase;
        const double c = std::cos(angle), s = std::sin(angle);
        bre.add(m.weight * c);
        bim.add(m.weight * s);
        dbre.add(m.weight * -m.freq * s);
        dbim.add(m.weight * m.freq * c);
    }
    return 2.0 * (are.sum * dare.sum + aim.sum * daim.sum + bre.sum * dbre.sum +
                  bim.sum * dbim.sum) * inv_n_ * inv_n_;
}

AmplitudePair amplitude(const UnitaryCayleyGraph& g, Hamiltonian h, double t,
                        std::uint64_t u, std::uint64_t v) {
    return PairPropagator(g, h, u, v).eval(t);
}

std::vector<std::complex<double>> transition_row(const UnitaryCayleyGraph& g,
                                                 Hamiltonian h, double t,
                                                 std::uint64_t u) {
    g.check_vertex(u);
    const std::uint64_t n = g.order();
    const Spectrum spec = adjacency_spectrum(g);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<std::complex<double>> row(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint64_t d = (k + n - u) % n;
        Kahan re, im;
        for (std::uint64_t kappa = 0; kappa < n; ++kappa) {
            const double angle = static_cast<double>(spec.values[kappa]) * t +
                                 step * static_cast<double>(d * kappa % n);
            re.add(std::cos(angle));
            im.add(std::sin(angle));
        }
        row[k] = std::complex<double>{re.sum, im.sum} / static_cast<double>(n);
    }
    if (h == Hamiltonian::laplacian) {
        const std::complex<double> twist =
            phase_factor(-static_cast<double>(g.degree()) * t);
        for (auto& entry : row) entry = twist * std::conj(entry);
    }
    return row;
}

double leak(const UnitaryCayleyGraph& g, Hamiltonian h, double t,
            std::uint64_t u, std::uint64_t v) {
    return PairPropagator(g, h, u, v).leak(t);
}

}  // namespace qfr
