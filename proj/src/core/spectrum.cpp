#include "core/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "core/numbers.hpp"

namespace qfr {

namespace {

std::vector<std::vector<std::size_t>> group_classes(const std::vector<std::int64_t>& values) {
    std::map<std::int64_t, std::vector<std::size_t>, std::greater<>> groups;
    for (std::size_t k = 0; k < values.size(); ++k) groups[values[k]].push_back(k);
    std::vector<std::vector<std::size_t>> classes;
    classes.reserve(groups.size());
    for (auto& [value, indices] : groups) classes.push_back(std::move(indices));
    return classes;
}

}  // namespace

Spectrum adjacency_spectrum(const UnitaryCayleyGraph& g) {
    Spectrum s;
    s.hamiltonian = Hamiltonian::adjacency;
    s.order = g.order();
    s.values = num::ramanujan_row(g.order());
    s.classes = group_classes(s.values);
    return s;
}

Spectrum laplacian_spectrum(const UnitaryCayleyGraph& g) {
    Spectrum s;
    s.hamiltonian = Hamiltonian::laplacian;
    s.order = g.order();
    s.values = num::ramanujan_row(g.order());
    const auto degree = static_cast<std::int64_t>(g.degree());
    for (auto& v : s.values) v = degree - v;
    s.classes = group_classes(s.values);
    return s;
}

std::complex<double> Idempotent::entry(std::size_t j, std::size_t k) const {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(order);
    const std::uint64_t d = (static_cast<std::uint64_t>(j) % order + order -
                             static_cast<std::uint64_t>(k) % order) % order;
    std::complex<double> sum{0.0, 0.0};
    for (const std::size_t kappa : indices)
        sum += std::polar(1.0, step * static_cast<double>(d * kappa % order));
    return sum / static_cast<double>(order);
}

std::vector<Idempotent> idempotents(const Spectrum& s) {
    std::vector<Idempotent> out;
    out.reserve(s.classes.size());
    for (const auto& cls : s.classes)
        out.push_back(Idempotent{s.values[cls.front()], s.order, cls});
    return out;
}

Partition2p eigenvalue_partition_2p(std::uint64_t p) {
    if (!num::is_odd_prime(p))
        throw std::domain_error("eigenvalue_partition_2p: p must be an odd prime");
    const std::uint64_t n = 2 * p;
    const auto values = num::ramanujan_row(n);
    Partition2p part;
    part.index_zero = {0};
    part.index_p = {static_cast<std::size_t>(p)};
    for (std::size_t k = 1; k < n; ++k) {
        if (k == p) continue;
        if (std::gcd<std::uint64_t>(k, n) == 1) {
            part.unit_indices.push_back(k);
            part.unit_value = values[k];
        } else {
            part.half_indices.push_back(k);
            part.half_value = values[k];
        }
    }
    return part;
}

}  // namespace qfr
