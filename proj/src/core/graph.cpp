#include "core/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "core/numbers.hpp"

namespace qfr {

UnitaryCayleyGraph::UnitaryCayleyGraph(std::uint64_t n) : n_(n) {
    if (n < 2) throw std::domain_error("UnitaryCayleyGraph: order must be >= 2");
    for (std::uint64_t s = 1; s < n; ++s)
        if (std::gcd(s, n) == 1) units_.push_back(s);
}

bool UnitaryCayleyGraph::adjacent(std::uint64_t u, std::uint64_t v) const {
    const std::uint64_t d = (v % n_ + n_ - u % n_) % n_;
    return d != 0 && std::gcd(d, n_) == 1;
}

void UnitaryCayleyGraph::check_vertex(std::uint64_t v) const {
    if (v >= n_) throw std::domain_error("vertex out of range");
}

std::string UnitaryCayleyGraph::to_dot() const {
    std::vector<std::string> edges;
    for (std::uint64_t u = 0; u < n_; ++u)
        for (std::uint64_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                edges.push_back(std::to_string(u) + " -- " + std::to_string(v) + ";");
    std::sort(edges.begin(), edges.end());
    std::string out = "graph X {";
    for (const auto& e : edges) { out += ' '; out += e; }
    out += " }\n";
    return out;
}

}  // namespace qfr
