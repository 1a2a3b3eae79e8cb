#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfr {

// Circulant graph on Z_n whose connection set is the units of Z_n:
// u ~ v iff gcd(v - u mod n, n) = 1. phi(n)-regular, vertex transitive,
// connected for every n >= 2.
class UnitaryCayleyGraph {
  public:
    // Throws std::domain_error for n < 2.
    explicit UnitaryCayleyGraph(std::uint64_t n);

    std::uint64_t order() const { return n_; }
    std::uint64_t degree() const { return static_cast<std::uint64_t>(units_.size()); }
    const std::vector<std::uint64_t>& connection_set() const { return units_; }

    // Vertices are taken mod n; adjacent(u, u) is false.
    bool adjacent(std::uint64_t u, std::uint64_t v) const;

    // DOT text, single line: "graph X { <edges> }\n" with one "u -- v;" per
    // edge (u < v), edge strings sorted lexicographically.
    std::string to_dot() const;

    // Throws std::domain_error if v >= n.
    void check_vertex(std::uint64_t v) const;

  private:
    std::uint64_t n_;
    std::vector<std::uint64_t> units_;
};

}  // namespace qfr
