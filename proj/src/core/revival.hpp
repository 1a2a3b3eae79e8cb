#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/evolution.hpp"
#include "core/graph.hpp"
#include "core/spectrum.hpp"

// Revival detection. An event at time t on pair (u, v) means the walker mass
// is confined to {u, v}: leak(t) <= tol. Kinds:
//
//   pst              |alpha| <= tol, all mass transferred
//   balanced         ||alpha| - |beta|| <= tol, even split
//   proper           everything else with |beta|^2 > tol
//   periodic_return  |beta|^2 <= tol, the walker merely came home
//
// pst wins the pst/balanced tie-break. Scans keep periodic returns, tagged;
// check_qfr treats them as non-events.

namespace qfr {

enum class EventKind { pst, balanced, proper, periodic_return };

struct QfrEvent {
    double t = 0.0;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    std::complex<double> alpha;
    std::complex<double> beta;
    EventKind kind = EventKind::proper;
    double leak = 0.0;
};

struct ScanConfig {
    double t_max = 0.0;            // 0 -> 2 pi
    std::uint64_t grid_points = 0; // 0 -> 100000
    double detect_tol = 0.0;       // 0 -> 1e-9
    double refine_tol = 0.0;       // 0 -> 1e-12
    unsigned threads = 0;          // 0 -> available parallelism

    // Fills defaults; throws std::domain_error on nonsensical values
    // (negative tolerances, refine_tol > detect_tol, t_max < 0, one grid point).
    ScanConfig resolved() const;
};

// Event at a single time, or nullopt when leak > tol or |beta|^2 <= tol.
std::optional<QfrEvent> check_qfr(const UnitaryCayleyGraph& g, Hamiltonian h,
                                  double t, std::uint64_t u, std::uint64_t v,
                                  double tol);

// Closed-form earliest revival on the antipodal pair of the order-2p graph:
// t* = 2 pi / p, alpha = cos(2 pi / p), beta = -i sin(2 pi / p).
struct RevivalClosedForm {
    double t_star;
    std::complex<double> alpha;
    std::complex<double> beta;
};
RevivalClosedForm revival_time_2p(std::uint64_t p);

// Smallest T > 0 with U(T) proportional to the identity: 2 pi divided by the
// gcd of all pairwise eigenvalue differences. Throws std::domain_error when
// the spectrum has fewer than two distinct values.
double period(const UnitaryCayleyGraph& g, Hamiltonian h);

// Grid scan of leak over (0, t_max], every bracketed local minimum refined;
// events sorted by t, periodic returns included.
std::vector<QfrEvent> scan_revivals(const UnitaryCayleyGraph& g, Hamiltonian h,
                                    std::uint64_t u, std::uint64_t v,
                                    const ScanConfig& cfg = {});

// Antipodal-pair classification for even order.
struct Classification {
    enum class Category { none, pst, proper_qfr };
    Category category = Category::none;
    std::optional<QfrEvent> event;
};
Classification classify_even_n(std::uint64_t n, const ScanConfig& cfg = {});

// True iff the antipodal scan of the order-n graph contains a pst event.
bool pst_family_check(std::uint64_t n, const ScanConfig& cfg = {});

}  // namespace qfr
