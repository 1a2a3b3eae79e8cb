#include "core/revival.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "core/numbers.hpp"

namespace qfr {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

EventKind classify_amplitudes(const AmplitudePair& a, double tol) {
    const double abs_alpha = std::abs(a.alpha);
    const double abs_beta = std::abs(a.beta);
    if (abs_beta * abs_beta <= tol) return EventKind::periodic_return;
    if (abs_alpha <= tol) return EventKind::pst;
    if (std::abs(abs_alpha - abs_beta) <= tol) return EventKind::balanced;
    return EventKind::proper;
}

QfrEvent make_event(const PairPropagator& prop, double t, double tol) {
    const AmplitudePair a = prop.eval(t);
    QfrEvent ev;
    ev.t = t;
    ev.u = a.u;
    ev.v = a.v;
    ev.alpha = a.alpha;
    ev.beta = a.beta;
    ev.kind = classify_amplitudes(a, tol);
    ev.leak = prop.leak(t);
    return ev;
}

template <typename F>
double golden_section(const F& f, double lo, double hi, double width_tol) {
    constexpr double inv_golden = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_golden * (b - a);
    double x2 = a + inv_golden * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > width_tol) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_golden * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_golden * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// Minimise leak inside [lo, hi]. Golden-section narrows the bracket to
// refine_tol; because revival times are double roots of leak, function-value
// comparisons go noise-blind around 1e-8 of the minimiser, so the result is
// polished by bisecting the analytic slope of |alpha|^2 + |beta|^2, which
// crosses zero simply there.
double refine_minimum(const PairPropagator& prop, double lo, double hi,
                      double refine_tol) {
    double mid = golden_section([&](double t) { return prop.leak(t); },
                                lo, hi, refine_tol);
    double pa = lo, pb = hi;
    double sa = prop.confinement_slope(pa);
    double sb = prop.confinement_slope(pb);
    // leak minimal <=> confined mass maximal <=> slope falls through zero.
    if (sa > 0.0 && sb < 0.0) {
        for (int i = 0; i < 80 && pb - pa > 1e-15; ++i) {
            const double m = 0.5 * (pa + pb);
            const double sm = prop.confinement_slope(m);
            if (sm >= 0.0) pa = m; else pb = m;
        }
        mid = 0.5 * (pa + pb);
    }
    return mid;
}

// Same job for an objective with no analytic slope: the polish bisects a
// central-difference slope instead, reliable well past the golden-section
// noise floor of double roots.
template <typename F>
double refine_minimum_fd(const F& f, double lo, double hi, double refine_tol) {
    double mid = golden_section(f, lo, hi, refine_tol);
    constexpr double h = 1e-6;
    const auto slope = [&](double t) { return (f(t + h) - f(t - h)) / (2.0 * h); };
    double pa = lo, pb = hi;
    if (slope(pa) < 0.0 && slope(pb) > 0.0) {
        for (int i = 0; i < 80 && pb - pa > 1e-15; ++i) {
            const double m = 0.5 * (pa + pb);
            if (slope(m) <= 0.0) pa = m; else pb = m;
        }
        mid = 0.5 * (pa + pb);
    }
    return mid;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace

ScanConfig ScanConfig::resolved() const {
    ScanConfig c = *this;
    if (c.t_max == 0.0) c.t_max = two_pi;
    if (c.grid_points == 0) c.grid_points = 100000;
    if (c.detect_tol == 0.0) c.detect_tol = 1e-9;
    if (c.refine_tol == 0.0) c.refine_tol = 1e-12;
    if (c.t_max < 0.0 || c.detect_tol < 0.0 || c.refine_tol < 0.0)
        throw std::domain_error("ScanConfig: negative bound or tolerance");
    if (c.refine_tol > c.detect_tol)
        throw std::domain_error("ScanConfig: refine_tol must not exceed detect_tol");
    if (c.grid_points < 2) throw std::domain_error("ScanConfig: grid too coarse");
    c.threads = resolve_threads(c.threads);
    return c;
}

std::optional<QfrEvent> check_qfr(const UnitaryCayleyGraph& g, Hamiltonian h,
                                  double t, std::uint64_t u, std::uint64_t v,
                                  double tol) {
    if (u == v) throw std::domain_error("check_qfr: u and v must differ");
    if (tol < 0.0) throw std::domain_error("check_qfr: negative tolerance");
    const PairPropagator prop(g, h, u, v);
    if (prop.leak(t) > tol) return std::nullopt;
    QfrEvent ev = make_event(prop, t, tol);
    if (ev.kind == EventKind::periodic_return) return std::nullopt;
    return ev;
}

RevivalClosedForm revival_time_2p(std::uint64_t p) {
    if (!num::is_odd_prime(p))
        throw std::domain_error("revival_time_2p: p must be an odd prime");
    const double angle = two_pi / static_cast<double>(p);
    return {angle, {std::cos(angle), 0.0}, {0.0, -std::sin(angle)}};
}

double period(const UnitaryCayleyGraph& g, Hamiltonian h) {
    const Spectrum s =
        (h == Hamiltonian::adjacency) ? adjacency_spectrum(g) : laplacian_spectrum(g);
    std::set<std::int64_t> distinct(s.values.begin(), s.values.end());
    if (distinct.size() < 2)
        throw std::domain_error("period: spectrum has a single eigenvalue");
    // gcd of all pairwise differences equals gcd of differences to one anchor.
    const std::int64_t anchor = *distinct.begin();
    std::uint64_t g_all = 0;
    for (const std::int64_t v : distinct)
        g_all = std::gcd(g_all, static_cast<std::uint64_t>(std::llabs(v - anchor)));
    return two_pi / static_cast<double>(g_all);
}

std::vector<QfrEvent> scan_revivals(const UnitaryCayleyGraph& g, Hamiltonian h,
                                    std::uint64_t u, std::uint64_t v,
                                    const ScanConfig& cfg) {
    if (u == v) throw std::domain_error("scan_revivals: u and v must differ");
    const ScanConfig c = cfg.resolved();
    const PairPropagator prop(g, h, u, v);

    // Grid density: leak is a trigonometric polynomial with frequencies
    // bounded by 2 phi(n), so its zeros are at least pi / (2 phi(n)) apart
    // and a 1e5-point grid over 2 pi brackets every zero for phi(n) up to
    // ~2.5e4. Each bracketed local minimum is refined; the detect threshold
    // is applied to the refined value, since a grid sample of a true zero
    // can sit many orders above it.
    const std::uint64_t points = c.grid_points;
    const double dt = c.t_max / static_cast<double>(points);
    // One extra sample past t_max so a minimum at the right endpoint is
    // bracketed like any other.
    std::vector<double> leak_at(points + 2);
    leak_at[0] = prop.leak(0.0);

    const unsigned workers = resolve_threads(c.threads);
    const std::uint64_t total = points + 1;  // samples 1 .. points+1
    if (workers <= 1) {
        for (std::uint64_t j = 1; j <= total; ++j)
            leak_at[j] = prop.leak(static_cast<double>(j) * dt);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = 1 + w * chunk;
            const std::uint64_t hi = std::min(total, lo + chunk - 1);
            if (lo > hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::uint64_t j = lo; j <= hi; ++j)
                    leak_at[j] = prop.leak(static_cast<double>(j) * dt);
            });
        }
        for (auto& th : pool) th.join();
    }

    double worst = 0.0;
    for (const double x : leak_at) worst = std::max(worst, x);

    std::vector<QfrEvent> events;
    double last_t = -1.0;
    if (worst <= c.detect_tol) {
        // Fully confined pair (the two-vertex graph): the mass never leaves
        // {u, v} and leak minima carry no information. The isolated events
        // are the zeros of |alpha beta|^2 -- transfer peaks and returns.
        const auto product = [&](double t) {
            const AmplitudePair a = prop.eval(t);
            return std::norm(a.alpha) * std::norm(a.beta);
        };
        std::vector<double> prod_at(points + 2);
        for (std::uint64_t j = 0; j <= points + 1; ++j)
            prod_at[j] = product(static_cast<double>(j) * dt);
        for (std::uint64_t j = 1; j <= points; ++j) {
            if (!(prod_at[j] <= prod_at[j - 1] && prod_at[j] < prod_at[j + 1]))
                continue;
            const double lo = static_cast<double>(j - 1) * dt;
            const double hi = static_cast<double>(j + 1) * dt;
            double t_star = refine_minimum_fd(product, lo, hi, c.refine_tol);
            if (t_star > c.t_max) {
                if (t_star - c.t_max > dt) continue;
                t_star = c.t_max;
            }
            if (product(t_star) > c.detect_tol) continue;
            if (last_t >= 0.0 && t_star - last_t <= c.refine_tol) continue;
            events.push_back(make_event(prop, t_star, c.detect_tol));
            last_t = t_star;
        }
    } else {
        for (std::uint64_t j = 1; j <= points; ++j) {
            if (!(leak_at[j] <= leak_at[j - 1] && leak_at[j] < leak_at[j + 1]))
                continue;
            const double lo = static_cast<double>(j - 1) * dt;
            const double hi = static_cast<double>(j + 1) * dt;
            double t_star = refine_minimum(prop, lo, hi, c.refine_tol);
            if (t_star > c.t_max) {
                if (t_star - c.t_max > dt) continue;
                t_star = c.t_max;
            }
            if (prop.leak(t_star) > c.detect_tol) continue;
            if (last_t >= 0.0 && t_star - last_t <= c.refine_tol) continue;
            events.push_back(make_event(prop, t_star, c.detect_tol));
            last_t = t_star;
        }
    }
    std::sort(events.begin(), events.end(),
              [](const QfrEvent& a, const QfrEvent& b) { return a.t < b.t; });
    return events;
}

Classification classify_even_n(std::uint64_t n, const ScanConfig& cfg) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("classify_even_n: n must be even and >= 2");
    const UnitaryCayleyGraph g(n);
    const auto events = scan_revivals(g, Hamiltonian::adjacency, 0, n / 2, cfg);
    Classification out;
    for (const auto& ev : events) {
        if (ev.kind == EventKind::periodic_return) continue;
        out.category = (ev.kind == EventKind::pst) ? Classification::Category::pst
                                                   : Classification::Category::proper_qfr;
        out.event = ev;
        return out;
    }
    return out;
}

bool pst_family_check(std::uint64_t n, const ScanConfig& cfg) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("pst_family_check: n must be even and >= 2");
    const UnitaryCayleyGraph g(n);
    const auto events = scan_revivals(g, Hamiltonian::adjacency, 0, n / 2, cfg);
    return std::any_of(events.begin(), events.end(),
                       [](const QfrEvent& ev) { return ev.kind == EventKind::pst; });
}

}  // namespace qfr
