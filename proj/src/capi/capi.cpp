#include "qfrlab/qfrlab.h"

#include <algorithm>
#include <complex>
#include <cstring>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/cospectral.hpp"
#include "core/evolution.hpp"
#include "core/graph.hpp"
#include "core/metrics.hpp"
#include "core/numbers.hpp"
#include "core/revival.hpp"
#include "core/spectrum.hpp"

struct qfr_graph {
    qfr::UnitaryCayleyGraph impl;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* message) { t_last_error = message ? message : ""; }

qfr_status fail_null(const char* what) {
    t_last_error = std::string("null pointer: ") + what;
    return QFR_ERR_NULL;
}

// Runs the body with the exception boundary every entry point shares.
template <typename F>
qfr_status guarded(F&& body) {
    try {
        return body();
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return QFR_ERR_DOMAIN;
    } catch (const std::bad_alloc&) {
        set_error("allocation failure");
        return QFR_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QFR_ERR_INTERNAL;
    } catch (...) {
        set_error("unexpected exception");
        return QFR_ERR_INTERNAL;
    }
}

qfr::Hamiltonian to_cpp(qfr_hamiltonian h) {
    switch (h) {
        case QFR_HAMILTONIAN_ADJACENCY: return qfr::Hamiltonian::adjacency;
        case QFR_HAMILTONIAN_LAPLACIAN: return qfr::Hamiltonian::laplacian;
    }
    throw std::domain_error("invalid hamiltonian tag");
}

int to_c(qfr::EventKind kind) {
    switch (kind) {
        case qfr::EventKind::pst: return QFR_EVENT_PST;
        case qfr::EventKind::balanced: return QFR_EVENT_BALANCED;
        case qfr::EventKind::proper: return QFR_EVENT_PROPER;
        case qfr::EventKind::periodic_return: return QFR_EVENT_PERIODIC_RETURN;
    }
    throw std::domain_error("invalid event kind");
}

qfr_complex to_c(std::complex<double> z) { return {z.real(), z.imag()}; }

qfr_event to_c(const qfr::QfrEvent& ev) {
    qfr_event out;
    out.t = ev.t;
    out.u = ev.u;
    out.v = ev.v;
    out.alpha = to_c(ev.alpha);
    out.beta = to_c(ev.beta);
    out.kind = to_c(ev.kind);
    out.leak = ev.leak;
    return out;
}

qfr::ScanConfig to_cpp(const qfr_scan_config* cfg) {
    qfr::ScanConfig out;
    if (cfg) {
        out.t_max = cfg->t_max;
        out.grid_points = cfg->grid_points;
        out.detect_tol = cfg->detect_tol;
        out.refine_tol = cfg->refine_tol;
        out.threads = cfg->threads;
    }
    return out;
}

// Shared two-call buffer protocol: report the requirement, then copy.
template <typename T>
qfr_status fill_buffer(const std::vector<T>& src, T* buf, size_t cap,
                       size_t* measure) {
    if (!measure) return fail_null("size out-parameter");
    *measure = src.size();
    if (!buf) return QFR_OK;
    if (cap < src.size()) {
        set_error("buffer too small");
        return QFR_ERR_BUFFER;
    }
    std::copy(src.begin(), src.end(), buf);
    return QFR_OK;
}

}  // namespace

qfr_status qfr_gcd(uint64_t a, uint64_t b, uint64_t* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::num::gcd(a, b);
        return QFR_OK;
    });
}

qfr_status qfr_euler_phi(uint64_t n, uint64_t* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::num::euler_phi(n);
        return QFR_OK;
    });
}

qfr_status qfr_mobius(uint64_t n, int32_t* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = static_cast<int32_t>(qfr::num::mobius(n));
        return QFR_OK;
    });
}

qfr_status qfr_ramanujan_sum(uint64_t k, uint64_t n, int64_t* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::num::ramanujan_sum(k, n);
        return QFR_OK;
    });
}

int qfr_is_odd_prime(uint64_t p) { return qfr::num::is_odd_prime(p) ? 1 : 0; }

qfr_status qfr_graph_create(uint64_t n, qfr_graph** out) {
    if (!out) return fail_null("out");
    *out = nullptr;
    return guarded([&] {
        *out = new qfr_graph{qfr::UnitaryCayleyGraph(n)};
        return QFR_OK;
    });
}

void qfr_graph_destroy(qfr_graph* g) { delete g; }

uint64_t qfr_graph_order(const qfr_graph* g) { return g ? g->impl.order() : 0; }

uint64_t qfr_graph_degree(const qfr_graph* g) { return g ? g->impl.degree() : 0; }

qfr_status qfr_graph_connection_set(const qfr_graph* g, uint64_t* buf, size_t cap,
                                    size_t* required) {
    if (!g) return fail_null("graph");
    return guarded([&] { return fill_buffer(g->impl.connection_set(), buf, cap, required); });
}

qfr_status qfr_graph_adjacent(const qfr_graph* g, uint64_t u, uint64_t v, int* out) {
    if (!g) return fail_null("graph");
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = g->impl.adjacent(u, v) ? 1 : 0;
        return QFR_OK;
    });
}

qfr_status qfr_graph_to_dot(const qfr_graph* g, char* buf, size_t cap,
                            size_t* required) {
    if (!g) return fail_null("graph");
    if (!required) return fail_null("required");
    return guarded([&] {
        const std::string dot = g->impl.to_dot();
        *required = dot.size() + 1;
        if (!buf) return QFR_OK;
        if (cap < dot.size() + 1) {
            set_error("buffer too small");
            return QFR_ERR_BUFFER;
        }
        std::memcpy(buf, dot.c_str(), dot.size() + 1);
        return QFR_OK;
    });
}

qfr_status qfr_spectrum(const qfr_graph* g, qfr_hamiltonian h, int64_t* buf,
                        size_t cap, size_t* required) {
    if (!g) return fail_null("graph");
    return guarded([&] {
        const qfr::Spectrum s = (to_cpp(h) == qfr::Hamiltonian::adjacency)
                                    ? qfr::adjacency_spectrum(g->impl)
                                    : qfr::laplacian_spectrum(g->impl);
        return fill_buffer(s.values, buf, cap, required);
    });
}

qfr_status qfr_amplitude(const qfr_graph* g, qfr_hamiltonian h, double t,
                         uint64_t u, uint64_t v, qfr_complex* alpha,
                         qfr_complex* beta) {
    if (!g) return fail_null("graph");
    if (!alpha) return fail_null("alpha");
    if (!beta) return fail_null("beta");
    return guarded([&] {
        const qfr::AmplitudePair a = qfr::amplitude(g->impl, to_cpp(h), t, u, v);
        *alpha = to_c(a.alpha);
        *beta = to_c(a.beta);
        return QFR_OK;
    });
}

qfr_status qfr_transition_row(const qfr_graph* g, qfr_hamiltonian h, double t,
                              uint64_t u, qfr_complex* buf, size_t cap,
                              size_t* required) {
    if (!g) return fail_null("graph");
    return guarded([&] {
        const auto row = qfr::transition_row(g->impl, to_cpp(h), t, u);
        std::vector<qfr_complex> converted(row.size());
        for (size_t k = 0; k < row.size(); ++k) converted[k] = to_c(row[k]);
        return fill_buffer(converted, buf, cap, required);
    });
}

qfr_status qfr_leak(const qfr_graph* g, qfr_hamiltonian h, double t, uint64_t u,
                    uint64_t v, double* out) {
    if (!g) return fail_null("graph");
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::leak(g->impl, to_cpp(h), t, u, v);
        return QFR_OK;
    });
}

qfr_status qfr_check(const qfr_graph* g, qfr_hamiltonian h, double t, uint64_t u,
                     uint64_t v, double tol, int* found, qfr_event* ev) {
    if (!g) return fail_null("graph");
    if (!found) return fail_null("found");
    return guarded([&] {
        const std::optional<qfr::QfrEvent> hit =
            qfr::check_qfr(g->impl, to_cpp(h), t, u, v, tol);
        *found = hit.has_value() ? 1 : 0;
        if (hit && ev) *ev = to_c(*hit);
        return QFR_OK;
    });
}

qfr_status qfr_revival_time_2p(uint64_t p, double* t_star, qfr_complex* alpha,
                               qfr_complex* beta) {
    if (!t_star) return fail_null("t_star");
    return guarded([&] {
        const qfr::RevivalClosedForm r = qfr::revival_time_2p(p);
        *t_star = r.t_star;
        if (alpha) *alpha = to_c(r.alpha);
        if (beta) *beta = to_c(r.beta);
        return QFR_OK;
    });
}

qfr_status qfr_period(const qfr_graph* g, qfr_hamiltonian h, double* out) {
    if (!g) return fail_null("graph");
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::period(g->impl, to_cpp(h));
        return QFR_OK;
    });
}

qfr_status qfr_scan(const qfr_graph* g, qfr_hamiltonian h, uint64_t u, uint64_t v,
                    const qfr_scan_config* cfg, qfr_event* buf, size_t cap,
                    size_t* count) {
    if (!g) return fail_null("graph");
    return guarded([&] {
        const auto events = qfr::scan_revivals(g->impl, to_cpp(h), u, v, to_cpp(cfg));
        std::vector<qfr_event> converted(events.size());
        for (size_t k = 0; k < events.size(); ++k) converted[k] = to_c(events[k]);
        return fill_buffer(converted, buf, cap, count);
    });
}

qfr_status qfr_classify_even(uint64_t n, const qfr_scan_config* cfg,
                             int* classification, int* has_event, qfr_event* ev) {
    if (!classification) return fail_null("classification");
    if (!has_event) return fail_null("has_event");
    return guarded([&] {
        const qfr::Classification result = qfr::classify_even_n(n, to_cpp(cfg));
        switch (result.category) {
            case qfr::Classification::Category::none:
                *classification = QFR_CLASS_NONE;
                break;
            case qfr::Classification::Category::pst:
                *classification = QFR_CLASS_PST;
                break;
            case qfr::Classification::Category::proper_qfr:
                *classification = QFR_CLASS_PROPER_QFR;
                break;
        }
        *has_event = result.event.has_value() ? 1 : 0;
        if (result.event && ev) *ev = to_c(*result.event);
        return QFR_OK;
    });
}

qfr_status qfr_pst_family_check(uint64_t n, const qfr_scan_config* cfg, int* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::pst_family_check(n, to_cpp(cfg)) ? 1 : 0;
        return QFR_OK;
    });
}

qfr_status qfr_strongly_cospectral(const qfr_graph* g, uint64_t u, uint64_t v,
                                   int* out) {
    if (!g) return fail_null("graph");
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::is_strongly_cospectral(g->impl, u, v) ? 1 : 0;
        return QFR_OK;
    });
}

qfr_status qfr_cospectral_pairs(const qfr_graph* g, qfr_cospectral_method method,
                                uint64_t* buf, size_t cap_pairs,
                                size_t* count_pairs) {
    if (!g) return fail_null("graph");
    if (!count_pairs) return fail_null("count_pairs");
    return guarded([&] {
        qfr::CospectralMethod m;
        switch (method) {
            case QFR_COSPECTRAL_IDEMPOTENT:
                m = qfr::CospectralMethod::idempotent_bruteforce;
                break;
            case QFR_COSPECTRAL_ANTIPODAL:
                m = qfr::CospectralMethod::antipodal_formula;
                break;
            default:
                throw std::domain_error("invalid cospectral method tag");
        }
        const qfr::CospectralReport report = qfr::enumerate_pairs(g->impl, m);
        *count_pairs = report.pairs.size();
        if (!buf) return QFR_OK;
        if (cap_pairs < report.pairs.size()) {
            set_error("buffer too small");
            return QFR_ERR_BUFFER;
        }
        for (size_t k = 0; k < report.pairs.size(); ++k) {
            buf[2 * k] = report.pairs[k].first;
            buf[2 * k + 1] = report.pairs[k].second;
        }
        return QFR_OK;
    });
}

qfr_status qfr_entropy(qfr_complex alpha, qfr_complex beta, double* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::entropy({alpha.re, alpha.im}, {beta.re, beta.im});
        return QFR_OK;
    });
}

qfr_status qfr_binary_entropy(double x, double* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::binary_entropy(x);
        return QFR_OK;
    });
}

qfr_status qfr_entropy_2p(uint64_t p, double* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::entropy_2p(p);
        return QFR_OK;
    });
}

qfr_status qfr_fidelity(const qfr_graph* g, double t, uint64_t u, uint64_t v,
                        double* out) {
    if (!g) return fail_null("graph");
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::fidelity(g->impl, t, u, v);
        return QFR_OK;
    });
}

qfr_status qfr_useful_for_communication(uint64_t p, int* out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = qfr::useful_for_communication(p) ? 1 : 0;
        return QFR_OK;
    });
}

qfr_status qfr_beam_splitter_block(const qfr_graph* g, double t, uint64_t u,
                                   uint64_t v, qfr_complex entries[4],
                                   double* transmissivity, double* reflectivity,
                                   int* confinement_warning) {
    if (!g) return fail_null("graph");
    if (!entries) return fail_null("entries");
    return guarded([&] {
        const qfr::BeamSplitterBlock b = qfr::beam_splitter_block(g->impl, t, u, v);
        for (size_t k = 0; k < 4; ++k) entries[k] = to_c(b.entries[k]);
        if (transmissivity) *transmissivity = b.transmissivity;
        if (reflectivity) *reflectivity = b.reflectivity;
        if (confinement_warning) *confinement_warning = b.confinement_warning ? 1 : 0;
        return QFR_OK;
    });
}

const char* qfr_last_error_message(void) { return t_last_error.c_str(); }

const char* qfr_version(void) { return "0.1.0"; }
