#ifndef QFRLAB_H
#define QFRLAB_H

/* C interface to the unitary Cayley graph walk library.
 *
 * Conventions:
 *   - Every fallible call returns a qfr_status; QFR_OK is 0. On failure a
 *     thread-local message is set, readable via qfr_last_error_message().
 *   - Output buffers use a two-call pattern: pass NULL to query the required
 *     element count (written to the size out-parameter, status QFR_OK), then
 *     call again with a buffer of at least that capacity. A non-NULL buffer
 *     that is too small fails with QFR_ERR_BUFFER after writing the
 *     requirement.
 *   - Graphs are opaque handles; destroy them with qfr_graph_destroy.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QFRLAB_API __declspec(dllexport)
#else
#define QFRLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qfr_status {
    QFR_OK = 0,
    QFR_ERR_DOMAIN = 1,   /* invalid argument value */
    QFR_ERR_NULL = 2,     /* required pointer was NULL */
    QFR_ERR_BUFFER = 3,   /* provided buffer too small */
    QFR_ERR_INTERNAL = 4  /* allocation failure or unexpected condition */
} qfr_status;

typedef enum qfr_hamiltonian {
    QFR_HAMILTONIAN_ADJACENCY = 0,
    QFR_HAMILTONIAN_LAPLACIAN = 1
} qfr_hamiltonian;

typedef enum qfr_event_kind {
    QFR_EVENT_PST = 0,             /* all mass transferred */
    QFR_EVENT_BALANCED = 1,        /* even split */
    QFR_EVENT_PROPER = 2,          /* confined, unbalanced, nonzero transfer */
    QFR_EVENT_PERIODIC_RETURN = 3  /* confined but no transfer */
} qfr_event_kind;

typedef enum qfr_cospectral_method {
    QFR_COSPECTRAL_IDEMPOTENT = 0,  /* merged projector columns, brute force */
    QFR_COSPECTRAL_ANTIPODAL = 1    /* antipodal pairs for even order */
} qfr_cospectral_method;

typedef enum qfr_classification {
    QFR_CLASS_NONE = 0,
    QFR_CLASS_PST = 1,
    QFR_CLASS_PROPER_QFR = 2
} qfr_classification;

typedef struct qfr_graph qfr_graph;

typedef struct qfr_complex {
    double re;
    double im;
} qfr_complex;

/* A time at which the walker mass is confined to the pair {u, v}. */
typedef struct qfr_event {
    double t;
    uint64_t u;
    uint64_t v;
    qfr_complex alpha;  /* return amplitude at u */
    qfr_complex beta;   /* transfer amplitude at v */
    int kind;           /* qfr_event_kind */
    double leak;        /* residual mass outside the pair */
} qfr_event;

/* Scan parameters; zero any field to take its default
 * (t_max 2*pi, grid_points 100000, detect_tol 1e-9, refine_tol 1e-12,
 * threads = available parallelism). */
typedef struct qfr_scan_config {
    double t_max;
    uint64_t grid_points;
    double detect_tol;
    double refine_tol;
    unsigned threads;
} qfr_scan_config;

/* ---- number theory ---- */

QFRLAB_API qfr_status qfr_gcd(uint64_t a, uint64_t b, uint64_t* out);
QFRLAB_API qfr_status qfr_euler_phi(uint64_t n, uint64_t* out);
QFRLAB_API qfr_status qfr_mobius(uint64_t n, int32_t* out);
/* Sum of the k-th powers of the primitive n-th roots of unity (an integer). */
QFRLAB_API qfr_status qfr_ramanujan_sum(uint64_t k, uint64_t n, int64_t* out);
/* 1 if p is an odd prime, else 0. */
QFRLAB_API int qfr_is_odd_prime(uint64_t p);

/* ---- graph lifecycle and structure ---- */

/* Creates the unitary Cayley graph on Z_n (vertices adjacent when their
 * difference is a unit). Requires n >= 2. */
QFRLAB_API qfr_status qfr_graph_create(uint64_t n, qfr_graph** out);
QFRLAB_API void qfr_graph_destroy(qfr_graph* g);
QFRLAB_API uint64_t qfr_graph_order(const qfr_graph* g);
QFRLAB_API uint64_t qfr_graph_degree(const qfr_graph* g);
/* Units of Z_n in increasing order; element count via the two-call pattern. */
QFRLAB_API qfr_status qfr_graph_connection_set(const qfr_graph* g, uint64_t* buf,
                                               size_t cap, size_t* required);
/* Vertices are taken mod n; a vertex is never adjacent to itself. */
QFRLAB_API qfr_status qfr_graph_adjacent(const qfr_graph* g, uint64_t u,
                                         uint64_t v, int* out);
/* DOT text; required includes the terminating NUL. */
QFRLAB_API qfr_status qfr_graph_to_dot(const qfr_graph* g, char* buf, size_t cap,
                                       size_t* required);

/* ---- spectra ---- */

/* Integer eigenvalue at each Fourier index 0..n-1. */
QFRLAB_API qfr_status qfr_spectrum(const qfr_graph* g, qfr_hamiltonian h,
                                   int64_t* buf, size_t cap, size_t* required);

/* ---- walk amplitudes ---- */

/* alpha = U(t)_{u,u}, beta = U(t)_{v,u}. */
QFRLAB_API qfr_status qfr_amplitude(const qfr_graph* g, qfr_hamiltonian h,
                                    double t, uint64_t u, uint64_t v,
                                    qfr_complex* alpha, qfr_complex* beta);
/* Full propagator column from u: buf[k] = U(t)_{k,u}. */
QFRLAB_API qfr_status qfr_transition_row(const qfr_graph* g, qfr_hamiltonian h,
                                         double t, uint64_t u, qfr_complex* buf,
                                         size_t cap, size_t* required);
/* Walker mass outside {u, v}: 1 - |alpha|^2 - |beta|^2, clamped to [0, 1]. */
QFRLAB_API qfr_status qfr_leak(const qfr_graph* g, qfr_hamiltonian h, double t,
                               uint64_t u, uint64_t v, double* out);

/* ---- revival detection ---- */

/* Tests one instant. *found = 1 and *ev filled when mass is confined to the
 * pair within tol and the transfer is nonzero; otherwise *found = 0. */
QFRLAB_API qfr_status qfr_check(const qfr_graph* g, qfr_hamiltonian h, double t,
                                uint64_t u, uint64_t v, double tol, int* found,
                                qfr_event* ev);
/* Closed-form earliest revival on the antipodal pair of the order-2p graph:
 * t* = 2 pi / p, alpha = cos t*, beta = -i sin t*. Requires odd prime p. */
QFRLAB_API qfr_status qfr_revival_time_2p(uint64_t p, double* t_star,
                                          qfr_complex* alpha, qfr_complex* beta);
/* Smallest T > 0 with U(T) proportional to the identity. */
QFRLAB_API qfr_status qfr_period(const qfr_graph* g, qfr_hamiltonian h,
                                 double* out);
/* All confinement events on (0, t_max], sorted by time, periodic returns
 * included. cfg may be NULL for all defaults. Event count via *count. */
QFRLAB_API qfr_status qfr_scan(const qfr_graph* g, qfr_hamiltonian h, uint64_t u,
                               uint64_t v, const qfr_scan_config* cfg,
                               qfr_event* buf, size_t cap, size_t* count);
/* Antipodal-pair behaviour of the even-order graph. *has_event = 1 and *ev
 * filled unless the classification is QFR_CLASS_NONE. */
QFRLAB_API qfr_status qfr_classify_even(uint64_t n, const qfr_scan_config* cfg,
                                        int* classification, int* has_event,
                                        qfr_event* ev);
/* 1 when the antipodal scan of the order-n graph contains a full transfer. */
QFRLAB_API qfr_status qfr_pst_family_check(uint64_t n, const qfr_scan_config* cfg,
                                           int* out);

/* ---- strong cospectrality ---- */

/* Exact integer criterion on merged eigenvalue classes. */
QFRLAB_API qfr_status qfr_strongly_cospectral(const qfr_graph* g, uint64_t u,
                                              uint64_t v, int* out);
/* All strongly cospectral pairs as (u, v) with u < v, flattened into
 * buf[2k] = u_k, buf[2k+1] = v_k, sorted. cap_pairs and *count_pairs are in
 * pairs, not elements. */
QFRLAB_API qfr_status qfr_cospectral_pairs(const qfr_graph* g,
                                           qfr_cospectral_method method,
                                           uint64_t* buf, size_t cap_pairs,
                                           size_t* count_pairs);

/* ---- communication metrics ---- */

/* Binary entropy of |beta|^2 in bits; requires |alpha|^2 + |beta|^2 = 1
 * within 1e-9. */
QFRLAB_API qfr_status qfr_entropy(qfr_complex alpha, qfr_complex beta,
                                  double* out);
QFRLAB_API qfr_status qfr_binary_entropy(double x, double* out);
/* Entropy of the earliest order-2p revival: H(sin^2(2 pi / p)). */
QFRLAB_API qfr_status qfr_entropy_2p(uint64_t p, double* out);
/* |U(t)_{v,u}|^2 under the adjacency walk. */
QFRLAB_API qfr_status qfr_fidelity(const qfr_graph* g, double t, uint64_t u,
                                   uint64_t v, double* out);
/* 1 when the earliest order-2p revival transfers more than half the mass. */
QFRLAB_API qfr_status qfr_useful_for_communication(uint64_t p, int* out);
/* 2x2 propagator block on {u, v}, row-major [[U_uu, U_uv], [U_vu, U_vv]].
 * *confinement_warning = 1 when leak(t) > 1e-6 (block far from unitary). */
QFRLAB_API qfr_status qfr_beam_splitter_block(const qfr_graph* g, double t,
                                              uint64_t u, uint64_t v,
                                              qfr_complex entries[4],
                                              double* transmissivity,
                                              double* reflectivity,
                                              int* confinement_warning);

/* ---- diagnostics ---- */

/* Message for the most recent failure on this thread; never NULL. */
QFRLAB_API const char* qfr_last_error_message(void);
QFRLAB_API const char* qfr_version(void);

#ifdef __cplusplus
}
#endif

#endif /* QFRLAB_H */
