// Command-line front end: spectra, revival tables, scans, cospectral pair
// enumeration, even-order classification, DOT export.  Links only the public
// C API.  Output is an OutputRecord rendered as CSV (header + data rows) or
// as a single JSON document; identical invocations are bit-identical.
#include "qfrlab/qfrlab.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_ok(qfr_status st, const char* what) {
    if (st != QFR_OK)
        throw CliError(std::string(what) + ": " + qfr_last_error_message());
}

struct GraphHandle {
    qfr_graph* g = nullptr;
    explicit GraphHandle(uint64_t n) { require_ok(qfr_graph_create(n, &g), "graph"); }
    ~GraphHandle() { qfr_graph_destroy(g); }
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
};

// ------------------------------------------------------------ record ----

struct Value {
    enum class Kind { text, integer, real, boolean } kind;
    std::string s;
    int64_t i = 0;
    double d = 0.0;
    bool b = false;

    static Value text(std::string v) { return {Kind::text, std::move(v), 0, 0.0, false}; }
    static Value integer(int64_t v) { return {Kind::integer, {}, v, 0.0, false}; }
    static Value real(double v) { return {Kind::real, {}, 0, v, false}; }
    static Value boolean(bool v) { return {Kind::boolean, {}, 0, 0.0, v}; }
};

using Cell = std::optional<Value>;

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, Value>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    int csv_real_decimals = -1;  // -1: 10 significant digits
};

std::string format_sig(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string format_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

std::string to_json_value(const Value& v) {
    switch (v.kind) {
        case Value::Kind::text: return "\"" + json_escape(v.s) + "\"";
        case Value::Kind::integer: return std::to_string(v.i);
        case Value::Kind::real: return format_sig(v.d);
        case Value::Kind::boolean: return v.b ? "true" : "false";
    }
    return "null";
}

std::string to_json(const OutputRecord& r) {
    std::string out = "{\n";
    out += "  \"schema_version\": \"1\",\n";
    out += "  \"command\": \"" + json_escape(r.command) + "\",\n";
    out += "  \"parameters\": {";
    for (size_t k = 0; k < r.parameters.size(); ++k) {
        out += (k ? ",\n    " : "\n    ");
        out += "\"" + json_escape(r.parameters[k].first) + "\": ";
        out += to_json_value(r.parameters[k].second);
    }
    out += r.parameters.empty() ? "},\n" : "\n  },\n";
    out += "  \"rows\": [";
    for (size_t k = 0; k < r.rows.size(); ++k) {
        out += (k ? ",\n    " : "\n    ");
        out += "{";
        bool first = true;
        for (size_t c = 0; c < r.columns.size(); ++c) {
            if (!r.rows[k][c]) continue;
            if (!first) out += ", ";
            first = false;
            out += "\"" + json_escape(r.columns[c]) + "\": ";
            out += to_json_value(*r.rows[k][c]);
        }
        out += "}";
    }
    out += r.rows.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string to_csv_value(const Value& v, int real_decimals) {
    switch (v.kind) {
        case Value::Kind::text: return csv_escape(v.s);
        case Value::Kind::integer: return std::to_string(v.i);
        case Value::Kind::real:
            return real_decimals < 0 ? format_sig(v.d) : format_fixed(v.d, real_decimals);
        case Value::Kind::boolean: return v.b ? "true" : "false";
    }
    return "";
}

std::string to_csv(const OutputRecord& r) {
    std::string out;
    for (size_t c = 0; c < r.columns.size(); ++c) {
        if (c) out += ",";
        out += csv_escape(r.columns[c]);
    }
    out += "\n";
    for (const auto& row : r.rows) {
        for (size_t c = 0; c < r.columns.size(); ++c) {
            if (c) out += ",";
            if (row[c]) out += to_csv_value(*row[c], r.csv_real_decimals);
        }
        out += "\n";
    }
    return out;
}

void emit(const OutputRecord& r, const std::string& format, const std::string& out_path) {
    const std::string body = (format == "json") ? to_json(r) : to_csv(r);
    if (out_path.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CliError("cannot open output file: " + out_path);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    f.flush();
    if (!f) throw CliError("write failed: " + out_path);
}

// ------------------------------------------------------------ parsing ----

double parse_number(const std::string& s, const char* what) {
    if (s.empty()) throw CliError(std::string("empty number in ") + what);
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (errno != 0 || end != s.c_str() + s.size())
        throw CliError(std::string("bad number '") + s + "' in " + what);
    return x;
}

// Accepts plain reals and rational multiples of pi: "pi", "a*pi", "pi/b",
// "a*pi/b".  Keeps exact revival times free of decimal round-off.
double parse_angle(const std::string& raw, const char* what) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    const size_t pos = s.find("pi");
    if (pos == std::string::npos) return parse_number(s, what);
    const std::string prefix = s.substr(0, pos);
    const std::string suffix = s.substr(pos + 2);
    double a = 1.0;
    if (!prefix.empty()) {
        if (prefix.back() != '*')
            throw CliError(std::string("bad angle '") + raw + "' in " + what +
                           " (expected a*pi/b)");
        a = parse_number(prefix.substr(0, prefix.size() - 1), what);
    }
    double b = 1.0;
    if (!suffix.empty()) {
        if (suffix.front() != '/')
            throw CliError(std::string("bad angle '") + raw + "' in " + what +
                           " (expected a*pi/b)");
        b = parse_number(suffix.substr(1), what);
        if (b == 0.0) throw CliError(std::string("zero denominator in ") + what);
    }
    return a * 3.14159265358979323846 / b;
}

std::pair<uint64_t, uint64_t> parse_pair(const std::string& s) {
    const size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CliError("bad --pair '" + s + "' (expected u,v)");
    const std::string a = s.substr(0, comma);
    const std::string b = s.substr(comma + 1);
    const double u = parse_number(a, "--pair");
    const double v = parse_number(b, "--pair");
    if (u < 0 || v < 0 || u != std::floor(u) || v != std::floor(v))
        throw CliError("bad --pair '" + s + "' (expected nonnegative integers)");
    return {static_cast<uint64_t>(u), static_cast<uint64_t>(v)};
}

std::vector<uint64_t> parse_p_list(const std::string& s) {
    std::vector<uint64_t> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        const std::string item = s.substr(start, comma - start);
        const double x = parse_number(item, "--p");
        if (x < 1 || x != std::floor(x))
            throw CliError("bad p value '" + item + "' (expected positive integer)");
        out.push_back(static_cast<uint64_t>(x));
        start = comma + 1;
        if (comma == s.size()) break;
    }
    if (out.empty()) throw CliError("empty --p list");
    return out;
}

unsigned env_threads() {
    const char* v = std::getenv("QFRLAB_THREADS");
    if (!v) return 0;
    const std::string s = v;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw CliError("QFRLAB_THREADS must be a positive integer, got '" + s + "'");
    errno = 0;
    char* end = nullptr;
    const unsigned long x = std::strtoul(s.c_str(), &end, 10);
    if (errno != 0 || *end != '\0' || x == 0 || x > 4096)
        throw CliError("QFRLAB_THREADS must be a positive integer, got '" + s + "'");
    return static_cast<unsigned>(x);
}

const char* kind_name(int kind) {
    switch (kind) {
        case QFR_EVENT_PST: return "pst";
        case QFR_EVENT_BALANCED: return "balanced";
        case QFR_EVENT_PROPER: return "proper";
        case QFR_EVENT_PERIODIC_RETURN: return "periodic_return";
    }
    return "unknown";
}

const char* kind_classification(int kind) {
    switch (kind) {
        case QFR_EVENT_PST: return "PST";
        case QFR_EVENT_BALANCED: return "Balanced";
        case QFR_EVENT_PROPER: return "ProperQFR";
    }
    return "None";
}

qfr_hamiltonian parse_hamiltonian(const std::string& s) {
    if (s == "adjacency") return QFR_HAMILTONIAN_ADJACENCY;
    if (s == "laplacian") return QFR_HAMILTONIAN_LAPLACIAN;
    throw CliError("bad --hamiltonian '" + s + "'");
}

std::vector<qfr_event> fetch_scan(qfr_graph* g, qfr_hamiltonian h, uint64_t u,
                                  uint64_t v, const qfr_scan_config& cfg) {
    size_t count = 0;
    require_ok(qfr_scan(g, h, u, v, &cfg, nullptr, 0, &count), "scan");
    std::vector<qfr_event> events(count);
    if (count)
        require_ok(qfr_scan(g, h, u, v, &cfg, events.data(), count, &count), "scan");
    events.resize(count);
    return events;
}

// ----------------------------------------------------------- commands ----

int cmd_spectrum(uint64_t n, const std::string& ham, const std::string& format,
                 const std::string& out_path) {
    const qfr_hamiltonian h = parse_hamiltonian(ham);
    GraphHandle g(n);
    size_t need = 0;
    require_ok(qfr_spectrum(g.g, h, nullptr, 0, &need), "spectrum");
    std::vector<int64_t> values(need);
    require_ok(qfr_spectrum(g.g, h, values.data(), need, &need), "spectrum");

    std::vector<int64_t> sorted = values;
    if (h == QFR_HAMILTONIAN_ADJACENCY)
        std::sort(sorted.begin(), sorted.end(), std::greater<int64_t>());
    else
        std::sort(sorted.begin(), sorted.end());
    std::string multiset = "{";
    for (size_t k = 0; k < sorted.size(); ++k) {
        if (k) multiset += ",";
        multiset += std::to_string(sorted[k]);
    }
    multiset += "}";

    OutputRecord r;
    r.command = "spectrum";
    r.parameters = {{"n", Value::integer(static_cast<int64_t>(n))},
                    {"hamiltonian", Value::text(ham)},
                    {"multiset", Value::text(multiset)}};
    r.columns = {"kappa", "eigenvalue"};
    for (size_t k = 0; k < values.size(); ++k)
        r.rows.push_back({Value::integer(static_cast<int64_t>(k)),
                          Value::integer(values[k])});
    emit(r, format, out_path);
    return 0;
}

struct FamilyRow {
    uint64_t p = 0;
    bool ok = false;
    std::string error;
    uint64_t n = 0;
    uint64_t phi = 0;
    double t_star = 0.0;
    qfr_complex alpha{0.0, 0.0};
    qfr_complex beta{0.0, 0.0};
};

// Rows of the two-family tables: p = 1, 2 are the PST orders n = 2, 4 at
// t = pi/2; odd primes use the closed-form revival at t = 2*pi/p.
FamilyRow family_row(uint64_t p) {
    FamilyRow row;
    row.p = p;
    if (p == 1 || p == 2) {
        row.n = 2 * p;
        row.t_star = 3.14159265358979323846 / 2.0;
        GraphHandle g(row.n);
        require_ok(qfr_amplitude(g.g, QFR_HAMILTONIAN_ADJACENCY, row.t_star, 0,
                                 row.n / 2, &row.alpha, &row.beta),
                   "amplitude");
    } else if (qfr_is_odd_prime(p)) {
        row.n = 2 * p;
        require_ok(qfr_revival_time_2p(p, &row.t_star, &row.alpha, &row.beta),
                   "revival_time_2p");
    } else {
        row.error = "p must be 1, 2, or an odd prime";
        return row;
    }
    require_ok(qfr_euler_phi(row.n, &row.phi), "euler_phi");
    row.ok = true;
    return row;
}

int cmd_table2(const std::string& p_list, const std::string& format,
               const std::string& out_path) {
    OutputRecord r;
    r.command = "table2";
    r.parameters = {{"p_list", Value::text(p_list)}};
    r.columns = {"n",       "p",       "phi",     "t_star",   "re_alpha", "im_alpha",
                 "re_beta", "im_beta", "alpha_sq", "beta_sq", "error"};
    r.csv_real_decimals = 4;
    int failures = 0;
    for (uint64_t p : parse_p_list(p_list)) {
        const FamilyRow row = family_row(p);
        if (!row.ok) {
            ++failures;
            r.rows.push_back({std::nullopt, Value::integer(static_cast<int64_t>(p)),
                              std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                              std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                              Value::text(row.error)});
            continue;
        }
        const double alpha_sq = row.alpha.re * row.alpha.re + row.alpha.im * row.alpha.im;
        const double beta_sq = row.beta.re * row.beta.re + row.beta.im * row.beta.im;
        r.rows.push_back({Value::integer(static_cast<int64_t>(row.n)),
                          Value::integer(static_cast<int64_t>(row.p)),
                          Value::integer(static_cast<int64_t>(row.phi)),
                          Value::real(row.t_star), Value::real(row.alpha.re),
                          Value::real(row.alpha.im), Value::real(row.beta.re),
                          Value::real(row.beta.im), Value::real(alpha_sq),
                          Value::real(beta_sq), std::nullopt});
    }
    emit(r, format, out_path);
    return failures ? 1 : 0;
}

int cmd_table3(const std::string& p_list, const std::string& format,
               const std::string& out_path) {
    OutputRecord r;
    r.command = "table3";
    r.parameters = {{"p_list", Value::text(p_list)}};
    r.columns = {"n", "p", "t_star", "alpha_sq", "beta_sq", "entropy_bits", "pst", "error"};
    r.csv_real_decimals = 4;
    int failures = 0;
    for (uint64_t p : parse_p_list(p_list)) {
        const FamilyRow row = family_row(p);
        if (!row.ok) {
            ++failures;
            r.rows.push_back({std::nullopt, Value::integer(static_cast<int64_t>(p)),
                              std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                              std::nullopt, Value::text(row.error)});
            continue;
        }
        const double alpha_sq = row.alpha.re * row.alpha.re + row.alpha.im * row.alpha.im;
        const double beta_sq = row.beta.re * row.beta.re + row.beta.im * row.beta.im;
        double bits = 0.0;
        require_ok(qfr_entropy(row.alpha, row.beta, &bits), "entropy");
        r.rows.push_back({Value::integer(static_cast<int64_t>(row.n)),
                          Value::integer(static_cast<int64_t>(row.p)),
                          Value::real(row.t_star), Value::real(alpha_sq),
                          Value::real(beta_sq), Value::real(bits),
                          Value::text(alpha_sq < 1e-9 ? "yes" : "no"), std::nullopt});
    }
    emit(r, format, out_path);
    return failures ? 1 : 0;
}

int cmd_scan(uint64_t n, const std::string& pair_str, const std::string& ham,
             const std::string& t_max_str, uint64_t grid, double detect_tol,
             double refine_tol, const std::string& format,
             const std::string& out_path) {
    const qfr_hamiltonian h = parse_hamiltonian(ham);
    uint64_t u = 0, v = 0;
    if (!pair_str.empty()) {
        std::tie(u, v) = parse_pair(pair_str);
    } else if (n % 2 == 0) {
        u = 0;
        v = n / 2;
    } else {
        throw CliError("--pair is required for odd n");
    }
    qfr_scan_config cfg{};
    if (!t_max_str.empty()) cfg.t_max = parse_angle(t_max_str, "--t-max");
    cfg.grid_points = grid;
    cfg.detect_tol = detect_tol;
    cfg.refine_tol = refine_tol;
    cfg.threads = env_threads();

    GraphHandle g(n);
    const std::vector<qfr_event> events = fetch_scan(g.g, h, u, v, cfg);

    OutputRecord r;
    r.command = "scan";
    r.parameters = {{"n", Value::integer(static_cast<int64_t>(n))},
                    {"hamiltonian", Value::text(ham)},
                    {"u", Value::integer(static_cast<int64_t>(u))},
                    {"v", Value::integer(static_cast<int64_t>(v))}};
    if (!t_max_str.empty()) r.parameters.push_back({"t_max", Value::real(cfg.t_max)});
    if (grid) r.parameters.push_back({"grid_points", Value::integer(static_cast<int64_t>(grid))});
    if (detect_tol != 0.0) r.parameters.push_back({"detect_tol", Value::real(detect_tol)});
    if (refine_tol != 0.0) r.parameters.push_back({"refine_tol", Value::real(refine_tol)});
    if (cfg.threads) r.parameters.push_back({"threads", Value::integer(cfg.threads)});
    r.columns = {"t", "kind", "re_alpha", "im_alpha", "re_beta", "im_beta", "leak"};
    for (const qfr_event& ev : events)
        r.rows.push_back({Value::real(ev.t), Value::text(kind_name(ev.kind)),
                          Value::real(ev.alpha.re), Value::real(ev.alpha.im),
                          Value::real(ev.beta.re), Value::real(ev.beta.im),
                          Value::real(ev.leak)});
    emit(r, format, out_path);
    return 0;
}

std::vector<std::pair<uint64_t, uint64_t>> fetch_pairs(qfr_graph* g,
                                                       qfr_cospectral_method m) {
    size_t count = 0;
    require_ok(qfr_cospectral_pairs(g, m, nullptr, 0, &count), "cospectral");
    std::vector<uint64_t> flat(2 * count);
    if (count)
        require_ok(qfr_cospectral_pairs(g, m, flat.data(), count, &count), "cospectral");
    std::vector<std::pair<uint64_t, uint64_t>> pairs(count);
    for (size_t k = 0; k < count; ++k) pairs[k] = {flat[2 * k], flat[2 * k + 1]};
    return pairs;
}

int cmd_cospectral(uint64_t n, const std::string& format, const std::string& out_path) {
    GraphHandle g(n);
    const auto brute = fetch_pairs(g.g, QFR_COSPECTRAL_IDEMPOTENT);
    const auto formula = fetch_pairs(g.g, QFR_COSPECTRAL_ANTIPODAL);

    OutputRecord r;
    r.command = "cospectral";
    r.parameters = {{"n", Value::integer(static_cast<int64_t>(n))},
                    {"agree", Value::boolean(brute == formula)},
                    {"count_idempotent", Value::integer(static_cast<int64_t>(brute.size()))},
                    {"count_antipodal", Value::integer(static_cast<int64_t>(formula.size()))}};
    r.columns = {"method", "u", "v"};
    for (const auto& [u, v] : brute)
        r.rows.push_back({Value::text("idempotent"),
                          Value::integer(static_cast<int64_t>(u)),
                          Value::integer(static_cast<int64_t>(v))});
    for (const auto& [u, v] : formula)
        r.rows.push_back({Value::text("antipodal"),
                          Value::integer(static_cast<int64_t>(u)),
                          Value::integer(static_cast<int64_t>(v))});
    emit(r, format, out_path);
    return 0;
}

int cmd_classify(uint64_t n_max, bool all_pairs, const std::string& format,
                 const std::string& out_path) {
    if (n_max < 2) throw CliError("--n-max must be at least 2");
    if (all_pairs && n_max > 20)
        throw CliError("--all-pairs supports --n-max up to 20");
    qfr_scan_config cfg{};
    cfg.threads = env_threads();

    OutputRecord r;
    r.command = "classify";
    r.columns = {"n", "classification", "t", "u", "v",
                 "re_alpha", "im_alpha", "re_beta", "im_beta"};
    bool verified = true;
    for (uint64_t n = 2; n <= n_max; n += 2) {
        int classification = QFR_CLASS_NONE;
        int has_event = 0;
        qfr_event ev{};
        require_ok(qfr_classify_even(n, &cfg, &classification, &has_event, &ev),
                   "classify");
        const char* label = classification == QFR_CLASS_PST       ? "PST"
                            : classification == QFR_CLASS_PROPER_QFR ? "ProperQFR"
                                                                     : "None";
        std::vector<Cell> row(9);
        row[0] = Value::integer(static_cast<int64_t>(n));
        row[1] = Value::text(label);
        if (has_event) {
            row[2] = Value::real(ev.t);
            row[3] = Value::integer(static_cast<int64_t>(ev.u));
            row[4] = Value::integer(static_cast<int64_t>(ev.v));
            row[5] = Value::real(ev.alpha.re);
            row[6] = Value::real(ev.alpha.im);
            row[7] = Value::real(ev.beta.re);
            row[8] = Value::real(ev.beta.im);
        }
        r.rows.push_back(std::move(row));

        if (!all_pairs) continue;
        // Independent verification: no non-antipodal pair may carry a
        // non-return event.  Antipodal pairs (v - u = n/2) are translates of
        // the scanned one and repeat its events.
        GraphHandle g(n);
        for (uint64_t u = 0; u + 1 < n; ++u) {
            for (uint64_t v = u + 1; v < n; ++v) {
                if (v - u == n / 2) continue;
                for (const qfr_event& hit :
                     fetch_scan(g.g, QFR_HAMILTONIAN_ADJACENCY, u, v, cfg)) {
                    if (hit.kind == QFR_EVENT_PERIODIC_RETURN) continue;
                    verified = false;
                    r.rows.push_back({Value::integer(static_cast<int64_t>(n)),
                                      Value::text(kind_classification(hit.kind)),
                                      Value::real(hit.t),
                                      Value::integer(static_cast<int64_t>(hit.u)),
                                      Value::integer(static_cast<int64_t>(hit.v)),
                                      Value::real(hit.alpha.re),
                                      Value::real(hit.alpha.im),
                                      Value::real(hit.beta.re),
                                      Value::real(hit.beta.im)});
                }
            }
        }
    }
    r.parameters = {{"n_max", Value::integer(static_cast<int64_t>(n_max))},
                    {"all_pairs", Value::boolean(all_pairs)}};
    if (all_pairs) r.parameters.push_back({"verified", Value::boolean(verified)});
    if (cfg.threads) r.parameters.push_back({"threads", Value::integer(cfg.threads)});
    emit(r, format, out_path);
    return 0;
}

int cmd_export_graph(uint64_t n, const std::string& out_path) {
    GraphHandle g(n);
    size_t need = 0;
    require_ok(qfr_graph_to_dot(g.g, nullptr, 0, &need), "to_dot");
    std::string dot(need, '\0');
    require_ok(qfr_graph_to_dot(g.g, dot.data(), need, &need), "to_dot");
    dot.resize(need - 1);  // drop the trailing NUL

    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CliError("cannot open output file: " + out_path);
    f.write(dot.data(), static_cast<std::streamsize>(dot.size()));
    f.flush();
    if (!f) throw CliError("write failed: " + out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unitary Cayley graph quantum-walk toolkit"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "Write output to this file");
    };

    uint64_t n = 0;
    std::string ham = "adjacency";
    CLI::App* spectrum = app.add_subcommand("spectrum", "Integer eigenvalues per Fourier index");
    spectrum->add_option("--n", n, "Graph order")->required();
    spectrum->add_option("--hamiltonian", ham, "adjacency or laplacian")
        ->check(CLI::IsMember({"adjacency", "laplacian"}));
    add_common(spectrum);

    std::string p2_list = "1,2,3,5,7,11";
    CLI::App* table2 = app.add_subcommand("table2", "Antipodal revival amplitudes for n = 2p");
    table2->add_option("--p", p2_list, "Comma-separated p values");
    add_common(table2);

    std::string p3_list = "1,2,3,5,7,11,13";
    CLI::App* table3 = app.add_subcommand("table3", "Revival probabilities and entropy for n = 2p");
    table3->add_option("--p", p3_list, "Comma-separated p values");
    add_common(table3);

    std::string pair_str;
    std::string t_max_str;
    uint64_t grid = 0;
    double detect_tol = 0.0;
    double refine_tol = 0.0;
    CLI::App* scan = app.add_subcommand("scan", "Detect revival events for one vertex pair");
    scan->add_option("--n", n, "Graph order")->required();
    scan->add_option("--pair", pair_str, "Vertex pair u,v (default 0,n/2 for even n)");
    scan->add_option("--hamiltonian", ham, "adjacency or laplacian")
        ->check(CLI::IsMember({"adjacency", "laplacian"}));
    scan->add_option("--t-max", t_max_str, "Scan window end; accepts a*pi/b literals");
    scan->add_option("--grid", grid, "Grid points");
    scan->add_option("--detect-tol", detect_tol, "Leak detection threshold");
    scan->add_option("--refine-tol", refine_tol, "Refinement tolerance in t");
    add_common(scan);

    CLI::App* cospectral = app.add_subcommand("cospectral", "Strongly cospectral pairs, both methods");
    cospectral->add_option("--n", n, "Graph order")->required();
    add_common(cospectral);

    uint64_t n_max = 12;
    bool all_pairs = false;
    CLI::App* classify = app.add_subcommand("classify", "Classify all even orders up to n-max");
    classify->add_option("--n-max", n_max, "Largest order to classify");
    classify->add_flag("--all-pairs", all_pairs,
                       "Also scan every vertex pair as an independent check (n-max <= 20)");
    add_common(classify);

    CLI::App* export_graph = app.add_subcommand("export-graph", "Write the graph as a DOT file");
    export_graph->add_option("--n", n, "Graph order")->required();
    export_graph->add_option("--out", out_path, "Destination path")->required();
    export_graph->add_option("--format", format, "Ignored; DOT output only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (app.got_subcommand(spectrum)) return cmd_spectrum(n, ham, format, out_path);
        if (app.got_subcommand(table2)) return cmd_table2(p2_list, format, out_path);
        if (app.got_subcommand(table3)) return cmd_table3(p3_list, format, out_path);
        if (app.got_subcommand(scan))
            return cmd_scan(n, pair_str, ham, t_max_str, grid, detect_tol, refine_tol,
                            format, out_path);
        if (app.got_subcommand(cospectral)) return cmd_cospectral(n, format, out_path);
        if (app.got_subcommand(classify)) return cmd_classify(n_max, all_pairs, format, out_path);
        if (app.got_subcommand(export_graph)) return cmd_export_graph(n, out_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    std::fprintf(stderr, "error: no subcommand\n");
    return 1;
}
