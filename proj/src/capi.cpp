#include "wilmvalence.h"

#include "wilm/error.hpp"
#include "wilm/experiments.hpp"
#include "wilm/io.hpp"
#include "wilm/kostlan.hpp"
#include "wilm/search.hpp"
#include "wilm/valence.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

using namespace wilm;

struct wv_instance {
    WilmshurstInstance inst;
};

struct wv_certificate {
    ValenceCertificate cert;
};

namespace {

thread_local std::string g_last_error;

wv_status fail(wv_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
wv_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const SchemaError& e) {
        return fail(WV_EINVAL, e.what());
    } catch (const ParameterError& e) {
        return fail(WV_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(WV_ERROR, e.what());
    }
}

wv_status write_file(const char* path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        return fail(WV_ERROR, std::string("cannot open for writing: ") + path);
    os << content;
    return os.good() ? WV_OK
                     : fail(WV_ERROR, std::string("write failed: ") + path);
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* wv_version(void) { return kToolVersion; }

const char* wv_last_error(void) { return g_last_error.c_str(); }

void wv_string_free(char* s) { delete[] s; }

wv_status wv_ek_expected(unsigned m, double a, double b, double* out) {
    if (!out)
        return fail(WV_EINVAL, "out pointer is null");
    return guarded([&] {
        *out = ek_expected_count(m, a, b);
        return WV_OK;
    });
}

wv_status wv_instance_from_json(const char* json, wv_instance** out) {
    if (!json || !out)
        return fail(WV_EINVAL, "null argument");
    return guarded([&] {
        auto inst = instance_from_json(parse_json(json));
        inst.validate();
        *out = new wv_instance{std::move(inst)};
        return WV_OK;
    });
}

void wv_instance_free(wv_instance* inst) { delete inst; }

wv_status wv_certify(const wv_instance* inst, unsigned max_precision_bits,
                     wv_certificate** out) {
    if (!inst || !out)
        return fail(WV_EINVAL, "null argument");
    if (max_precision_bits < 1)
        return fail(WV_EINVAL, "precision must be positive");
    return guarded([&] {
        *out = new wv_certificate{
            certified_valence(inst->inst, max_precision_bits)};
        return WV_OK;
    });
}

void wv_certificate_free(wv_certificate* cert) { delete cert; }

unsigned wv_certificate_total(const wv_certificate* cert) {
    return cert ? cert->cert.total_certified : 0;
}

wv_status wv_certificate_to_json(const wv_certificate* cert, char** out) {
    if (!cert || !out)
        return fail(WV_EINVAL, "null argument");
    return guarded([&] {
        *out = dup_string(certificate_to_json(cert->cert).dump(2) + "\n");
        return WV_OK;
    });
}

wv_status wv_verify_json(const char* cert_json) {
    if (!cert_json)
        return fail(WV_EINVAL, "null argument");
    wv_status result = WV_ERROR;
    wv_status guard = guarded([&] {
        result = verify_certificate(parse_json(cert_json))
                     ? WV_OK
                     : fail(WV_FAIL, "certificate failed re-verification");
        return WV_OK;
    });
    return guard == WV_OK ? result : guard;
}

wv_status wv_expect(unsigned n, unsigned m, const char* epsilon,
                    unsigned trials, uint64_t seed, unsigned precision_bits,
                    unsigned threads, const char* csv_path,
                    const char* bounds_json_path,
                    const char* bounds_text_path) {
    if (!epsilon)
        return fail(WV_EINVAL, "epsilon is null");
    return guarded([&] {
        Dyadic eps = Dyadic::parse(epsilon);
        auto stats = run_expectation_experiment(
            n, m, eps, trials, seed, precision_bits,
            threads < 1 ? 1 : threads);
        auto report = compare_to_bounds(stats);
        if (csv_path) {
            std::ostringstream os;
            write_stats_csv(os, stats);
            wv_status s = write_file(csv_path, os.str());
            if (s != WV_OK)
                return s;
        }
        if (bounds_json_path) {
            wv_status s = write_file(bounds_json_path,
                                     bounds_report_to_json(report).dump(2) + "\n");
            if (s != WV_OK)
                return s;
        }
        if (bounds_text_path) {
            wv_status s = write_file(bounds_text_path,
                                     bounds_report_table(report));
            if (s != WV_OK)
                return s;
        }
        return WV_OK;
    });
}

wv_status wv_search(unsigned n, unsigned m, unsigned budget_trials,
                    uint64_t seed, unsigned precision_bits,
                    unsigned refine_steps, const char* report_path) {
    return guarded([&] {
        auto report =
            hunt_witness(n, m, budget_trials, seed, default_epsilon_schedule(),
                         precision_bits, refine_steps);
        if (report_path) {
            wv_status s = write_file(report_path,
                                     search_report_to_json(report).dump(2) + "\n");
            if (s != WV_OK)
                return s;
        }
        return report.achieved
                   ? WV_OK
                   : fail(WV_FAIL, "search budget exhausted below target");
    });
}

} // extern "C"
