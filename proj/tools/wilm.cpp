// wilm: CLI over the wilmvalence shared library.
// Subcommands: oracle | expect | search | count | verify.
// Exit codes: 0 success/achieved, 1 domain failure, 2 usage/schema error.

#include "wilmvalence.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int status_to_exit(wv_status s) {
    switch (s) {
    case WV_OK:
        return 0;
    case WV_FAIL:
        return 1;
    case WV_EINVAL:
        return 2;
    default:
        return 1;
    }
}

int report_status(wv_status s) {
    if (s != WV_OK)
        std::cerr << "error: " << wv_last_error() << "\n";
    return status_to_exit(s);
}

uint64_t default_seed() {
    if (const char* env = std::getenv("WILM_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw CLI::ValidationError("cannot read file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified zero counting for harmonic polynomials "
                 "eps z^n + q(z) + conj(q(z))"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    unsigned precision = 4096;
    unsigned threads = 1;
    uint64_t seed = default_seed();

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "expected real-zero count of a Kostlan polynomial");
    unsigned oracle_m = 1;
    double oracle_a = -INFINITY, oracle_b = INFINITY;
    oracle->add_option("--m", oracle_m, "degree")->required();
    oracle->add_option("--a", oracle_a, "interval left endpoint");
    oracle->add_option("--b", oracle_b, "interval right endpoint");

    // expect
    auto* expect = app.add_subcommand(
        "expect", "Monte Carlo zero-count statistics with bounds table");
    unsigned en = 0, em = 0, trials = 5000;
    std::string eps_str = "2^-40";
    std::string csv_path = "expect.csv";
    std::string bounds_json, bounds_text;
    expect->add_option("--n", en, "degree of z^n term")->required();
    expect->add_option("--m", em, "degree of q")->required();
    expect->add_option("--eps", eps_str, "perturbation size (dyadic)");
    expect->add_option("--trials", trials, "Monte Carlo trials");
    expect->add_option("--seed", seed, "RNG seed");
    expect->add_option("--threads", threads, "worker threads");
    expect->add_option("--precision", precision, "trig precision cap (bits)");
    expect->add_option("--out", csv_path, "CSV output path");
    expect->add_option("--bounds-json", bounds_json, "bounds report JSON path");
    expect->add_option("--bounds-table", bounds_text, "bounds table text path");

    // search
    auto* search = app.add_subcommand(
        "search", "hunt a certified witness with >= ceil(n sqrt(m)) zeros");
    unsigned sn = 0, sm = 0, budget = 500, refine = 0;
    std::string report_path = "search_report.json";
    search->add_option("--n", sn, "degree of z^n term")->required();
    search->add_option("--m", sm, "degree of q")->required();
    search->add_option("--budget", budget, "restart budget (trials)");
    search->add_option("--refine", refine, "hill-climbing steps after restarts");
    search->add_option("--seed", seed, "RNG seed");
    search->add_option("--precision", precision, "trig precision cap (bits)");
    search->add_option("--out", report_path, "report JSON path");

    // count
    auto* count = app.add_subcommand(
        "count", "certify an instance file and print its certificate");
    std::string instance_path;
    std::string cert_out;
    count->add_option("file", instance_path, "instance JSON file")->required();
    count->add_option("--precision", precision, "trig precision cap (bits)");
    count->add_option("--out", cert_out, "certificate output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "re-verify a certificate file independently");
    std::string cert_path;
    verify->add_option("file", cert_path, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*oracle) {
            double out = 0;
            wv_status s = wv_ek_expected(oracle_m, oracle_a, oracle_b, &out);
            if (s != WV_OK)
                return report_status(s);
            std::cout << out << "\n";
            return 0;
        }

        if (*expect) {
            wv_status s = wv_expect(
                en, em, eps_str.c_str(), trials, seed, precision, threads,
                csv_path.c_str(),
                bounds_json.empty() ? nullptr : bounds_json.c_str(),
                bounds_text.empty() ? nullptr : bounds_text.c_str());
            if (s == WV_OK)
                std::cout << "wrote " << csv_path << "\n";
            return report_status(s);
        }

        if (*search) {
            wv_status s = wv_search(sn, sm, budget, seed, precision, refine,
                                    report_path.c_str());
            if (s == WV_OK)
                std::cout << "achieved; report at " << report_path << "\n";
            else if (s == WV_FAIL)
                std::cout << "not achieved; best-effort report at "
                          << report_path << "\n";
            return report_status(s);
        }

        if (*count) {
            std::string text = read_file(instance_path);
            wv_instance* inst = nullptr;
            wv_status s = wv_instance_from_json(text.c_str(), &inst);
            if (s != WV_OK)
                return report_status(s);
            wv_certificate* cert = nullptr;
            s = wv_certify(inst, precision, &cert);
            wv_instance_free(inst);
            if (s != WV_OK)
                return report_status(s);
            char* json = nullptr;
            s = wv_certificate_to_json(cert, &json);
            if (s == WV_OK) {
                if (cert_out.empty()) {
                    std::cout << json;
                } else {
                    std::ofstream os(cert_out, std::ios::binary);
                    os << json;
                }
            }
            wv_string_free(json);
            wv_certificate_free(cert);
            return report_status(s);
        }

        if (*verify) {
            std::string text = read_file(cert_path);
            wv_status s = wv_verify_json(text.c_str());
            std::cout << (s == WV_OK ? "valid" : "invalid") << "\n";
            return report_status(s);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
