#ifndef WILM_EXPERIMENTS_HPP
#define WILM_EXPERIMENTS_HPP

#include "wilm/io.hpp"
#include "wilm/valence.hpp"

#include <iosfwd>

namespace wilm {

struct ZeroCountStats {
    unsigned n = 0, m = 0;
    Dyadic epsilon;
    unsigned trials = 0;
    uint64_t seed = 0;
    double mean_total = 0, se_total = 0;
    std::vector<double> mean_per_line, se_per_line;
    double certified_fraction = 0; // trials where certified == float total
    double origin_frequency = 0;
    unsigned max_total = 0;
};

// Per trial: q from the complex Kostlan ensemble (stream = trial index),
// certified_valence, aggregate. Deterministic given (seed, parameters);
// threads only partition the trial index range.
ZeroCountStats run_expectation_experiment(unsigned n, unsigned m,
                                          const Dyadic& epsilon,
                                          unsigned trials, uint64_t seed,
                                          unsigned max_precision_bits = kDefaultPrecisionCap,
                                          unsigned threads = 1);

struct EkResult {
    double empirical_mean = 0;
    double standard_error = 0;
    double oracle = 0;
};

// Real Kostlan samples, exact Sturm root counts over (a, b) against the
// arctan oracle.  Infinite endpoints mean the whole line.
EkResult run_ek_experiment(unsigned m, unsigned trials, uint64_t seed,
                           double a, double b);

struct BoundsReport {
    unsigned n = 0, m = 0;
    unsigned long target = 0;          // ceil(n sqrt(m))
    unsigned long wilmshurst = 0;      // 3n - 2 + m(m-1)
    unsigned long bezout = 0;          // n^2
    unsigned long descartes = 0;       // n(m+2)
    unsigned long lll_conjecture = 0;  // 2m(n-1) + n
    unsigned long khl_lower = 0;       // m^2 + n + m
    double mean_total = 0;
    unsigned max_certified = 0;
    bool max_exceeds_wilmshurst = false;
    bool target_exceeds_wilmshurst = false;
};

BoundsReport compare_to_bounds(const ZeroCountStats& stats);

Json bounds_report_to_json(const BoundsReport& report);
std::string bounds_report_table(const BoundsReport& report);

// One CSV row per run, preceded by '#' provenance lines (version,
// config, seed).  No timestamps: reruns must be byte-identical.
void write_stats_csv(std::ostream& os, const ZeroCountStats& stats);

} // namespace wilm

#endif
