#include "wilm/experiments.hpp"
#include "wilm/error.hpp"
#include "wilm/kostlan.hpp"
#include "wilm/search.hpp"
#include "wilm/sturm.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

namespace wilm {

namespace {

struct TrialRecord {
    std::vector<unsigned> per_line;
    unsigned total = 0;
    unsigned float_total = 0;
    bool origin = false;
};

double sample_se(double sum, double sumsq, unsigned trials) {
    if (trials < 2)
        return 0.0;
    double mean = sum / trials;
    double var = (sumsq - trials * mean * mean) / (trials - 1);
    return std::sqrt(std::max(var, 0.0) / trials);
}

} // namespace

ZeroCountStats run_expectation_experiment(unsigned n, unsigned m,
                                          const Dyadic& epsilon,
                                          unsigned trials, uint64_t seed,
                                          unsigned max_precision_bits,
                                          unsigned threads) {
    if (m < 1 || n <= m)
        throw ParameterError("run_expectation_experiment: need n > m >= 1");
    if (trials < 1)
        throw ParameterError("run_expectation_experiment: trials >= 1");
    if (epsilon.sign() <= 0)
        throw ParameterError("run_expectation_experiment: epsilon > 0");

    std::vector<TrialRecord> records(trials);
    auto run_range = [&](unsigned lo, unsigned hi) {
        for (unsigned t = lo; t < hi; ++t) {
            KostlanSampler sampler{m, seed, t};
            WilmshurstInstance inst{n, m, epsilon,
                                    sample_complex_kostlan(sampler)};
            auto cert = certified_valence(inst, max_precision_bits, seed);
            TrialRecord& rec = records[t];
            rec.per_line.reserve(n);
            for (const auto& lc : cert.per_line) {
                rec.per_line.push_back(lc.certified_lower);
                rec.float_total += lc.float_estimate;
            }
            rec.total = cert.total_certified;
            rec.origin = cert.origin_is_zero;
            if (rec.origin)
                rec.float_total += 1;
        }
    };

    if (threads <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        unsigned chunk = (trials + threads - 1) / threads;
        for (unsigned i = 0; i < threads; ++i) {
            unsigned lo = i * chunk, hi = std::min(trials, lo + chunk);
            if (lo < hi)
                pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool)
            th.join();
    }

    ZeroCountStats stats;
    stats.n = n;
    stats.m = m;
    stats.epsilon = epsilon;
    stats.trials = trials;
    stats.seed = seed;
    double sum_total = 0, sumsq_total = 0;
    std::vector<double> sum_line(n, 0), sumsq_line(n, 0);
    unsigned certified_hits = 0, origin_hits = 0;
    for (const auto& rec : records) {
        sum_total += rec.total;
        sumsq_total += static_cast<double>(rec.total) * rec.total;
        for (unsigned j = 0; j < n; ++j) {
            sum_line[j] += rec.per_line[j];
            sumsq_line[j] += static_cast<double>(rec.per_line[j]) * rec.per_line[j];
        }
        if (rec.total == rec.float_total)
            ++certified_hits;
        if (rec.origin)
            ++origin_hits;
        stats.max_total = std::max(stats.max_total, rec.total);
    }
    stats.mean_total = sum_total / trials;
    stats.se_total = sample_se(sum_total, sumsq_total, trials);
    for (unsigned j = 0; j < n; ++j) {
        stats.mean_per_line.push_back(sum_line[j] / trials);
        stats.se_per_line.push_back(sample_se(sum_line[j], sumsq_line[j], trials));
    }
    stats.certified_fraction = static_cast<double>(certified_hits) / trials;
    stats.origin_frequency = static_cast<double>(origin_hits) / trials;
    return stats;
}

EkResult run_ek_experiment(unsigned m, unsigned trials, uint64_t seed,
                           double a, double b) {
    if (m < 1)
        throw ParameterError("run_ek_experiment: m >= 1 required");
    if (trials < 1)
        throw ParameterError("run_ek_experiment: trials >= 1");
    double sum = 0, sumsq = 0;
    for (unsigned t = 0; t < trials; ++t) {
        KostlanSampler sampler{m, seed, t};
        RealPoly f = sample_real_kostlan(sampler);
        unsigned count = 0;
        if (f.degree() >= 1) {
            Dyadic bound = cauchy_root_bound(f);
            Dyadic lo = std::isinf(a) ? -bound
                                      : std::max(Dyadic::from_double(a), -bound);
            Dyadic hi = std::isinf(b) ? bound
                                      : std::min(Dyadic::from_double(b), bound);
            if (lo < hi)
                count = sturm_count(f, lo, hi);
        }
        sum += count;
        sumsq += static_cast<double>(count) * count;
    }
    EkResult res;
    res.empirical_mean = sum / trials;
    res.standard_error = sample_se(sum, sumsq, trials);
    res.oracle = ek_expected_count(m, a, b);
    return res;
}

BoundsReport compare_to_bounds(const ZeroCountStats& stats) {
    BoundsReport r;
    r.n = stats.n;
    r.m = stats.m;
    const unsigned long n = stats.n, m = stats.m;
    r.target = target_valence(stats.n, stats.m);
    r.wilmshurst = 3 * n - 2 + m * (m - 1);
    r.bezout = n * n;
    r.descartes = n * (m + 2);
    r.lll_conjecture = 2 * m * (n - 1) + n;
    r.khl_lower = m * m + n + m;
    r.mean_total = stats.mean_total;
    r.max_certified = stats.max_total;
    r.max_exceeds_wilmshurst = stats.max_total > r.wilmshurst;
    r.target_exceeds_wilmshurst = r.target > r.wilmshurst;
    return r;
}

Json bounds_report_to_json(const BoundsReport& r) {
    Json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["target_ceil_n_sqrt_m"] = r.target;
    j["wilmshurst_conjecture"] = r.wilmshurst;
    j["bezout_n_squared"] = r.bezout;
    j["descartes_n_m_plus_2"] = r.descartes;
    j["lll_conjecture_2m_n_minus_1_plus_n"] = r.lll_conjecture;
    j["khl_lower_m2_plus_n_plus_m"] = r.khl_lower;
    j["mean_total"] = r.mean_total;
    j["max_certified"] = r.max_certified;
    j["max_exceeds_wilmshurst"] = r.max_exceeds_wilmshurst;
    j["target_exceeds_wilmshurst"] = r.target_exceeds_wilmshurst;
    return j;
}

std::string bounds_report_table(const BoundsReport& r) {
    std::ostringstream os;
    os << "bound comparison for n=" << r.n << " m=" << r.m << "\n";
    auto row = [&](const char* name, double value) {
        os << "  " << name;
        for (size_t pad = std::string(name).size(); pad < 34; ++pad)
            os << ' ';
        os << value << "\n";
    };
    row("ceil(n sqrt(m)) target", static_cast<double>(r.target));
    row("Wilmshurst conjecture 3n-2+m(m-1)", static_cast<double>(r.wilmshurst));
    row("Bezout n^2", static_cast<double>(r.bezout));
    row("Descartes n(m+2)", static_cast<double>(r.descartes));
    row("conjectured 2m(n-1)+n", static_cast<double>(r.lll_conjecture));
    row("known lower m^2+n+m", static_cast<double>(r.khl_lower));
    row("observed mean total", r.mean_total);
    row("observed max certified", static_cast<double>(r.max_certified));
    os << "  max exceeds Wilmshurst conjecture: "
       << (r.max_exceeds_wilmshurst ? "yes" : "no") << "\n";
    os << "  target exceeds Wilmshurst conjecture: "
       << (r.target_exceeds_wilmshurst ? "yes" : "no") << "\n";
    return os.str();
}

void write_stats_csv(std::ostream& os, const ZeroCountStats& stats) {
    os << "# wilmvalence " << kToolVersion << "\n";
    os << "# n=" << stats.n << " m=" << stats.m
       << " epsilon=" << stats.epsilon.str() << " trials=" << stats.trials
       << " seed=" << stats.seed << "\n";
    os << "n,m,epsilon,trials,seed,mean_total,se_total,max_total,"
          "certified_fraction,origin_frequency";
    for (unsigned j = 0; j < stats.n; ++j)
        os << ",mean_line_" << j;
    for (unsigned j = 0; j < stats.n; ++j)
        os << ",se_line_" << j;
    os << "\n";
    os << stats.n << ',' << stats.m << ',' << stats.epsilon.str() << ','
       << stats.trials << ',' << stats.seed << ',' << stats.mean_total << ','
       << stats.se_total << ',' << stats.max_total << ','
       << stats.certified_fraction << ',' << stats.origin_frequency;
    for (double v : stats.mean_per_line)
        os << ',' << v;
    for (double v : stats.se_per_line)
        os << ',' << v;
    os << "\n";
}

} // namespace wilm
