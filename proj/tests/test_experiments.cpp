#include <doctest.h>

#include "wilm/error.hpp"
#include "wilm/experiments.hpp"
#include "wilm/search.hpp"

#include <cmath>
#include <sstream>

using namespace wilm;

TEST_CASE("expectation experiment is deterministic and thread-invariant") {
    auto a = run_expectation_experiment(3, 2, Dyadic::pow2(-10), 40, 11, 512);
    auto b = run_expectation_experiment(3, 2, Dyadic::pow2(-10), 40, 11, 512);
    auto c =
        run_expectation_experiment(3, 2, Dyadic::pow2(-10), 40, 11, 512, 4);
    CHECK(a.mean_total == b.mean_total);
    CHECK(a.se_total == b.se_total);
    CHECK(a.mean_per_line == b.mean_per_line);
    CHECK(a.mean_total == c.mean_total);
    CHECK(a.mean_per_line == c.mean_per_line);
    CHECK(a.max_total == c.max_total);

    auto d = run_expectation_experiment(3, 2, Dyadic::pow2(-10), 40, 12, 512);
    CHECK(a.mean_total != d.mean_total);
}

TEST_CASE("expectation experiment sanity") {
    auto stats =
        run_expectation_experiment(4, 2, Dyadic::pow2(-20), 200, 5, 1024, 4);
    CHECK(stats.trials == 200);
    REQUIRE(stats.mean_per_line.size() == 4);

    // mean_total decomposes over lines plus the origin indicator
    double sum = stats.origin_frequency;
    for (double v : stats.mean_per_line)
        sum += v;
    CHECK(stats.mean_total == doctest::Approx(sum).epsilon(1e-12));

    // distributional symmetry across lines
    for (unsigned j = 1; j < 4; ++j) {
        double tol = 4 * (stats.se_per_line[j] + stats.se_per_line[0]);
        CHECK(std::abs(stats.mean_per_line[j] - stats.mean_per_line[0]) <=
              tol);
    }

    CHECK(stats.max_total <= 16);
    CHECK(stats.certified_fraction >= 0.8);
    CHECK(stats.mean_total > 2.0);
}

TEST_CASE("ek experiment matches the arctan oracle") {
    double inf = std::numeric_limits<double>::infinity();
    auto r = run_ek_experiment(4, 4000, 9, -inf, inf);
    CHECK(r.oracle == doctest::Approx(2.0));
    CHECK(std::abs(r.empirical_mean - r.oracle) <= 4 * r.standard_error);

    auto half = run_ek_experiment(9, 4000, 9, 0.0, inf);
    CHECK(half.oracle == doctest::Approx(1.5));
    CHECK(std::abs(half.empirical_mean - half.oracle) <=
          4 * half.standard_error);
}

TEST_CASE("ek error shrinks as trials grow") {
    double inf = std::numeric_limits<double>::infinity();
    auto rms = [&](unsigned trials) {
        double s = 0;
        for (uint64_t rep = 0; rep < 10; ++rep) {
            auto r = run_ek_experiment(4, trials, 100 + rep, -inf, inf);
            double e = r.empirical_mean - r.oracle;
            s += e * e;
        }
        return std::sqrt(s / 10);
    };
    double coarse = rms(250);
    double fine = rms(4000);
    CHECK(fine < coarse);
}

TEST_CASE("compare_to_bounds rows") {
    ZeroCountStats s;
    s.n = 6;
    s.m = 4;
    auto r = compare_to_bounds(s);
    CHECK(r.target == 12);
    CHECK(r.wilmshurst == 28);
    CHECK(r.bezout == 36);
    CHECK(r.descartes == 36);
    CHECK(r.lll_conjecture == 46);
    CHECK(r.khl_lower == 26);
    CHECK_FALSE(r.target_exceeds_wilmshurst);

    ZeroCountStats big;
    big.n = 544;
    big.m = 10;
    auto rb = compare_to_bounds(big);
    CHECK(rb.target == 1721);
    CHECK(rb.wilmshurst == 1720);
    CHECK(rb.target_exceeds_wilmshurst);

    ZeroCountStats tiny;
    tiny.n = 2;
    tiny.m = 1;
    auto rt = compare_to_bounds(tiny);
    CHECK(rt.target == 2);
    CHECK(rt.wilmshurst == 4);
    CHECK(rt.bezout == 4);

    auto json = bounds_report_to_json(rb);
    CHECK(json.at("target_ceil_n_sqrt_m") == 1721);
    CHECK(json.at("target_exceeds_wilmshurst") == true);
    CHECK(bounds_report_table(rb).find("1721") != std::string::npos);
}

TEST_CASE("csv output is byte-identical across reruns") {
    auto stats =
        run_expectation_experiment(3, 1, Dyadic::pow2(-10), 30, 42, 256);
    std::ostringstream a, b;
    write_stats_csv(a, stats);
    write_stats_csv(b, stats);
    CHECK(a.str() == b.str());
    CHECK(a.str().find('#') == 0);
    CHECK(a.str().find("42") != std::string::npos);
}
