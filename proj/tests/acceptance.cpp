// End-to-end acceptance gate.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include "wilm/experiments.hpp"
#include "wilm/io.hpp"
#include "wilm/kostlan.hpp"
#include "wilm/search.hpp"
#include "wilm/sturm.hpp"
#include "wilm/valence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace wilm;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s %s  (%s)\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

// Largest certified totals observed anywhere in criteria 1-3, checked
// against the upper bounds in criterion 4.
struct Observed {
    unsigned total = 0, n = 0, m = 0;
    void update(unsigned t, unsigned nn, unsigned mm) {
        if (t > total) {
            total = t;
            n = nn;
            m = mm;
        }
    }
};

// --- criterion 1: Edelman-Kostlan law ----------------------------------

bool criterion_ek(std::string& detail) {
    std::ostringstream out;
    bool ok = true;
    const double inf = std::numeric_limits<double>::infinity();
    for (unsigned m : {1u, 4u, 9u}) {
        auto full = run_ek_experiment(m, 20000, 1000 + m, -inf, inf);
        auto unit = run_ek_experiment(m, 20000, 2000 + m, -1.0, 1.0);
        double dev_full = std::abs(full.empirical_mean - std::sqrt(m));
        double dev_unit = std::abs(unit.empirical_mean - std::sqrt(m) / 2);
        ok = ok && dev_full <= 3 * full.standard_error;
        ok = ok && dev_unit <= 3 * unit.standard_error;
        out << "m=" << m << " mean=" << full.empirical_mean << "/"
            << unit.empirical_mean << " ";
    }
    detail = out.str();
    return ok;
}

// --- criterion 2: per-line expectation ---------------------------------

bool criterion_expectation(ZeroCountStats& stats, std::string& detail) {
    stats = run_expectation_experiment(6, 4, Dyadic::pow2(-40), 5000, 1,
                                       kDefaultPrecisionCap, 8);
    double min_line = *std::min_element(stats.mean_per_line.begin(),
                                        stats.mean_per_line.end());
    std::ostringstream out;
    out << "min per-line mean=" << min_line << " mean total="
        << stats.mean_total;
    detail = out.str();
    return min_line >= 1.9 && stats.mean_total >= 11.4;
}

// --- criterion 3: witness production -----------------------------------

bool criterion_witness(Observed& observed, std::string& detail) {
    struct Goal {
        unsigned n, m;
        unsigned long target;
    };
    const Goal goals[] = {{4, 2, 6}, {6, 4, 12}, {10, 9, 30}};
    std::ostringstream out;
    bool ok = true;
    for (const auto& g : goals) {
        auto report = hunt_witness(g.n, g.m, 500, 7,
                                   default_epsilon_schedule(), 1024);
        bool verified =
            verify_certificate(certificate_to_json(report.best_certificate));
        ok = ok && report.achieved && verified &&
             report.best_certificate.total_certified >= g.target;
        observed.update(report.best_certificate.total_certified, g.n, g.m);
        out << g.n << "/" << g.m << ": total="
            << report.best_certificate.total_certified << " trials="
            << report.trials_used << (verified ? " verified " : " BAD ");
    }
    detail = out.str();
    return ok;
}

// --- criterion 4: upper bounds -----------------------------------------

bool criterion_bounds(const ZeroCountStats& stats, const Observed& observed,
                      std::string& detail) {
    bool ok = stats.max_total <= 6u * 6u && stats.max_total <= 6u * (4u + 2u);
    ok = ok && observed.total <= observed.n * observed.n &&
         observed.total <= observed.n * (observed.m + 2);

    unsigned identity_ok = 0;
    const unsigned cases = 1000;
    for (unsigned t = 0; t < cases; ++t) {
        unsigned m = 1 + t % 8;
        KostlanSampler sampler{m, 4000, t};
        RealPoly p = sample_real_kostlan(sampler);
        unsigned s_plus = descartes_positive_bound(p);
        RealPoly neg = p; // p(-x)
        for (size_t k = 1; k < neg.coeffs.size(); k += 2)
            neg.coeffs[k] = -neg.coeffs[k];
        unsigned s_minus = descartes_positive_bound(neg);
        unsigned s_zero = p.coeffs[0].is_zero() ? 1 : 0;
        if (s_plus + s_minus + s_zero <= m)
            ++identity_ok;
    }
    std::ostringstream out;
    out << "max totals " << stats.max_total << "," << observed.total
        << "; sign identity " << identity_ok << "/" << cases;
    detail = out.str();
    return ok && identity_ok == cases;
}

// --- criterion 5: oracle equivalence -----------------------------------

// Independent root counter: the critical points of p are found by
// recursion on p' (bisection on monotone segments, plain doubles), then
// the count is certified by exact dyadic sign evaluation at rational
// points separating the approximate roots.

std::vector<double> monotone_roots(const std::vector<double>& c) {
    size_t deg = c.size() - 1;
    if (deg == 0)
        return {};
    auto eval = [&](double x) {
        double v = 0;
        for (size_t k = c.size(); k-- > 0;)
            v = v * x + c[k];
        return v;
    };
    if (deg == 1)
        return {-c[0] / c[1]};

    std::vector<double> dc(deg);
    for (size_t k = 1; k <= deg; ++k)
        dc[k - 1] = c[k] * static_cast<double>(k);
    std::vector<double> breaks = monotone_roots(dc);

    double radius = 1;
    for (size_t k = 0; k < deg; ++k)
        radius = std::max(radius, 1 + std::abs(c[k] / c[deg]));
    std::vector<double> pts{-radius};
    for (double b : breaks)
        if (b > -radius && b < radius)
            pts.push_back(b);
    pts.push_back(radius);
    std::sort(pts.begin(), pts.end());

    std::vector<double> roots;
    for (size_t i = 1; i < pts.size(); ++i) {
        double lo = pts[i - 1], hi = pts[i];
        double flo = eval(lo), fhi = eval(hi);
        if (flo == 0)
            roots.push_back(lo);
        if (flo * fhi >= 0)
            continue;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = eval(mid);
            if (fm == 0) {
                lo = hi = mid;
                break;
            }
            (flo * fm < 0 ? hi : lo) = mid;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    double fend = eval(pts.back());
    if (fend == 0)
        roots.push_back(pts.back());
    std::sort(roots.begin(), roots.end());
    return roots;
}

unsigned brute_count(const RealPoly& p) {
    std::vector<double> c;
    for (const auto& d : p.coeffs)
        c.push_back(d.to_double());
    std::vector<double> roots = monotone_roots(c);

    Dyadic radius = cauchy_root_bound(p);
    std::vector<Dyadic> samples{-radius};
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        samples.push_back(Dyadic::from_double(0.5 * (roots[i] + roots[i + 1])));
    samples.push_back(radius);
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    unsigned count = 0;
    int prev = 0;
    for (const auto& s : samples) {
        Dyadic v = p.eval(s);
        int sign = v.is_zero() ? 0 : (v < Dyadic(0) ? -1 : 1);
        if (sign == 0)
            ++count; // sample exactly on a root
        else if (prev != 0 && sign != prev)
            ++count;
        if (sign != 0)
            prev = sign;
    }
    return count;
}

bool criterion_oracle(std::string& detail) {
    unsigned agree = 0, sound = 0;
    const unsigned cases = 1000;
    for (unsigned t = 0; t < cases; ++t) {
        unsigned deg = 1 + t % 8;
        KostlanSampler sampler{deg, 5000, t};
        RealPoly p = sample_real_kostlan(sampler);
        unsigned exact = sturm_count_all(p);
        if (brute_count(p) == exact)
            ++agree;

        LineRestriction res;
        res.inst.n = deg;
        res.inst.m = 1;
        res.inst.epsilon = Dyadic(1);
        res.precision_bits = 64;
        for (const auto& coeff : p.coeffs)
            res.coeffs.push_back(Interval::point(coeff));
        auto lc = count_line_zeros(res, 4096);
        if (lc.certified_lower <= exact &&
            sign_change_lower_bound(res, lc.samples, 4096) <= exact)
            ++sound;
    }
    std::ostringstream out;
    out << "agreement " << agree << "/" << cases << ", soundness " << sound
        << "/" << cases;
    detail = out.str();
    return agree == cases && sound == cases;
}

// --- criterion 6: line-reduction completeness --------------------------

// Im h = eps Im z^n identically, so every zero of h lies on one of the n
// lines; the sweep checks that a Newton solver from a dense grid never
// converges anywhere else.

bool criterion_lines(std::string& detail) {
    unsigned off_line = 0, zeros_seen = 0;
    for (unsigned t = 0; t < 50; ++t) {
        unsigned n = 2 + t % 4; // 2..5
        unsigned m = 1 + t % std::min(3u, n - 1);
        WilmshurstInstance inst{n, m, Dyadic::pow2(-6),
                                sample_complex_kostlan({m, 6000, t})};

        std::vector<std::complex<double>> q;
        for (const auto& [re, im] : inst.q.coeffs)
            q.emplace_back(re.to_double(), im.to_double());
        double eps = inst.epsilon.to_double();
        auto h = [&](std::complex<double> z) {
            std::complex<double> qz = 0;
            for (size_t k = q.size(); k-- > 0;)
                qz = qz * z + q[k];
            return eps * std::pow(z, static_cast<int>(n)) + 2.0 * qz.real();
        };

        // every zero of h lies within the line-restriction Cauchy bound
        // 1 + 2 max_k |q_k| / eps
        double max_q = 0;
        for (const auto& c : q)
            max_q = std::max(max_q, std::abs(c));
        double radius = 1 + 2 * max_q / eps;
        const int grid = 40;
        for (int gx = 0; gx <= grid; ++gx) {
            for (int gy = 0; gy <= grid; ++gy) {
                std::complex<double> z(-radius + 2 * radius * gx / grid,
                                       -radius + 2 * radius * gy / grid);
                // Newton with a numerical Jacobian on (Re h, Im h),
                // polished to a fixed point: convergence is judged by the
                // step size, acceptance by the residual relative to the
                // evaluation magnitude (the attainable rounding floor).
                bool stalled = false;
                for (int it = 0; it < 200; ++it) {
                    std::complex<double> f = h(z);
                    double scale = 1 + std::abs(z);
                    double step = 1e-7 * scale;
                    std::complex<double> fx = (h(z + step) - f) / step;
                    std::complex<double> fy =
                        (h(z + std::complex<double>(0, step)) - f) / step;
                    double det = fx.real() * fy.imag() - fy.real() * fx.imag();
                    if (std::abs(det) < 1e-30)
                        break;
                    double dx =
                        (f.real() * fy.imag() - fy.real() * f.imag()) / det;
                    double dy =
                        (fx.real() * f.imag() - f.real() * fx.imag()) / det;
                    z -= std::complex<double>(dx, dy);
                    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                        break;
                    if (std::hypot(dx, dy) < 1e-14 * scale) {
                        stalled = true;
                        break;
                    }
                }
                if (!stalled)
                    continue;
                double mag = 1 + eps * std::pow(std::abs(z), n);
                for (size_t k = 0; k < q.size(); ++k)
                    mag += 2 * std::abs(q[k]) * std::pow(std::abs(z), k);
                bool converged = std::abs(h(z)) < 1e-12 * mag;
                if (!converged)
                    continue;
                ++zeros_seen;
                double dist = std::abs(z);
                for (unsigned j = 0; j < n; ++j) {
                    double theta = M_PI * j / n;
                    double d = std::abs(z.real() * std::sin(theta) -
                                        z.imag() * std::cos(theta));
                    dist = std::min(dist, d);
                }
                if (dist > 1e-6 * (1 + std::abs(z)))
                    ++off_line;
            }
        }
    }
    std::ostringstream out;
    out << zeros_seen << " converged zeros, " << off_line << " off-line";
    detail = out.str();
    return zeros_seen > 0 && off_line == 0;
}

// --- criterion 7: CLI reproducibility ----------------------------------

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

bool run_cli(const std::string& args) {
    std::string cmd = std::string(WILM_CLI_PATH) + " " + args;
    return std::system(cmd.c_str()) == 0;
}

bool criterion_cli(std::string& detail) {
    const std::string dir = "acceptance_artifacts";
    if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0)
        return false;

    bool ok = true;
    auto rerun_identical = [&](const std::string& args_a,
                               const std::string& args_b,
                               const std::string& file_a,
                               const std::string& file_b) {
        bool ran = run_cli(args_a) && run_cli(args_b);
        std::string a = slurp(file_a), b = slurp(file_b);
        ok = ok && ran && !a.empty() && a == b;
    };

    rerun_identical("oracle --m 9 > " + dir + "/o1.txt",
                    "oracle --m 9 > " + dir + "/o2.txt", dir + "/o1.txt",
                    dir + "/o2.txt");
    rerun_identical(
        "expect --n 3 --m 1 --trials 30 --seed 5 --precision 256 --out " +
            dir + "/e1.csv --bounds-json " + dir + "/b1.json",
        "expect --n 3 --m 1 --trials 30 --seed 5 --precision 256 --out " +
            dir + "/e2.csv --bounds-json " + dir + "/b2.json",
        dir + "/e1.csv", dir + "/e2.csv");
    ok = ok && slurp(dir + "/b1.json") == slurp(dir + "/b2.json");
    rerun_identical("search --n 2 --m 1 --budget 50 --seed 3 --out " + dir +
                        "/s1.json",
                    "search --n 2 --m 1 --budget 50 --seed 3 --out " + dir +
                        "/s2.json",
                    dir + "/s1.json", dir + "/s2.json");

    {
        std::ofstream inst(dir + "/inst.json");
        inst << "{\"n\": 2, \"m\": 1, \"epsilon\": \"1*2^-2\","
                " \"q\": [[\"0\", \"0\"], [\"1\", \"0\"]]}\n";
    }
    rerun_identical("count " + dir + "/inst.json --out " + dir + "/c1.json",
                    "count " + dir + "/inst.json --out " + dir + "/c2.json",
                    dir + "/c1.json", dir + "/c2.json");
    ok = ok && run_cli("verify " + dir + "/c1.json > " + dir + "/v1.txt") &&
         run_cli("verify " + dir + "/c1.json > " + dir + "/v2.txt") &&
         slurp(dir + "/v1.txt") == slurp(dir + "/v2.txt");

    detail = ok ? "all artifacts byte-identical across reruns"
                : "artifact mismatch or command failure";
    return ok;
}

} // namespace

int main() {
    std::string detail;

    bool c1 = criterion_ek(detail);
    report("criterion 1: Edelman-Kostlan expectation", c1, detail);

    ZeroCountStats stats;
    bool c2 = criterion_expectation(stats, detail);
    report("criterion 2: per-line means for (n, m) = (6, 4)", c2, detail);

    Observed observed;
    bool c3 = criterion_witness(observed, detail);
    report("criterion 3: certified witnesses reach ceil(n sqrt(m))", c3,
           detail);

    bool c4 = criterion_bounds(stats, observed, detail);
    report("criterion 4: upper bounds respected", c4, detail);

    bool c5 = criterion_oracle(detail);
    report("criterion 5: Sturm counts match brute-force oracle", c5, detail);

    bool c6 = criterion_lines(detail);
    report("criterion 6: no zeros off the n lines", c6, detail);

    bool c7 = criterion_cli(detail);
    report("criterion 7: byte-identical CLI reruns", c7, detail);

    return g_failures == 0 ? 0 : 1;
}
