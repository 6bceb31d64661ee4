#include "wilm/valence.hpp"
#include "wilm/error.hpp"
#include "wilm/sturm.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

namespace wilm {

namespace {

// Root bracket for every polynomial consistent with the coefficient
// intervals: 1 + max_k sup|c_k| / inf|c_n|, rounded up.
Dyadic interval_cauchy_bound(const LineRestriction& res) {
    const unsigned n = res.inst.n;
    const Dyadic lead = res.coeffs[n].lo; // epsilon, a nonzero point
    if (lead.is_zero())
        throw ParameterError("interval_cauchy_bound: zero leading coefficient");
    Dyadic max_mag;
    for (unsigned k = 0; k < n; ++k) {
        Dyadic m = res.coeffs[k].mag();
        if (m > max_mag)
            max_mag = m;
    }
    if (max_mag.is_zero())
        return Dyadic(1);
    mpq_class ratio = abs(max_mag.to_mpq() / lead.to_mpq());
    return Dyadic(1) + Dyadic::from_mpq_round_up(ratio, 32);
}

} // namespace

std::vector<double> float_root_estimate(const LineRestriction& restriction) {
    const unsigned n = restriction.inst.n;
    if (restriction.coeffs[n].certified_sign() == 0)
        throw ParameterError("float_root_estimate: leading coefficient "
                             "interval contains zero");
    std::vector<double> c(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c[k] = restriction.coeffs[k].midpoint().to_double();

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (unsigned k = 0; k < n; ++k) {
        companion(k, n - 1) = -c[k] / c[n];
        if (k > 0)
            companion(k, k - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw Error("float_root_estimate: eigensolver failed");

    std::vector<double> roots;
    for (unsigned k = 0; k < n; ++k) {
        std::complex<double> z = solver.eigenvalues()(k);
        if (std::abs(z.imag()) < 1e-7 * (1.0 + std::abs(z.real())) &&
            std::isfinite(z.real()))
            roots.push_back(z.real());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

LineCount count_line_zeros(const LineRestriction& restriction,
                           unsigned max_precision_bits) {
    const Dyadic bound = interval_cauchy_bound(restriction);

    std::vector<double> roots;
    bool estimator_ok = true;
    try {
        roots = float_root_estimate(restriction);
    } catch (const Error&) {
        estimator_ok = false;
    }

    std::set<Dyadic> sample_set;
    sample_set.insert(-bound);
    sample_set.insert(bound);
    sample_set.insert(Dyadic(0));
    const double bd = bound.to_double();
    if (estimator_ok) {
        // Midpoints between consecutive elements of {-R, roots..., R}
        // bracket each estimated root on both sides.
        std::vector<double> pts;
        pts.push_back(-bd);
        for (double r : roots)
            if (r > -bd && r < bd)
                pts.push_back(r);
        pts.push_back(bd);
        for (size_t i = 1; i < pts.size(); ++i) {
            double mid = 0.5 * (pts[i - 1] + pts[i]);
            if (std::isfinite(mid)) {
                Dyadic d = Dyadic::from_double(mid);
                if (-bound < d && d < bound)
                    sample_set.insert(d);
            }
        }
    } else {
        // Ill-conditioned estimate: fall back to a uniform dyadic grid.
        unsigned grid = 4 * (restriction.inst.n + 1);
        for (unsigned i = 1; i < grid; ++i) {
            double t = -bd + 2.0 * bd * i / grid;
            sample_set.insert(Dyadic::from_double(t));
        }
    }

    LineCount lc;
    lc.j = restriction.j;
    lc.samples.assign(sample_set.begin(), sample_set.end());
    lc.float_estimate = static_cast<unsigned>(roots.size());

    auto signs = certify_samples(restriction, lc.samples, max_precision_bits);
    lc.signs.reserve(signs.size());
    for (const auto& s : signs)
        lc.signs.push_back(s.symbol());
    for (size_t i = 1; i < signs.size(); ++i)
        if (signs[i - 1].strict() && signs[i].strict() &&
            signs[i - 1].value() != signs[i].value())
            ++lc.certified_lower;

    if (lc.certified_lower > restriction.inst.n)
        throw Error("count_line_zeros: lower bound exceeds line degree");
    return lc;
}

ValenceCertificate certified_valence(const WilmshurstInstance& inst,
                                     unsigned max_precision_bits,
                                     uint64_t seed) {
    inst.validate();
    ValenceCertificate cert;
    cert.inst = inst;
    cert.seed = seed;
    cert.precision_bits = max_precision_bits;

    for (unsigned j = 0; j < inst.n; ++j) {
        auto restriction = restrict_to_line(
            inst, j, std::min(kInitialPrecision, max_precision_bits));
        cert.per_line.push_back(count_line_zeros(restriction,
                                                 max_precision_bits));
        cert.total_certified += cert.per_line.back().certified_lower;
    }

    // h(0) = (2 a_0, 0) exactly, so the origin test is exact.
    cert.origin_is_zero = inst.q.coeffs[0].first.is_zero();
    if (cert.origin_is_zero)
        cert.total_certified += 1;

    const unsigned long n2 = static_cast<unsigned long>(inst.n) * inst.n;
    if (cert.total_certified > n2)
        throw Error("certificate exceeds the Bezout bound n^2");
    if (cert.total_certified > family_upper_bound(inst.n, inst.m).descartes_total)
        throw Error("certificate exceeds the Descartes bound n(m+2)");
    return cert;
}

std::pair<Dyadic, ValenceCertificate>
choose_epsilon(const ComplexPoly& q, unsigned n,
               const std::vector<Dyadic>& schedule,
               unsigned max_precision_bits) {
    if (schedule.empty())
        throw ParameterError("choose_epsilon: empty schedule");
    for (const auto& e : schedule)
        if (e.sign() <= 0)
            throw ParameterError("choose_epsilon: schedule entries must be > 0");

    bool have_best = false;
    Dyadic best_eps;
    ValenceCertificate best_cert;
    for (const auto& eps : schedule) {
        WilmshurstInstance inst;
        inst.n = n;
        inst.m = static_cast<unsigned>(q.degree());
        inst.epsilon = eps;
        inst.q = q;
        auto cert = certified_valence(inst, max_precision_bits);
        if (!have_best ||
            cert.total_certified > best_cert.total_certified ||
            (cert.total_certified == best_cert.total_certified &&
             eps > best_eps)) {
            have_best = true;
            best_eps = eps;
            best_cert = std::move(cert);
        }
    }
    return {best_eps, best_cert};
}

std::vector<Dyadic> default_epsilon_schedule() {
    std::vector<Dyadic> s;
    for (long t = 1; t <= 6; ++t)
        s.push_back(Dyadic::pow2(-10 * t));
    return s;
}

} // namespace wilm
