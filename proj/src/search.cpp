#include "wilm/search.hpp"
#include "wilm/error.hpp"
#include "wilm/kostlan.hpp"
#include "wilm/sturm.hpp"

#include <cmath>

namespace wilm {

unsigned long target_valence(unsigned n, unsigned m) {
    if (m < 1 || n <= m)
        throw ParameterError("target_valence: need n > m >= 1");
    // ceil(n sqrt(m)) = min{v : v^2 >= n^2 m}.
    mpz_class n2m = mpz_class(n) * n * m;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n2m.get_mpz_t());
    if (root * root < n2m)
        root += 1;
    return root.get_ui();
}

unsigned long wilmshurst_conjecture_value(unsigned n, unsigned m) {
    if (m < 1 || n <= m)
        throw ParameterError("wilmshurst_conjecture_value: need n > m >= 1");
    return 3ul * n - 2 + static_cast<unsigned long>(m) * (m - 1);
}

unsigned smallest_counterexample_n(unsigned m, unsigned n_limit) {
    for (unsigned n = m + 1; n <= n_limit; ++n)
        if (target_valence(n, m) > wilmshurst_conjecture_value(n, m))
            return n;
    return 0;
}

namespace {

unsigned certified_total(const WilmshurstInstance& inst,
                         const std::vector<Dyadic>& schedule,
                         unsigned max_precision_bits) {
    return choose_epsilon(inst.q, inst.n, schedule, max_precision_bits)
        .second.total_certified;
}

} // namespace

WilmshurstInstance local_refine(const WilmshurstInstance& inst, unsigned steps,
                                uint64_t seed,
                                const std::vector<Dyadic>& schedule,
                                unsigned max_precision_bits,
                                unsigned* accepted_steps) {
    if (steps < 1)
        throw ParameterError("local_refine: steps >= 1 required");
    inst.validate();

    WilmshurstInstance best = inst;
    unsigned best_total = certified_total(best, schedule, max_precision_bits);
    CounterRng rng(seed, 0x9E3779B9ull);
    unsigned accepted = 0;

    for (unsigned t = 0; t < steps; ++t) {
        // Pick one of the 2(m+1) real coordinates of q.
        unsigned coord = static_cast<unsigned>(rng.bits(3 * t) %
                                               (2ull * (inst.m + 1)));
        unsigned k = coord / 2;
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), inst.m, k);
        double sigma0 = 0.1 * std::sqrt(b.get_d() / 2.0);
        double sigma = sigma0 * std::pow(2.0, -static_cast<double>(t) / 10.0);
        double delta = rng.gaussian(3 * t + 1) * sigma;

        WilmshurstInstance cand = best;
        auto& pair = cand.q.coeffs[k];
        Dyadic& target = (coord % 2 == 0) ? pair.first : pair.second;
        target = target + Dyadic::from_double(delta);
        if (cand.q.degree() != static_cast<int>(cand.m))
            continue; // perturbation killed the leading coefficient
        unsigned cand_total =
            certified_total(cand, schedule, max_precision_bits);
        if (cand_total > best_total) {
            auto [eps, cert] =
                choose_epsilon(cand.q, cand.n, schedule, max_precision_bits);
            cand.epsilon = eps;
            best = cand;
            best_total = cert.total_certified;
            ++accepted;
        }
    }
    if (accepted_steps)
        *accepted_steps = accepted;
    return best;
}

SearchReport hunt_witness(unsigned n, unsigned m, unsigned budget_trials,
                          uint64_t seed, const std::vector<Dyadic>& schedule,
                          unsigned max_precision_bits, unsigned refine_steps) {
    if (m < 1 || n <= m)
        throw ParameterError("hunt_witness: need n > m >= 1");
    if (budget_trials < 1)
        throw ParameterError("hunt_witness: budget_trials >= 1 required");

    SearchReport report;
    report.n = n;
    report.m = m;
    report.seed = seed;
    report.target = target_valence(n, m);

    bool have_best = false;
    for (unsigned t = 0; t < budget_trials; ++t) {
        KostlanSampler sampler{m, seed, t};
        ComplexPoly q = sample_complex_kostlan(sampler);
        auto [eps, cert] = choose_epsilon(q, n, schedule, max_precision_bits);
        cert.seed = seed;
        ++report.trials_used;
        if (!have_best ||
            cert.total_certified > report.best_certificate.total_certified) {
            have_best = true;
            report.best_certificate = std::move(cert);
        }
        if (report.best_certificate.total_certified >= report.target) {
            report.achieved = true;
            break;
        }
    }

    if (!report.achieved && refine_steps > 0) {
        unsigned accepted = 0;
        WilmshurstInstance refined =
            local_refine(report.best_certificate.inst, refine_steps, seed,
                         schedule, max_precision_bits, &accepted);
        report.improvement_steps = accepted;
        auto [eps, cert] =
            choose_epsilon(refined.q, n, schedule, max_precision_bits);
        cert.seed = seed;
        if (cert.total_certified >= report.best_certificate.total_certified)
            report.best_certificate = std::move(cert);
        report.achieved =
            report.best_certificate.total_certified >= report.target;
    }
    return report;
}

bool verify_certificate(const Json& cert_json) {
    ValenceCertificate cert = certificate_from_json(cert_json);
    try {
        cert.inst.validate();
    } catch (const ParameterError& e) {
        throw SchemaError(std::string("invalid certificate instance: ") +
                          e.what());
    }
    if (cert.per_line.size() != cert.inst.n)
        throw SchemaError("certificate must record one entry per line");

    unsigned long n2 = static_cast<unsigned long>(cert.inst.n) * cert.inst.n;
    if (cert.total_certified > n2 ||
        cert.total_certified >
            family_upper_bound(cert.inst.n, cert.inst.m).descartes_total)
        return false;

    unsigned recomputed_total = 0;
    for (unsigned j = 0; j < cert.inst.n; ++j) {
        const LineCount& lc = cert.per_line[j];
        if (lc.j != j)
            throw SchemaError("line indices must be 0..n-1 in order");
        for (size_t i = 1; i < lc.samples.size(); ++i)
            if (!(lc.samples[i - 1] < lc.samples[i]))
                throw SchemaError("samples must be strictly increasing");

        auto restriction = restrict_to_line(
            cert.inst, j, std::min(kInitialPrecision, cert.precision_bits));
        unsigned alternations = 0;
        int prev = 0;
        for (size_t i = 0; i < lc.samples.size(); ++i) {
            int recorded = lc.signs[i] == '+' ? 1 : lc.signs[i] == '-' ? -1 : 0;
            if (recorded != 0) {
                CertifiedSign s = certified_sign(restriction, lc.samples[i],
                                                 cert.precision_bits);
                // Undetermined re-certification is a failure; a flipped
                // sign is a failure.
                if (!s.strict() || s.value() != recorded)
                    return false;
                if (prev != 0 && recorded != prev)
                    ++alternations;
                prev = recorded;
            } else {
                prev = 0;
            }
        }
        if (alternations < lc.certified_lower)
            return false;
        recomputed_total += alternations;
    }

    bool origin = cert.inst.q.coeffs[0].first.is_zero();
    if (origin != cert.origin_is_zero)
        return false;
    if (origin)
        recomputed_total += 1;
    return recomputed_total >= cert.total_certified;
}

Json search_report_to_json(const SearchReport& report) {
    Json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["seed"] = report.seed;
    j["version"] = kToolVersion;
    j["target"] = report.target;
    j["wilmshurst_conjecture"] = wilmshurst_conjecture_value(report.n, report.m);
    j["bezout_n_squared"] = static_cast<unsigned long>(report.n) * report.n;
    j["descartes_n_m_plus_2"] =
        family_upper_bound(report.n, report.m).descartes_total;
    j["trials_used"] = report.trials_used;
    j["improvement_steps"] = report.improvement_steps;
    j["achieved"] = report.achieved;
    j["best_certificate"] = certificate_to_json(report.best_certificate);
    return j;
}

} // namespace wilm
