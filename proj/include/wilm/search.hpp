#ifndef WILM_SEARCH_HPP
#define WILM_SEARCH_HPP

#include "wilm/io.hpp"
#include "wilm/valence.hpp"

namespace wilm {

// ceil(n sqrt(m)), computed by exact integer square-root comparison.
unsigned long target_valence(unsigned n, unsigned m);

// 3n - 2 + m(m - 1).
unsigned long wilmshurst_conjecture_value(unsigned n, unsigned m);

// Smallest n in (m, n_limit] with target_valence(n, m) >
// wilmshurst_conjecture_value(n, m), or 0 if none.
unsigned smallest_counterexample_n(unsigned m, unsigned n_limit);

struct SearchReport {
    unsigned n = 0, m = 0;
    unsigned long target = 0; // ceil(n sqrt(m))
    ValenceCertificate best_certificate;
    unsigned trials_used = 0;
    unsigned improvement_steps = 0;
    bool achieved = false;
    uint64_t seed = 0;
};

// Random restarts over complex Kostlan samples with epsilon selection per
// candidate; stops at the first certificate reaching the target.  When
// the restart budget runs out short of the target, the incumbent gets
// refine_steps of hill climbing.
SearchReport hunt_witness(unsigned n, unsigned m, unsigned budget_trials,
                          uint64_t seed, const std::vector<Dyadic>& schedule,
                          unsigned max_precision_bits = kDefaultPrecisionCap,
                          unsigned refine_steps = 0);

// Coordinate-wise Gaussian perturbations at decaying scale; a step is
// kept iff the certified total strictly increases (epsilon re-selected
// after each acceptance).  Output total >= input total.
WilmshurstInstance local_refine(const WilmshurstInstance& inst, unsigned steps,
                                uint64_t seed,
                                const std::vector<Dyadic>& schedule,
                                unsigned max_precision_bits = kDefaultPrecisionCap,
                                unsigned* accepted_steps = nullptr);

// Independent re-check: rebuilds each line restriction from (n, m,
// epsilon, q) at the recorded precision, re-certifies every recorded
// sign and recomputes the totals.  Throws SchemaError on malformed
// input; precision exhaustion is a verification failure, never success.
bool verify_certificate(const Json& cert_json);

Json search_report_to_json(const SearchReport& report);

} // namespace wilm

#endif
