#ifndef FEMTOSLEEP_COVERAGE_HPP
#define FEMTOSLEEP_COVERAGE_HPP

#include <cstdint>
#include <vector>

#include "femtosleep/layout.hpp"

namespace femtosleep {

// Factor-weighted coverage masses and the single-user in-FAP probability
// they define. p_single_user = weighted_fap_mass / weighted_total_mass.
struct CoverageSummary {
    double p_single_user = 0.0;
    double weighted_fap_mass = 0.0;    // sum of factor * disc area over FAP-equipped stations
    double weighted_total_mass = 0.0;  // + zero-FAP station mass + f_M * free-space area
};

// Probability that one factor-weighted random user lands inside FAP
// coverage. Numerator: FAP-equipped stations only. Denominator adds
// zero-FAP stations and the free-space remainder. Throws
// DegenerateLayoutError when the total mass is zero.
CoverageSummary user_in_fap_probability(const NetworkLayout& layout);

// Probability that all n independent users are inside FAP coverage,
// P^n with P from user_in_fap_probability. n = 0 returns 1.
double bs_off_probability_exact(const NetworkLayout& layout, int n_users);

// The averaged form (f_p)^n with f_p an externally supplied mean factor.
double bs_off_probability_simplified(double f_p, int n_users);

struct SweepRow {
    int fap_count = 0;
    int n_users = 0;
    double p_off = 0.0;
};

// The layout holding only the first k FAPs of the extension order: base
// stations keep their identity and receive FAPs in declaration order up
// to their own count; once the base total is exhausted, synthetic
// stations (factor 0.7, radius 15 m, named "extra-<n>") are appended on
// free 30-degree slots of the placement rings, ring-major. Throws
// InvalidParameterError for k < 0 or k beyond the slot capacity, and a
// validation Error if the resulting layout is invalid.
NetworkLayout layout_with_first_k_faps(const NetworkLayout& base, int k);

// BS turn-off probability over k = 0..max_faps and the given user
// counts; rows ordered by (k, n_users) with users sorted ascending and
// de-duplicated.
std::vector<SweepRow> sweep_fap_count(const NetworkLayout& base, int max_faps,
                                      std::vector<int> users);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

// Monte Carlo estimate of the in-FAP probability, sampling user
// positions from the factor-weighted density (the simulation module's
// sampler). Returns the hit fraction and its binomial standard error;
// deterministic for a fixed seed.
McEstimate monte_carlo_user_in_fap(const NetworkLayout& layout, long trials,
                                   std::uint64_t seed);

}  // namespace femtosleep

#endif
