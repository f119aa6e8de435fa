#include "femtosleep/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "femtosleep/errors.hpp"
#include "femtosleep/rng.hpp"
#include "femtosleep/simkit.hpp"

namespace femtosleep {

CoverageSummary user_in_fap_probability(const NetworkLayout& layout) {
    CoverageSummary out;
    double station_area = 0.0;
    double zero_fap_mass = 0.0;
    for (const Station& s : layout.stations) {
        const double area = fap_area(s.fap_radius_m);
        station_area += area;
        if (s.has_fap()) {
            out.weighted_fap_mass += s.factor * area;
        } else {
            zero_fap_mass += s.factor * area;
        }
    }
    const double macro_area = fap_area(layout.macro.radius_m);
    const double free_mass =
        layout.free_space_factor * (macro_area - station_area);
    out.weighted_total_mass = out.weighted_fap_mass + zero_fap_mass + free_mass;
    if (!(out.weighted_total_mass > 0.0)) {
        throw DegenerateLayoutError(
            "user_in_fap_probability: factor-weighted mass is zero everywhere");
    }
    out.p_single_user = out.weighted_fap_mass / out.weighted_total_mass;
    return out;
}

double bs_off_probability_exact(const NetworkLayout& layout, int n_users) {
    if (n_users < 0) {
        throw InvalidParameterError("bs_off_probability_exact: n_users must be >= 0");
    }
    const double p = user_in_fap_probability(layout).p_single_user;
    return std::pow(p, n_users);
}

double bs_off_probability_simplified(double f_p, int n_users) {
    if (!(f_p >= 0.0 && f_p <= 1.0)) {
        throw InvalidParameterError("bs_off_probability_simplified: f_p must lie in [0,1]");
    }
    if (n_users < 0) {
        throw InvalidParameterError("bs_off_probability_simplified: n_users must be >= 0");
    }
    return std::pow(f_p, n_users);
}

namespace {

constexpr double kExtraFactor = 0.7;
constexpr double kExtraRadiusM = 15.0;
constexpr double kSlotStepDeg = 30.0;

bool slot_free(const NetworkLayout& layout, Point pos) {
    if (distance(pos, layout.macro.center) + kExtraRadiusM > layout.macro.radius_m) {
        return false;
    }
    for (const Station& s : layout.stations) {
        if (distance(pos, s.position) < kExtraRadiusM + s.fap_radius_m) {
            return false;
        }
    }
    return true;
}

}  // namespace

NetworkLayout layout_with_first_k_faps(const NetworkLayout& base, int k) {
    if (k < 0) {
        throw InvalidParameterError("layout_with_first_k_faps: k must be >= 0");
    }
    NetworkLayout out = base;
    int remaining = k;
    for (Station& s : out.stations) {
        const int take = std::min(std::max(s.fap_count, 0), remaining);
        s.fap_count = take;
        remaining -= take;
    }
    int extra_index = 0;
    for (int ring = 1; ring <= static_cast<int>(kPlacementRingRadiusM.size()) && remaining > 0;
         ++ring) {
        for (double angle = 0.0; angle < 360.0 && remaining > 0; angle += kSlotStepDeg) {
            const Point pos = ring_position(ring, angle);
            if (!slot_free(out, pos)) continue;
            Station s;
            s.name = "extra-" + std::to_string(++extra_index);
            s.position = pos;
            s.fap_count = 1;
            s.fap_radius_m = kExtraRadiusM;
            s.factor = kExtraFactor;
            out.stations.push_back(std::move(s));
            --remaining;
        }
    }
    if (remaining > 0) {
        throw InvalidParameterError(
            "layout_with_first_k_faps: placement rings exhausted, cannot place " +
            std::to_string(remaining) + " more FAPs");
    }
    if (auto issues = validate(out); !issues.empty()) {
        std::string msg = "layout_with_first_k_faps: resulting layout is invalid:";
        for (const auto& m : issues) msg += "\n  " + m;
        throw InvalidLayoutError(msg);
    }
    return out;
}

std::vector<SweepRow> sweep_fap_count(const NetworkLayout& base, int max_faps,
                                      std::vector<int> users) {
    if (max_faps < 0) {
        throw InvalidParameterError("sweep_fap_count: max_faps must be >= 0");
    }
    for (int n : users) {
        if (n < 0) {
            throw InvalidParameterError("sweep_fap_count: user counts must be >= 0");
        }
    }
    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(max_faps + 1) * users.size());
    for (int k = 0; k <= max_faps; ++k) {
        const NetworkLayout layout = layout_with_first_k_faps(base, k);
        const double p = user_in_fap_probability(layout).p_single_user;
        for (int n : users) {
            rows.push_back({k, n, std::pow(p, n)});
        }
    }
    return rows;
}

McEstimate monte_carlo_user_in_fap(const NetworkLayout& layout, long trials,
                                   std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidParameterError("monte_carlo_user_in_fap: trials must be >= 1");
    }
    Rng rng(seed);
    long hits = 0;
    constexpr long kBatch = 65536;
    long done = 0;
    while (done < trials) {
        const long n = std::min(kBatch, trials - done);
        const auto points = sample_user_positions(layout, static_cast<int>(n), rng);
        for (const Point& p : points) {
            if (locate(layout, p).in_fap()) ++hits;
        }
        done += n;
    }
    McEstimate est;
    est.trials = trials;
    est.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    est.std_error =
        std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(trials));
    return est;
}

}  // namespace femtosleep
