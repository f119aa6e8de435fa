#include "femtosleep/simkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "femtosleep/errors.hpp"

namespace femtosleep {

int ScenarioConfig::steps() const {
    if (!(horizon_h > 0.0) || !(step_min > 0.0)) {
        throw InvalidParameterError("scenario: horizon and step must be > 0");
    }
    const double ratio = horizon_h * 60.0 / step_min;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 || rounded < 1.0) {
        throw InvalidParameterError("scenario: step_min must divide the horizon evenly");
    }
    for (double m : hourly_mean_users) {
        if (!(m >= 0.0)) {
            throw InvalidParameterError("scenario: hourly means must be >= 0");
        }
    }
    return static_cast<int>(rounded);
}

namespace {

struct Region {
    double mass = 0.0;       // factor * area
    int station = -1;        // -1 marks free space
};

std::vector<Region> region_masses(const NetworkLayout& layout) {
    std::vector<Region> regions;
    regions.reserve(layout.stations.size() + 1);
    double station_area = 0.0;
    for (std::size_t i = 0; i < layout.stations.size(); ++i) {
        const Station& s = layout.stations[i];
        const double area = fap_area(s.fap_radius_m);
        station_area += area;
        regions.push_back({s.factor * area, static_cast<int>(i)});
    }
    const double free_area =
        std::max(fap_area(layout.macro.radius_m) - station_area, 0.0);
    regions.push_back({layout.free_space_factor * free_area, -1});
    return regions;
}

Point uniform_in_disc(Point center, double radius, Rng& rng) {
    const double r = radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

Point sample_free_space(const NetworkLayout& layout, Rng& rng) {
    // Rejection sample: uniform in the macro disc, outside every station
    // disc. The free region has positive area whenever this is reached.
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const Point p = uniform_in_disc(layout.macro.center, layout.macro.radius_m, rng);
        bool in_station = false;
        for (const Station& s : layout.stations) {
            if (distance(p, s.position) <= s.fap_radius_m) {
                in_station = true;
                break;
            }
        }
        if (!in_station) return p;
    }
    throw InternalError("sample_free_space: rejection sampling failed to converge");
}

}  // namespace

std::vector<Point> sample_user_positions(const NetworkLayout& layout, int n, Rng& rng) {
    if (n < 0) {
        throw InvalidParameterError("sample_user_positions: n must be >= 0");
    }
    const auto regions = region_masses(layout);
    double total = 0.0;
    for (const Region& r : regions) total += r.mass;
    if (!(total > 0.0)) {
        throw DegenerateLayoutError(
            "sample_user_positions: factor-weighted mass is zero everywhere");
    }

    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double pick = rng.uniform() * total;
        const Region* chosen = &regions.back();
        for (const Region& r : regions) {
            if (pick < r.mass) {
                chosen = &r;
                break;
            }
            pick -= r.mass;
        }
        if (chosen->station >= 0) {
            const Station& s = layout.stations[static_cast<std::size_t>(chosen->station)];
            points.push_back(uniform_in_disc(s.position, s.fap_radius_m, rng));
        } else {
            points.push_back(sample_free_space(layout, rng));
        }
    }
    return points;
}

SimulationResult run_simulation(const ScenarioConfig& cfg, const NetworkLayout& layout,
                                const MacroLossParams& macro_p,
                                const FemtoLossParams& femto_p, const PowerModel& pm,
                                double min_snir_db, const LinkEnv& env) {
    if (auto issues = validate(layout); !issues.empty()) {
        std::string msg = "run_simulation: layout is invalid:";
        for (const auto& m : issues) msg += "\n  " + m;
        throw InvalidLayoutError(msg);
    }
    const int n_steps = cfg.steps();
    const double step_h = cfg.step_min / 60.0;

    SimulationResult result;
    result.step_h = step_h;
    result.timeline.reserve(static_cast<std::size_t>(n_steps));
    std::vector<double> snir_samples;

    int off_steps = 0;
    for (int step = 0; step < n_steps; ++step) {
        Rng rng(substream_seed(cfg.seed, static_cast<std::uint64_t>(step)));
        const double t_s = step * cfg.step_min * 60.0;
        const int hour = static_cast<int>(std::fmod(step * cfg.step_min / 60.0, 24.0));
        const double mean = cfg.hourly_mean_users[static_cast<std::size_t>(hour)];

        DecisionSnapshot snapshot;
        snapshot.min_snir_db = min_snir_db;
        snapshot.users = sample_user_positions(layout, rng.poisson(mean), rng);

        const NetworkPowerState state = decide(snapshot, layout, macro_p, femto_p, env);
        if (!state.bs_on) ++off_steps;
        result.timeline.push_back({t_s, state, static_cast<int>(snapshot.users.size())});

        for (const Point& user : snapshot.users) {
            if (locate(layout, user).in_fap()) {
                snir_samples.push_back(
                    snir_at_user_db(layout, user, state.bs_on, macro_p, femto_p, env));
            }
        }
    }

    result.bs_off_fraction = static_cast<double>(off_steps) / n_steps;
    result.energy = report_from_timeline(result.timeline, step_h, pm);

    SnirStats& stats = result.snir;
    stats.count = static_cast<long>(snir_samples.size());
    if (snir_samples.empty()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        stats.min_db = stats.mean_db = stats.median_db = nan;
    } else {
        std::sort(snir_samples.begin(), snir_samples.end());
        stats.min_db = snir_samples.front();
        double sum = 0.0;
        for (double v : snir_samples) sum += v;
        stats.mean_db = sum / static_cast<double>(snir_samples.size());
        const std::size_t mid = snir_samples.size() / 2;
        stats.median_db = snir_samples.size() % 2 == 1
                              ? snir_samples[mid]
                              : 0.5 * (snir_samples[mid - 1] + snir_samples[mid]);
    }
    return result;
}

}  // namespace femtosleep
