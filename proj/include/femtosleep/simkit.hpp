#ifndef FEMTOSLEEP_SIMKIT_HPP
#define FEMTOSLEEP_SIMKIT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "femtosleep/controller.hpp"
#include "femtosleep/energy.hpp"
#include "femtosleep/rng.hpp"

namespace femtosleep {

// A simulated day (or longer): users are redrawn each step from the
// hour's mean of the diurnal profile.
struct ScenarioConfig {
    std::uint64_t seed = 1;
    double horizon_h = 24.0;
    double step_min = 10.0;  // the periodic checking interval
    std::array<double, 24> hourly_mean_users{
        0.2, 0.1, 0.1, 0.1, 0.1, 0.3,  // night
        0.8, 1.5, 2.5, 3.0, 3.0, 3.0,  // morning
        3.0, 3.0, 3.0, 3.0, 2.5, 2.5,  // afternoon
        2.0, 1.5, 1.0, 0.8, 0.5, 0.3,  // evening
    };

    int steps() const;  // throws unless step_min divides the horizon evenly
};

// Draw n user positions with density proportional to factor within each
// region: the region (station disc or free space) is chosen by its
// factor*area mass, the point uniformly within it. Throws
// DegenerateLayoutError when every mass is zero.
std::vector<Point> sample_user_positions(const NetworkLayout& layout, int n, Rng& rng);

struct SnirStats {
    double min_db = 0.0;
    double mean_db = 0.0;
    double median_db = 0.0;
    long count = 0;  // served in-FAP users observed; stats are NaN when 0
};

struct SimulationResult {
    std::vector<TimelineEntry> timeline;
    double step_h = 0.0;
    double bs_off_fraction = 0.0;
    EnergyReport energy;  // accounted from the timeline
    SnirStats snir;
};

// End-to-end run: per step, draw the user count from the hour's mean
// (Poisson), sample positions, decide the power state, and record SNIR
// for every in-FAP user under the decided BS state. Each step uses a
// substream derived from (seed, step), so results are bit-identical for
// a fixed seed regardless of evaluation order.
SimulationResult run_simulation(const ScenarioConfig& cfg, const NetworkLayout& layout,
                                const MacroLossParams& macro_p,
                                const FemtoLossParams& femto_p, const PowerModel& pm,
                                double min_snir_db, const LinkEnv& env = {});

}  // namespace femtosleep

#endif
