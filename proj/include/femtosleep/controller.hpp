#ifndef FEMTOSLEEP_CONTROLLER_HPP
#define FEMTOSLEEP_CONTROLLER_HPP

#include <vector>

#include "femtosleep/propagation.hpp"

namespace femtosleep {

struct NetworkPowerState {
    bool bs_on = true;
    bool faps_on = true;

    friend bool operator==(NetworkPowerState, NetworkPowerState) = default;
};

struct DecisionSnapshot {
    std::vector<Point> users;
    double min_snir_db = 3.0;  // acceptable-signal threshold with the BS off
};

// The sleep decision over one snapshot of user positions:
//   no users                                   -> BS off, FAPs off
//   any user outside FAP coverage              -> BS on,  FAPs on
//   all inside and bs-off SNIR >= threshold    -> BS off, FAPs on
//   all inside but some user below threshold   -> BS on,  FAPs on
// Throws OutOfCoverageError if a user lies outside the macro disc.
NetworkPowerState decide(const DecisionSnapshot& snapshot, const NetworkLayout& layout,
                         const MacroLossParams& macro_p, const FemtoLossParams& femto_p,
                         const LinkEnv& env = {});

struct TimedSnapshot {
    double t_s = 0.0;  // seconds
    DecisionSnapshot snapshot;
};

struct TimelineEntry {
    double t_s = 0.0;
    NetworkPowerState state;
    int n_users = 0;
};

struct ScheduleResult {
    std::vector<TimelineEntry> timeline;
    double bs_off_duty_fraction = 0.0;
};

// Run decide() over a time-ordered schedule. Each state holds from its
// snapshot until the next one; the final state holds for a repeat of the
// preceding interval, so equally spaced schedules weight every snapshot
// equally. A single-snapshot schedule has duty fraction 1 or 0 by its
// own state. Throws InvalidScheduleError when the schedule is empty or
// timestamps are not strictly increasing.
ScheduleResult run_schedule(const std::vector<TimedSnapshot>& snapshots,
                            const NetworkLayout& layout, const MacroLossParams& macro_p,
                            const FemtoLossParams& femto_p, const LinkEnv& env = {});

}  // namespace femtosleep

#endif
