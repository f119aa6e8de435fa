#include "femtosleep/controller.hpp"

#include "femtosleep/errors.hpp"

namespace femtosleep {

NetworkPowerState decide(const DecisionSnapshot& snapshot, const NetworkLayout& layout,
                         const MacroLossParams& macro_p, const FemtoLossParams& femto_p,
                         const LinkEnv& env) {
    if (snapshot.users.empty()) {
        return {false, false};
    }
    for (const Point& user : snapshot.users) {
        if (!locate(layout, user).in_fap()) {
            return {true, true};
        }
    }
    for (const Point& user : snapshot.users) {
        const double db = snir_at_user_db(layout, user, /*bs_on=*/false, macro_p,
                                          femto_p, env);
        if (!(db >= snapshot.min_snir_db)) {
            return {true, true};
        }
    }
    return {false, true};
}

ScheduleResult run_schedule(const std::vector<TimedSnapshot>& snapshots,
                            const NetworkLayout& layout, const MacroLossParams& macro_p,
                            const FemtoLossParams& femto_p, const LinkEnv& env) {
    if (snapshots.empty()) {
        throw InvalidScheduleError("run_schedule: schedule is empty");
    }
    for (std::size_t i = 1; i < snapshots.size(); ++i) {
        if (!(snapshots[i].t_s > snapshots[i - 1].t_s)) {
            throw InvalidScheduleError(
                "run_schedule: timestamps must be strictly increasing");
        }
    }

    ScheduleResult out;
    out.timeline.reserve(snapshots.size());
    for (const TimedSnapshot& ts : snapshots) {
        out.timeline.push_back({ts.t_s,
                                decide(ts.snapshot, layout, macro_p, femto_p, env),
                                static_cast<int>(ts.snapshot.users.size())});
    }

    if (snapshots.size() == 1) {
        out.bs_off_duty_fraction = out.timeline.front().state.bs_on ? 0.0 : 1.0;
        return out;
    }
    const std::size_t n = out.timeline.size();
    const double last_hold = snapshots[n - 1].t_s - snapshots[n - 2].t_s;
    const double span = snapshots.back().t_s - snapshots.front().t_s + last_hold;
    double off_time = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double hold =
            i + 1 < n ? snapshots[i + 1].t_s - snapshots[i].t_s : last_hold;
        if (!out.timeline[i].state.bs_on) off_time += hold;
    }
    out.bs_off_duty_fraction = off_time / span;
    return out;
}

}  // namespace femtosleep
