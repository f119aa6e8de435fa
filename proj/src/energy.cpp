#include "femtosleep/energy.hpp"

#include "femtosleep/errors.hpp"

namespace femtosleep {

namespace {

void check_power_model(const PowerModel& pm) {
    if (!(pm.bs_op_w >= 0.0) || !(pm.fap_op_w >= 0.0)) {
        throw InvalidParameterError("power model: operating powers must be >= 0");
    }
    if (pm.fap_count < 0) {
        throw InvalidParameterError("power model: fap_count must be >= 0");
    }
}

EnergyReport assemble(double traditional_kwh, double proposed_kwh) {
    EnergyReport r;
    r.traditional_kwh = traditional_kwh;
    r.proposed_kwh = proposed_kwh;
    r.saved_kwh = traditional_kwh - proposed_kwh;
    r.saved_fraction = traditional_kwh > 0.0 ? r.saved_kwh / traditional_kwh : 0.0;
    r.net_loss = r.saved_kwh < 0.0;
    return r;
}

}  // namespace

double energy_traditional(double hours, const PowerModel& pm) {
    check_power_model(pm);
    if (!(hours >= 0.0)) {
        throw InvalidParameterError("energy_traditional: hours must be >= 0");
    }
    return pm.bs_op_w * hours / 1000.0;
}

double energy_proposed(double hours, double bs_off_fraction, const PowerModel& pm) {
    check_power_model(pm);
    if (!(hours >= 0.0)) {
        throw InvalidParameterError("energy_proposed: hours must be >= 0");
    }
    if (!(bs_off_fraction >= 0.0 && bs_off_fraction <= 1.0)) {
        throw InvalidParameterError("energy_proposed: bs_off_fraction must lie in [0,1]");
    }
    return (pm.bs_op_w * (1.0 - bs_off_fraction) + pm.fap_count * pm.fap_op_w) * hours /
           1000.0;
}

EnergyReport report(double hours, double bs_off_fraction, const PowerModel& pm) {
    return assemble(energy_traditional(hours, pm),
                    energy_proposed(hours, bs_off_fraction, pm));
}

EnergyReport report_from_timeline(const std::vector<TimelineEntry>& timeline,
                                  double step_hours, const PowerModel& pm) {
    check_power_model(pm);
    if (!(step_hours >= 0.0)) {
        throw InvalidParameterError("report_from_timeline: step_hours must be >= 0");
    }
    double proposed_w_steps = 0.0;
    for (const TimelineEntry& e : timeline) {
        if (e.state.bs_on) proposed_w_steps += pm.bs_op_w;
        if (e.state.faps_on) proposed_w_steps += pm.fap_count * pm.fap_op_w;
    }
    const double horizon_h = step_hours * static_cast<double>(timeline.size());
    return assemble(pm.bs_op_w * horizon_h / 1000.0,
                    proposed_w_steps * step_hours / 1000.0);
}

}  // namespace femtosleep
