#ifndef FEMTOSLEEP_ENERGY_HPP
#define FEMTOSLEEP_ENERGY_HPP

#include <vector>

#include "femtosleep/controller.hpp"

namespace femtosleep {

struct PowerModel {
    double bs_op_w = 2000.0;
    double fap_op_w = 8.0;
    int fap_count = 0;
};

struct EnergyReport {
    double traditional_kwh = 0.0;
    double proposed_kwh = 0.0;
    double saved_kwh = 0.0;
    double saved_fraction = 0.0;  // of traditional; 0 when traditional is 0
    bool net_loss = false;        // FAP overhead exceeded the BS savings
};

// Always-on baseline: the BS runs the whole horizon, no FAPs.
double energy_traditional(double hours, const PowerModel& pm);

// Proposed scheme from a scalar duty fraction: the BS runs for
// (1 - bs_off_fraction) of the horizon, FAPs for all of it.
double energy_proposed(double hours, double bs_off_fraction, const PowerModel& pm);

EnergyReport report(double hours, double bs_off_fraction, const PowerModel& pm);

// Proposed scheme from a controller timeline: per entry, the BS is
// charged when bs_on and the FAPs when faps_on, each for one step of
// step_hours; the baseline spans the same horizon.
EnergyReport report_from_timeline(const std::vector<TimelineEntry>& timeline,
                                  double step_hours, const PowerModel& pm);

}  // namespace femtosleep

#endif
