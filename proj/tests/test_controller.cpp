#include <cmath>
#include <vector>

#include <doctest.h>

#include "femtosleep/controller.hpp"
#include "femtosleep/errors.hpp"
#include "femtosleep/rng.hpp"

using namespace femtosleep;

namespace {

void check_near(double got, double want, double tol) {
    INFO("got " << got << " want " << want << " tol " << tol);
    CHECK(std::fabs(got - want) <= tol);
}

NetworkLayout single_fap_layout() {
    NetworkLayout layout;
    Station s;
    s.name = "reference";
    s.position = ring_position(1, 0.0);
    s.fap_count = 1;
    layout.stations.push_back(std::move(s));
    return layout;
}

const MacroLossParams kMacro;
const FemtoLossParams kFemto;

NetworkPowerState decide_users(const std::vector<Point>& users,
                               const NetworkLayout& layout, double min_snir_db = 3.0) {
    DecisionSnapshot snap;
    snap.users = users;
    snap.min_snir_db = min_snir_db;
    return decide(snap, layout, kMacro, kFemto);
}

Point random_in_macro(const NetworkLayout& layout, Rng& rng) {
    const double r = layout.macro.radius_m * std::sqrt(rng.uniform());
    const double th = rng.uniform(0.0, 6.283185307179586);
    return {layout.macro.center.x + r * std::cos(th),
            layout.macro.center.y + r * std::sin(th)};
}

}  // namespace

TEST_CASE("decision truth table") {
    const NetworkLayout layout = single_fap_layout();

    CHECK(decide_users({}, layout) == NetworkPowerState{false, false});
    CHECK(decide_users({{0.0, 0.0}}, layout) == NetworkPowerState{true, true});
    // 3 m from the FAP: BS-off SNIR around 17.9 dB, comfortably passing.
    CHECK(decide_users({{103.0, 0.0}}, layout) == NetworkPowerState{false, true});
    // 12 m out: about -0.2 dB, below the 3 dB default.
    CHECK(decide_users({{112.0, 0.0}}, layout) == NetworkPowerState{true, true});
    // One passing user plus one outside FAP coverage: the outsider wins.
    CHECK(decide_users({{103.0, 0.0}, {0.0, 0.0}}, layout) ==
          NetworkPowerState{true, true});
    // Several passing users: still off.
    CHECK(decide_users({{103.0, 0.0}, {104.0, 0.0}, {98.0, 0.0}}, layout) ==
          NetworkPowerState{false, true});
}

TEST_CASE("threshold comparison is a closed bound") {
    const NetworkLayout layout = single_fap_layout();
    const Point user{107.0, 0.0};
    const double db = snir_at_user_db(layout, user, false, kMacro, kFemto);
    CHECK(decide_users({user}, layout, db) == NetworkPowerState{false, true});
    CHECK(decide_users({user}, layout, db + 1e-9) == NetworkPowerState{true, true});
}

TEST_CASE("co-located FAP interference keeps the Office awake") {
    const NetworkLayout layout = default_layout();
    // Office carries 3 FAPs; sibling interference caps the BS-off SNIR
    // below 1/2 linear, so the threshold test fails at any distance.
    CHECK(decide_users({{107.0, 0.0}}, layout) == NetworkPowerState{true, true});
    // The Bank FAP stands alone; a close user passes.
    CHECK(decide_users({{-393.0, 0.0}}, layout) == NetworkPowerState{false, true});
}

TEST_CASE("users outside the macrocell are rejected") {
    const NetworkLayout layout = single_fap_layout();
    CHECK_THROWS_AS(decide_users({{600.0, 0.0}}, layout), OutOfCoverageError);
}

TEST_CASE("raising the threshold never switches the BS off") {
    const NetworkLayout layout = default_layout();
    Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        DecisionSnapshot snap;
        const int n = static_cast<int>(rng.uniform(0.0, 4.0));
        for (int i = 0; i < n; ++i) snap.users.push_back(random_in_macro(layout, rng));
        snap.min_snir_db = rng.uniform(-10.0, 10.0);
        const NetworkPowerState lo = decide(snap, layout, kMacro, kFemto);
        snap.min_snir_db += rng.uniform(0.0, 15.0);
        const NetworkPowerState hi = decide(snap, layout, kMacro, kFemto);
        if (lo.bs_on) CHECK(hi.bs_on);
        CHECK(lo.faps_on == hi.faps_on);  // threshold never touches the FAPs
    }
}

TEST_CASE("adding a user never sends hardware to sleep") {
    const NetworkLayout layout = default_layout();
    Rng rng(515151);
    for (int trial = 0; trial < 60; ++trial) {
        DecisionSnapshot snap;
        const int n = static_cast<int>(rng.uniform(0.0, 4.0));
        for (int i = 0; i < n; ++i) snap.users.push_back(random_in_macro(layout, rng));
        const NetworkPowerState before = decide(snap, layout, kMacro, kFemto);
        snap.users.push_back(random_in_macro(layout, rng));
        const NetworkPowerState after = decide(snap, layout, kMacro, kFemto);
        if (before.bs_on) CHECK(after.bs_on);
        if (before.faps_on) CHECK(after.faps_on);
    }
}

TEST_CASE("schedule duty accounting") {
    const NetworkLayout layout = single_fap_layout();
    const Point outsider{0.0, 0.0};

    auto at = [](double t, std::vector<Point> users) {
        TimedSnapshot ts;
        ts.t_s = t;
        ts.snapshot.users = std::move(users);
        return ts;
    };

    SUBCASE("always empty: BS off the whole span") {
        const auto res =
            run_schedule({at(0, {}), at(600, {}), at(1200, {})}, layout, kMacro, kFemto);
        CHECK(res.bs_off_duty_fraction == 1.0);
        for (const TimelineEntry& e : res.timeline) {
            CHECK(e.state == NetworkPowerState{false, false});
            CHECK(e.n_users == 0);
        }
    }

    SUBCASE("always busy outside FAPs: never off") {
        const auto res = run_schedule({at(0, {outsider}), at(600, {outsider})}, layout,
                                      kMacro, kFemto);
        CHECK(res.bs_off_duty_fraction == 0.0);
        CHECK(res.timeline[0].n_users == 1);
    }

    SUBCASE("alternating, equal spacing: half the time off") {
        const auto res = run_schedule(
            {at(0, {}), at(600, {outsider}), at(1200, {}), at(1800, {outsider})}, layout,
            kMacro, kFemto);
        check_near(res.bs_off_duty_fraction, 0.5, 1e-12);
    }

    SUBCASE("unequal spacing weighs the holds") {
        // Off for 100 s, on for 900 s, then off, holding another 900 s.
        const auto res = run_schedule({at(0, {}), at(100, {outsider}), at(1000, {})},
                                      layout, kMacro, kFemto);
        check_near(res.bs_off_duty_fraction, 1000.0 / 1900.0, 1e-12);
        CHECK(res.timeline[0].t_s == 0.0);
        CHECK(res.timeline[1].t_s == 100.0);
        CHECK(res.timeline[2].t_s == 1000.0);
    }

    SUBCASE("single snapshot takes its own state") {
        CHECK(run_schedule({at(0, {})}, layout, kMacro, kFemto).bs_off_duty_fraction ==
              1.0);
        CHECK(run_schedule({at(0, {outsider})}, layout, kMacro, kFemto)
                  .bs_off_duty_fraction == 0.0);
    }

    SUBCASE("bad schedules throw") {
        CHECK_THROWS_AS(run_schedule({}, layout, kMacro, kFemto), InvalidScheduleError);
        CHECK_THROWS_AS(run_schedule({at(0, {}), at(0, {})}, layout, kMacro, kFemto),
                        InvalidScheduleError);
        CHECK_THROWS_AS(run_schedule({at(5, {}), at(3, {})}, layout, kMacro, kFemto),
                        InvalidScheduleError);
    }
}
