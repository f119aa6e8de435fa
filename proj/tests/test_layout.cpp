#include <cmath>

#include <doctest.h>

#include "femtosleep/errors.hpp"
#include "femtosleep/layout.hpp"
#include "femtosleep/rng.hpp"

using namespace femtosleep;

namespace {

void check_near(double got, double want, double tol) {
    INFO("got " << got << " want " << want << " tol " << tol);
    CHECK(std::fabs(got - want) <= tol);
}

const Station* find_station(const NetworkLayout& layout, const std::string& name) {
    for (const Station& s : layout.stations) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("fap_area is pi r^2 and rejects non-positive radii") {
    check_near(fap_area(15.0), 706.858347, 1e-5);
    check_near(fap_area(1.0), 3.14159265358979, 1e-12);
    CHECK_THROWS_AS(fap_area(0.0), InvalidParameterError);
    CHECK_THROWS_AS(fap_area(-1.0), InvalidParameterError);
}

TEST_CASE("fap_area grows strictly with the radius") {
    double prev = 0.0;
    for (double r = 1.0; r <= 50.0; r += 0.5) {
        const double a = fap_area(r);
        CHECK(a > prev);
        prev = a;
    }
}

TEST_CASE("ring positions") {
    check_near(ring_position(1, 0.0).x, 100.0, 1e-9);
    check_near(ring_position(1, 0.0).y, 0.0, 1e-9);
    check_near(ring_position(2, 90.0).x, 0.0, 1e-9);
    check_near(ring_position(2, 90.0).y, 200.0, 1e-9);
    check_near(ring_position(4, 180.0).x, -400.0, 1e-9);
    CHECK_THROWS_AS(ring_position(0, 0.0), InvalidParameterError);
    CHECK_THROWS_AS(ring_position(5, 0.0), InvalidParameterError);
}

TEST_CASE("default layout matches the station table") {
    const NetworkLayout layout = default_layout();
    REQUIRE(layout.stations.size() == 11);
    CHECK(layout.total_fap_count() == 15);
    CHECK(layout.free_space_factor == 0.01);
    CHECK(layout.macro.radius_m == 500.0);
    CHECK(layout.macro.bs_height_m == 100.0);
    CHECK(layout.macro.bs_tx_w == 1500.0);
    CHECK(layout.macro.bs_op_w == 2000.0);
    CHECK(validate(layout).empty());

    struct Want {
        const char* name;
        int faps;
        double factor;
        double x, y;
    };
    const Want wants[] = {
        {"Office", 3, 1.0, 100.0, 0.0},
        {"Super shop", 2, 0.8, 200.0, 0.0},
        {"Community center", 3, 0.8, 300.0, 0.0},
        {"Residence 1", 1, 0.7, 400.0, 0.0},
        {"Residence 2", 1, 0.7, -50.0, 86.602540},
        {"Residence 3", 1, 0.7, -100.0, 173.205081},
        {"Residence 4", 1, 0.7, -150.0, 259.807621},
        {"Bank", 1, 1.0, -400.0, 0.0},
        {"Hotel", 1, 0.7, -50.0, -86.602540},
        {"Shop 1", 1, 0.7, -100.0, -173.205081},
        {"Shop 2", 0, 0.3, -150.0, -259.807621},
    };
    for (const Want& w : wants) {
        INFO("station " << w.name);
        const Station* s = find_station(layout, w.name);
        REQUIRE(s != nullptr);
        CHECK(s->fap_count == w.faps);
        CHECK(s->factor == w.factor);
        CHECK(s->fap_radius_m == 15.0);
        check_near(s->position.x, w.x, 1e-5);
        check_near(s->position.y, w.y, 1e-5);
    }
}

TEST_CASE("locate classifies the three coverage classes") {
    const NetworkLayout layout = default_layout();

    const Placement office = locate(layout, {100.0, 0.0});
    CHECK(office.cls == CoverageClass::InsideFap);
    CHECK(layout.stations[office.station].name == "Office");
    CHECK(office.in_fap());

    // Disc boundaries are closed.
    CHECK(locate(layout, {115.0, 0.0}).in_fap());
    CHECK(locate(layout, {115.0001, 0.0}).cls == CoverageClass::FreeSpace);

    const Placement shop2 = locate(layout, {-150.0, -259.807621});
    CHECK(shop2.cls == CoverageClass::InsideStationNoFap);
    CHECK(layout.stations[shop2.station].name == "Shop 2");
    CHECK(!shop2.in_fap());

    CHECK(locate(layout, {0.0, 0.0}).cls == CoverageClass::FreeSpace);
    CHECK(locate(layout, {500.0, 0.0}).cls == CoverageClass::FreeSpace);

    CHECK_THROWS_AS(locate(layout, {500.0001, 0.0}), OutOfCoverageError);
    CHECK_THROWS_AS(locate(layout, {-400.0, -400.0}), OutOfCoverageError);
}

TEST_CASE("locate partitions the macro disc") {
    const NetworkLayout layout = default_layout();
    Rng rng(20260814);
    for (int i = 0; i < 2000; ++i) {
        const double r = layout.macro.radius_m * std::sqrt(rng.uniform());
        const double th = rng.uniform(0.0, 6.283185307179586);
        const Point p{r * std::cos(th), r * std::sin(th)};
        const Placement where = locate(layout, p);
        if (where.cls == CoverageClass::FreeSpace) {
            for (const Station& s : layout.stations) {
                CHECK(distance(p, s.position) > s.fap_radius_m);
            }
        } else {
            const Station& s = layout.stations[where.station];
            CHECK(distance(p, s.position) <= s.fap_radius_m);
            CHECK((where.cls == CoverageClass::InsideFap) == s.has_fap());
        }
    }
}

TEST_CASE("validate accepts the default and flags each broken invariant") {
    CHECK(validate(default_layout()).empty());

    NetworkLayout bad_factor = default_layout();
    bad_factor.stations[0].factor = 1.5;
    CHECK(validate(bad_factor).size() == 1);

    NetworkLayout overlap = default_layout();
    Station clone = overlap.stations[0];
    clone.name = "clone";
    clone.position.x += 20.0;  // 20 m apart, radii 15 + 15
    overlap.stations.push_back(clone);
    CHECK(!validate(overlap).empty());

    NetworkLayout outside = default_layout();
    outside.stations[0].position = {495.0, 0.0};  // disc pokes past 500 m
    CHECK(!validate(outside).empty());

    NetworkLayout bad_macro = default_layout();
    bad_macro.macro.radius_m = -1.0;
    CHECK(!validate(bad_macro).empty());

    NetworkLayout bad_free = default_layout();
    bad_free.free_space_factor = 1.2;
    CHECK(!validate(bad_free).empty());

    NetworkLayout nonfinite = default_layout();
    nonfinite.stations[2].position.x = std::nan("");
    CHECK(!validate(nonfinite).empty());
}

TEST_CASE("validate allows tangent discs") {
    NetworkLayout layout = default_layout();
    Station tangent = layout.stations[0];
    tangent.name = "tangent";
    tangent.position.x += 30.0;  // exactly r1 + r2
    layout.stations.push_back(tangent);
    CHECK(validate(layout).empty());
}
