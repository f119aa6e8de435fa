#include "femtosleep/layout.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "femtosleep/errors.hpp"

namespace femtosleep {

int NetworkLayout::total_fap_count() const {
    int n = 0;
    for (const auto& s : stations) n += s.fap_count;
    return n;
}

double fap_area(double radius_m) {
    if (!(radius_m > 0.0)) {
        throw InvalidParameterError("fap_area: radius must be > 0, got " +
                                    std::to_string(radius_m));
    }
    return std::numbers::pi * radius_m * radius_m;
}

Placement locate(const NetworkLayout& layout, Point p) {
    if (!is_finite(p) || distance(p, layout.macro.center) > layout.macro.radius_m) {
        throw OutOfCoverageError("locate: point outside the macrocell disc");
    }
    for (std::size_t i = 0; i < layout.stations.size(); ++i) {
        const Station& s = layout.stations[i];
        if (distance(p, s.position) <= s.fap_radius_m) {
            return {s.has_fap() ? CoverageClass::InsideFap
                                : CoverageClass::InsideStationNoFap,
                    i};
        }
    }
    return {CoverageClass::FreeSpace, 0};
}

std::vector<std::string> validate(const NetworkLayout& layout) {
    std::vector<std::string> issues;
    auto add = [&issues](const std::string& msg) { issues.push_back(msg); };

    const MacroCell& m = layout.macro;
    if (!is_finite(m.center)) add("macro center is not finite");
    if (!(m.radius_m > 0.0)) add("macro radius must be > 0");
    if (!(m.bs_height_m > 0.0)) add("macro BS height must be > 0");
    if (!(m.bs_tx_w > 0.0)) add("macro BS transmit power must be > 0");
    if (!(m.bs_op_w > 0.0)) add("macro BS operating power must be > 0");
    if (!(layout.free_space_factor >= 0.0 && layout.free_space_factor <= 1.0)) {
        add("free_space_factor must lie in [0,1]");
    }

    for (std::size_t i = 0; i < layout.stations.size(); ++i) {
        const Station& s = layout.stations[i];
        std::ostringstream tag;
        tag << "station \"" << s.name << "\" (#" << i << ")";
        if (!is_finite(s.position)) add(tag.str() + ": position is not finite");
        if (!(s.fap_radius_m > 0.0)) add(tag.str() + ": fap_radius must be > 0");
        if (s.fap_count < 0) add(tag.str() + ": fap_count must be >= 0");
        if (!(s.factor >= 0.0 && s.factor <= 1.0)) {
            add(tag.str() + ": factor must lie in [0,1]");
        }
        if (is_finite(s.position) && s.fap_radius_m > 0.0 &&
            distance(s.position, m.center) + s.fap_radius_m > m.radius_m) {
            add(tag.str() + ": disc extends beyond the macrocell boundary");
        }
    }

    // Tangent discs (distance exactly r1 + r2) are not an overlap.
    for (std::size_t i = 0; i < layout.stations.size(); ++i) {
        for (std::size_t j = i + 1; j < layout.stations.size(); ++j) {
            const Station& a = layout.stations[i];
            const Station& b = layout.stations[j];
            if (!is_finite(a.position) || !is_finite(b.position)) continue;
            if (distance(a.position, b.position) < a.fap_radius_m + b.fap_radius_m) {
                add("stations \"" + a.name + "\" and \"" + b.name + "\" overlap");
            }
        }
    }
    return issues;
}

Point ring_position(int ring, double angle_deg) {
    if (ring < 1 || ring > static_cast<int>(kPlacementRingRadiusM.size())) {
        throw InvalidParameterError("ring_position: ring must be 1..4, got " +
                                    std::to_string(ring));
    }
    const double r = kPlacementRingRadiusM[static_cast<std::size_t>(ring - 1)];
    const double rad = angle_deg * std::numbers::pi / 180.0;
    return {r * std::cos(rad), r * std::sin(rad)};
}

NetworkLayout default_layout() {
    struct Row {
        const char* name;
        int faps;
        double factor;
    };
    // Station table, declaration order fixed: ring assignment and the
    // FAP extension order both follow it.
    static constexpr Row kTable[] = {
        {"Office", 3, 1.0},           {"Super shop", 2, 0.8},
        {"Community center", 3, 0.8}, {"Residence 1", 1, 0.7},
        {"Residence 2", 1, 0.7},      {"Residence 3", 1, 0.7},
        {"Residence 4", 1, 0.7},      {"Bank", 1, 1.0},
        {"Hotel", 1, 0.7},            {"Shop 1", 1, 0.7},
        {"Shop 2", 0, 0.3},
    };
    constexpr int kRings = static_cast<int>(kPlacementRingRadiusM.size());

    // Round-robin over the rings, then evenly spaced angles per ring.
    std::array<int, kRings> per_ring{};
    for (std::size_t i = 0; i < std::size(kTable); ++i) {
        per_ring[i % kRings]++;
    }
    std::array<int, kRings> slot{};
    NetworkLayout layout;
    layout.free_space_factor = 0.01;
    layout.stations.reserve(std::size(kTable));
    for (std::size_t i = 0; i < std::size(kTable); ++i) {
        const int ring = static_cast<int>(i % kRings);
        const double angle = 360.0 * slot[ring]++ / per_ring[ring];
        Station s;
        s.name = kTable[i].name;
        s.position = ring_position(ring + 1, angle);
        s.fap_count = kTable[i].faps;
        s.fap_radius_m = 15.0;
        s.factor = kTable[i].factor;
        layout.stations.push_back(std::move(s));
    }
    return layout;
}

}  // namespace femtosleep
