#ifndef FEMTOSLEEP_LAYOUT_HPP
#define FEMTOSLEEP_LAYOUT_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "femtosleep/geometry.hpp"

namespace femtosleep {

// A named place inside the macrocell. fap_count = 0 means the place has
// users (its factor still weighs the denominator of the coverage ratio)
// but no installed FAP. A count k > 1 models k co-located FAPs sharing
// one disc; the disc area is never counted more than once.
struct Station {
    std::string name;
    Point position;
    int fap_count = 0;
    double fap_radius_m = 15.0;
    double factor = 1.0;  // importance factor f, in [0,1]

    bool has_fap() const { return fap_count >= 1; }
};

struct MacroCell {
    Point center;
    double radius_m = 500.0;
    double bs_height_m = 100.0;
    double bs_tx_w = 1500.0;
    double bs_op_w = 2000.0;
};

struct NetworkLayout {
    MacroCell macro;
    std::vector<Station> stations;
    double free_space_factor = 0.01;  // f_M

    int total_fap_count() const;
};

// Coverage classes form a partition of the macro disc: every in-cell
// point belongs to exactly one (station discs are pairwise disjoint in
// a valid layout; boundaries are closed, ties go to the first station
// in layout order).
enum class CoverageClass { InsideFap, InsideStationNoFap, FreeSpace };

struct Placement {
    CoverageClass cls = CoverageClass::FreeSpace;
    std::size_t station = 0;  // valid only when cls != FreeSpace

    bool in_fap() const { return cls == CoverageClass::InsideFap; }
};

// Disc coverage area of one FAP, pi*r^2. Throws InvalidParameterError
// for radius <= 0.
double fap_area(double radius_m);

// Classify a point. Throws OutOfCoverageError when p lies outside the
// macro disc (boundary included).
Placement locate(const NetworkLayout& layout, Point p);

// One message per violated invariant; an empty report means the layout
// is valid. Checked: positive macro geometry/powers, factor ranges,
// station discs inside the macro disc, pairwise disc overlap (tangency
// is allowed), finite coordinates.
std::vector<std::string> validate(const NetworkLayout& layout);

// Placement rings used when a station is given as (ring, angle) instead
// of explicit coordinates. Ring i (1-based) has radius 100*i meters.
inline constexpr std::array<double, 4> kPlacementRingRadiusM{100.0, 200.0, 300.0, 400.0};

// Position on a placement ring. ring is 1..4; angle measured
// counterclockwise from the +x axis. Throws InvalidParameterError for a
// ring outside the table.
Point ring_position(int ring, double angle_deg);

// The canonical 15-FAP layout: eleven named stations assigned round-robin
// to the four placement rings in declaration order, evenly spaced in
// angle within each ring. Deterministic; validate() of the result is
// empty.
NetworkLayout default_layout();

}  // namespace femtosleep

#endif
