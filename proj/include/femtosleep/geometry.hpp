#ifndef FEMTOSLEEP_GEOMETRY_HPP
#define FEMTOSLEEP_GEOMETRY_HPP

#include <cmath>

namespace femtosleep {

// Planar coordinates in meters; the macrocell center sits at the origin
// unless a layout says otherwise.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline bool is_finite(Point p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

}  // namespace femtosleep

#endif
