#pragma once

#include "crooked/crooked.hpp"

namespace crooked {

/// Line base + R dir in E.
template <class T>
struct Line {
    Point<T> base;
    Vec3<T> dir;

    /// Throws DomainError for a zero direction.
    static Line make(const Point<T>& base, const Vec3<T>& dir);
    Point<T> at(const T& t) const { return base + dir * t; }
};

/// Exact decision of l being contained in H (closed or open), from the frame
/// coordinates of its direction and of its crossing with the stem plane.
template <class T>
bool line_in_halfspace(const Line<T>& l, const CrookedHalfspace<T>& h, bool closed,
                       Tolerance tol = kDefaultTolerance);

/// Directions of particles contained in h form the halfplane h(s).
template <class T>
Halfplane<T> particle_halfplane(const CrookedHalfspace<T>& h) {
    return linearize(h);
}

/// A particle through q contained in closed h. Requires q in open h.
template <class T>
Line<T> particle_through(const CrookedHalfspace<T>& h, const Point<T>& q,
                         Tolerance tol = kDefaultTolerance);

}  // namespace crooked
