#pragma once

#include <string_view>

#include "crooked/minkowski.hpp"

namespace crooked {

/// Point of the future sheet of the hyperboloid v.v = -1.
template <class T>
struct HPoint {
    Vec3<T> v;

    /// Validates v.v = -1 and z > 0; throws DomainError otherwise.
    static HPoint from_vector(const Vec3<T>& v, Tolerance tol = kDefaultTolerance);
};

/// Halfplane h(s) = { v in H^2 : v.s >= 0 } encoded by its unit spacelike normal.
template <class T>
struct Halfplane {
    Vec3<T> s;

    /// Normalizes a spacelike vector (exactly for rationals when possible).
    static Halfplane from_vector(const Vec3<T>& s, Tolerance tol = kDefaultTolerance);
    Halfplane complement() const { return Halfplane{-s}; }
};

enum class GeodesicRelation { Ultraparallel, Asymptotic, Crossing, Equal };

std::string_view to_string(GeodesicRelation r);

template <class T>
bool hp_contains(const Halfplane<T>& h, const HPoint<T>& p, bool closed,
                 Tolerance tol = kDefaultTolerance);

/// s1.s2 < 0 and every cross pairing of a director with the other's null
/// vectors is nonpositive.
template <class T>
bool consistently_oriented(const Vec3<T>& s1, const Vec3<T>& s2, Tolerance tol = kDefaultTolerance);

/// Disjointness of h(s1) and h(s2) in H^2, closed or open.
template <class T>
bool halfplanes_disjoint(const Halfplane<T>& h1, const Halfplane<T>& h2, bool closed,
                         Tolerance tol = kDefaultTolerance);

template <class T>
GeodesicRelation relation(const Vec3<T>& s1, const Vec3<T>& s2, Tolerance tol = kDefaultTolerance);

/// Boundary abscissa of h in the Klein disk (x, y) = (X/Z, Y/Z) when the
/// boundary is a vertical chord, i.e. s has no y component.
double klein_boundary_x(const Halfplane<double>& h, Tolerance tol = kDefaultTolerance);

/// True when u and v are positive multiples of each other within tolerance.
template <class T>
bool positively_parallel(const Vec3<T>& u, const Vec3<T>& v, Tolerance tol = kDefaultTolerance);

}  // namespace crooked
