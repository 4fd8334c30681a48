#pragma once

#include <array>
#include <string>

#include "crooked/crooked.hpp"

namespace crooked {

/// rho^eps e^s diag(e^u, e^t, e^-t) in frame coordinates about the vertex.
/// u = 0 gives the conformal automorphisms, s = u = 0 the isometries.
struct AutomorphismParams {
    double s = 0, t = 0, u = 0;
    int eps = 0;
};

Mat3<double> automorphism_matrix(const AutomorphismParams& g);
AffineMap<double> automorphism_map(const CrookedHalfspace<double>& h, const AutomorphismParams& g);

/// bc / a^2, or -infinity on the stem quadrant (a = 0).
struct OrbitCoordinate {
    double phi = 0;
    bool neg_inf = false;

    /// "-inf" for the sentinel, shortest round-trip decimal otherwise.
    std::string str() const;
};

OrbitCoordinate phi(const CrookedHalfspace<double>& h, const Point<double>& q,
                    Tolerance tol = kDefaultTolerance);

/// Group element and slice point with g(x) = q.
struct Canonical {
    AutomorphismParams g;
    std::array<double, 3> x{};  // frame coordinates of the slice point
    Point<double> point;
    double slice_param = 0;  // only set by global_canonicalize
};

/// Local slices: q0 = (0,1,-1) for the stem quadrant and (1,1,beta) for
/// a != 0, with eps = 1 exactly when a < 0.
Canonical canonicalize(const CrookedHalfspace<double>& h, const Point<double>& q,
                       Tolerance tol = kDefaultTolerance);

/// Continuous global slice through q0:
///   (-1, a+1, -1)   a <= -1
///   (a, a+1, -1)    -1 <= a <= 0
///   (a, 1, a-1)     0 <= a <= 1
///   (1, 1, a-1)     a >= 1
/// with rho(sigma(a)) = sigma(-a).
std::array<double, 3> global_slice(double a);

/// Inverse of a -> (a-1)/a^2 on (0, 1), i.e. for gamma < 0.
double slice_parameter_for_phi(double gamma);

/// Point of the global slice in the orbit of q under the identity component
/// of the conformal automorphisms (eps is always 0).
Canonical global_canonicalize(const CrookedHalfspace<double>& h, const Point<double>& q,
                              Tolerance tol = kDefaultTolerance);

/// Ray vertex + R_{>=0} dir fixed pointwise by rho; dir = s- - s+.
struct Ray {
    Point<double> origin;
    Vec3<double> dir;
};

Ray fixed_ray(const CrookedHalfspace<double>& h);

}  // namespace crooked
