#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crooked/crooked.hpp"
#include "crooked/expr.hpp"

namespace crooked {

/// t -> s_t, unit spacelike, on [t0, t1].
struct DirectorPath {
    std::string family;
    double t0 = 0, t1 = 0;
    std::function<Vec3<double>(double)> s;

    /// s_t = (0, cosh t, sinh t).
    static DirectorPath orthogonal(double t0, double t1);
};

/// t -> (a_t, b_t) = scale (a(t), b(t)), both positive.
struct CoefficientPath {
    Expr a, b;
    double scale = 1.0;

    double a_at(double t) const { return scale * a(t); }
    double b_at(double t) const { return scale * b(t); }
};

struct LeafSample {
    double t = 0;
    Point<double> vertex;
    Vec3<double> director;
    Vec3<double> velocity;  // a_t s_t- - b_t s_t+
};

struct CrookedFoliation {
    DirectorPath directors;
    CoefficientPath coeffs;
    Point<double> p0;
    double anchor = 0;  // parameter at which the vertex equals p0
    int steps = 0;
    std::vector<LeafSample> samples;

    CrookedHalfspace<double> leaf(std::size_t i) const {
        return CrookedHalfspace<double>::make(samples[i].vertex, samples[i].director);
    }
};

/// Velocity a_t s_t- - b_t s_t+ with frames from null_frame(s_t).
Vec3<double> vertex_velocity(const DirectorPath& dp, const CoefficientPath& cp, double t);

/// Classical fourth-order fixed-step integration of the vertex path from
/// p(anchor) = p0 towards both ends of the parameter range; the steps are
/// split between the two sides in proportion to their lengths. The anchor
/// defaults to 0 when it lies in the range and to t0 otherwise. Throws
/// DomainError when a coefficient is not positive at an evaluation point or
/// when the null labels jump between samples.
CrookedFoliation vertex_path(const DirectorPath& dp, const CoefficientPath& cp,
                             const Point<double>& p0, int steps,
                             std::optional<double> anchor = std::nullopt);

struct CertificationReport {
    bool passed = false;
    bool velocities_ok = false;
    bool pairs_ok = false;
    /// +1 when later leaves sit inside earlier ones, -1 for the reverse.
    int order = 0;
    std::size_t pairs_checked = 0;
    std::optional<std::size_t> bad_velocity;
    std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
    std::optional<Point<double>> witness;
    std::string message;
};

/// Checks the velocity against the relative interior of the translational
/// semigroup at every sample, and strict nesting (disjoint closed halfspace
/// and closed complement) for every pair among at most max_leaves evenly
/// spaced samples.
CertificationReport certify_foliation(const CrookedFoliation& f, std::size_t max_leaves = 101,
                                      Tolerance tol = kDefaultTolerance);

/// Adjacent sample indices (i, i+1) such that q lies between their crooked
/// planes, leaves taken as open halfspaces; a point on a leaf's plane is
/// assigned to the interval on its past side. Throws DomainError when q is
/// outside the foliated slab.
std::pair<std::size_t, std::size_t> locate(const CrookedFoliation& f, const Point<double>& q,
                                           Tolerance tol = kDefaultTolerance);

}  // namespace crooked
