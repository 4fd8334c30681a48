#include "crooked/symmetry.hpp"

#include <charconv>
#include <cmath>

namespace crooked {

Mat3<double> automorphism_matrix(const AutomorphismParams& g) {
    const double k = std::exp(g.s);
    Mat3<double> m = Mat3<double>::diagonal(k * std::exp(g.u), k * std::exp(g.t), k * std::exp(-g.t));
    if (g.eps == 1) {
        Mat3<double> r = Mat3<double>::diagonal(-1.0, 0.0, 0.0);
        r(1, 2) = -1.0;
        r(2, 1) = -1.0;
        m = r * m;
    }
    return m;
}

AffineMap<double> automorphism_map(const CrookedHalfspace<double>& h, const AutomorphismParams& g) {
    return frame_map(h.frame(), automorphism_matrix(g), h.vertex());
}

std::string OrbitCoordinate::str() const {
    if (neg_inf) return "-inf";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, phi);
    return std::string(buf, res.ptr);
}

namespace {

Vec3<double> checked_coords(const CrookedHalfspace<double>& h, const Point<double>& q, Tolerance tol,
                            const char* who) {
    if (!contains(h, q, false, tol))
        throw DomainError(std::string(who) + ": point is not in the open halfspace");
    Vec3<double> v = h.coords(q);
    // Snap a to zero on the stem plane so the stem branch is taken.
    if (sign_rel(v.x, v.max_abs_coord(), tol) == 0) v.x = 0.0;
    return v;
}

Vec3<double> rho_coords(const Vec3<double>& v) {
    return {-v.x, -v.z, -v.y, v.chart};
}

Canonical finish(const CrookedHalfspace<double>& h, Canonical c) {
    c.point = h.point_at(c.x[0], c.x[1], c.x[2]);
    return c;
}

Canonical stem_canonical(const Vec3<double>& v) {
    Canonical c;
    const double lb = std::log(v.y);
    const double lc = std::log(-v.z);
    c.g.s = 0.5 * (lb + lc);
    c.g.t = 0.5 * (lb - lc);
    c.x = {0.0, 1.0, -1.0};
    return c;
}

}  // namespace

OrbitCoordinate phi(const CrookedHalfspace<double>& h, const Point<double>& q, Tolerance tol) {
    const Vec3<double> v = checked_coords(h, q, tol, "phi");
    OrbitCoordinate r;
    if (v.x == 0.0) {
        r.neg_inf = true;
        r.phi = -INFINITY;
    } else {
        r.phi = v.y * v.z / (v.x * v.x);
    }
    return r;
}

Canonical canonicalize(const CrookedHalfspace<double>& h, const Point<double>& q, Tolerance tol) {
    Vec3<double> v = checked_coords(h, q, tol, "canonicalize");
    if (v.x == 0.0) return finish(h, stem_canonical(v));
    Canonical c;
    if (v.x < 0) {
        c.g.eps = 1;
        v = rho_coords(v);
    }
    c.g.s = std::log(v.x);
    c.g.t = std::log(v.y / v.x);
    c.x = {1.0, 1.0, v.y * v.z / (v.x * v.x)};
    return finish(h, c);
}

std::array<double, 3> global_slice(double a) {
    if (a <= -1.0) return {-1.0, a + 1.0, -1.0};
    if (a <= 0.0) return {a, a + 1.0, -1.0};
    if (a <= 1.0) return {a, 1.0, a - 1.0};
    return {1.0, 1.0, a - 1.0};
}

double slice_parameter_for_phi(double gamma) {
    if (!(gamma < 0)) throw DomainError("slice parameter inverse needs a negative orbit coordinate");
    return (1.0 - std::sqrt(1.0 - 4.0 * gamma)) / (2.0 * gamma);
}

Canonical global_canonicalize(const CrookedHalfspace<double>& h, const Point<double>& q,
                              Tolerance tol) {
    Vec3<double> v = checked_coords(h, q, tol, "global_canonicalize");
    Canonical c;
    if (v.x == 0.0) {
        c = stem_canonical(v);
        c.slice_param = 0.0;
        return finish(h, c);
    }
    const bool flipped = v.x < 0;
    if (flipped) v = rho_coords(v);
    const double gamma = v.y * v.z / (v.x * v.x);
    double a_param;
    if (gamma >= 0) {
        a_param = 1.0 + gamma;
        c.g.s = std::log(v.x);
    } else {
        a_param = slice_parameter_for_phi(gamma);
        c.g.s = std::log(v.x / a_param);
    }
    c.g.t = std::log(v.y) - c.g.s;
    if (flipped) {
        // rho xi_t rho = xi_-t and rho sigma(a) = sigma(-a).
        c.g.t = -c.g.t;
        a_param = -a_param;
    }
    c.slice_param = a_param;
    c.x = global_slice(a_param);
    return finish(h, c);
}

Ray fixed_ray(const CrookedHalfspace<double>& h) {
    return {h.vertex(), h.frame().s_minus() - h.frame().s_plus()};
}

}  // namespace crooked
