#include "crooked/lines.hpp"

namespace crooked {

template <class T>
Line<T> Line<T>::make(const Point<T>& base, const Vec3<T>& dir) {
    if (!dir.chart.is_std()) throw ChartMismatch("line directions use the Std chart");
    if (dir.is_zero()) throw DomainError("line direction is zero");
    return Line{base, dir};
}

template <class T>
bool line_in_halfspace(const Line<T>& l, const CrookedHalfspace<T>& h, bool closed, Tolerance tol) {
    if (l.dir.is_zero()) throw DomainError("line direction is zero");
    const Vec3<T> d = to_frame(l.dir, h.frame());
    const Vec3<T> p = h.coords(l.base);
    const T dscale = d.max_abs_coord();
    const int sa = sign_rel(d.x, dscale, tol);

    if (sa != 0) {
        const T beta = d.y / d.x;
        const T gamma = d.z / d.x;
        const T big_b = p.y - p.x * beta;
        const T big_c = p.z - p.x * gamma;
        const T dir_scale = max_abs(T(1), beta, gamma);
        if (sign_rel(beta, dir_scale, tol) < 0 || sign_rel(gamma, dir_scale, tol) < 0) return false;
        const T pscale = max_abs(big_b, big_c);
        const int sb = sign_rel(big_b, pscale, tol);
        const int sc = sign_rel(big_c, pscale, tol);
        if (closed) return sb >= 0 && sc <= 0;
        return sb > 0 && sc < 0;
    }

    // The line stays in the plane a = a0.
    const T pscale = p.max_abs_coord();
    const int s0 = sign_rel(p.x, pscale, tol);
    const int sbeta = sign_rel(d.y, dscale, tol);
    const int sgamma = sign_rel(d.z, dscale, tol);
    const int sb0 = sign_rel(p.y, pscale, tol);
    const int sc0 = sign_rel(p.z, pscale, tol);
    if (s0 > 0) return sbeta == 0 && (closed ? sb0 >= 0 : sb0 > 0);
    if (s0 < 0) return sgamma == 0 && (closed ? sc0 <= 0 : sc0 < 0);
    // In the stem plane: the line must avoid the quadrant { b < 0, c > 0 }.
    if (!closed) return false;
    if (sbeta * sgamma < 0) return false;
    if (sbeta == 0) return sb0 >= 0;
    if (sgamma == 0) return sc0 <= 0;
    T beta = d.y, gamma = d.z;
    if (sbeta < 0) {
        beta = -beta;
        gamma = -gamma;
    }
    const T w = gamma * p.y - beta * p.z;
    return sign_rel(w, T(dscale * pscale), tol) >= 0;
}

template <class T>
Line<T> particle_through(const CrookedHalfspace<T>& h, const Point<T>& q, Tolerance tol) {
    if (!contains(h, q, false, tol)) throw DomainError("particle_through: point is not in the open halfspace");
    Vec3<T> abc = h.coords(q);
    const int sa = sign_rel(abc.x, abc.max_abs_coord(), tol);
    const Chart fc = h.frame().chart();
    auto build = [&](const Vec3<T>& v) -> Vec3<T> {
        if (sign_rel(v.x, v.max_abs_coord(), tol) == 0) return Vec3<T>(T(1) / T(2), T(1), T(1), fc);
        const T& a = v.x;
        const T& b = v.y;
        const T& c = v.z;
        const T big_b = b / T(2);
        T bound = c - a * a / (b - big_b);
        if (bound > T(0)) bound = T(0);
        const T big_c = bound - T(1);
        return Vec3<T>(a, b - big_b, c - big_c, fc);
    };
    Vec3<T> dir;
    if (sa >= 0) {
        dir = build(abc);
    } else {
        // rho: (a, b, c) -> (-a, -c, -b) preserves h and is an involution.
        const Vec3<T> flipped(-abc.x, -abc.z, -abc.y, fc);
        const Vec3<T> d = build(flipped);
        dir = Vec3<T>(-d.x, -d.z, -d.y, fc);
    }
    Vec3<T> std_dir = from_frame(dir, h.frame());
    if (std_dir.z < T(0)) std_dir = -std_dir;
    return Line<T>::make(q, std_dir);
}

template struct Line<double>;
template struct Line<Rational>;
template bool line_in_halfspace(const Line<double>&, const CrookedHalfspace<double>&, bool, Tolerance);
template bool line_in_halfspace(const Line<Rational>&, const CrookedHalfspace<Rational>&, bool,
                                Tolerance);
template Line<double> particle_through(const CrookedHalfspace<double>&, const Point<double>&,
                                       Tolerance);
template Line<Rational> particle_through(const CrookedHalfspace<Rational>&, const Point<Rational>&,
                                         Tolerance);

}  // namespace crooked
