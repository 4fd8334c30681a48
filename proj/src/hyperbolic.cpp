#include "crooked/hyperbolic.hpp"

#include <cmath>

namespace crooked {

std::string_view to_string(GeodesicRelation r) {
    switch (r) {
        case GeodesicRelation::Ultraparallel: return "ultraparallel";
        case GeodesicRelation::Asymptotic: return "asymptotic";
        case GeodesicRelation::Crossing: return "crossing";
        case GeodesicRelation::Equal: return "equal";
    }
    return "unknown";
}

template <class T>
HPoint<T> HPoint<T>::from_vector(const Vec3<T>& v, Tolerance tol) {
    if (!v.chart.is_std()) throw ChartMismatch("hyperboloid points use the Std chart");
    if (sign_abs(T(quadratic(v) + T(1)), tol) != 0 || !(v.z > T(0)))
        throw DomainError("not a point of the future unit hyperboloid");
    return HPoint{v};
}

template <class T>
Halfplane<T> Halfplane<T>::from_vector(const Vec3<T>& s, Tolerance tol) {
    if (!s.chart.is_std()) throw ChartMismatch("halfplane normals use the Std chart");
    return Halfplane{unit_spacelike(s, tol)};
}

template <class T>
bool hp_contains(const Halfplane<T>& h, const HPoint<T>& p, bool closed, Tolerance tol) {
    const int sg = sign_abs(inner(p.v, h.s), tol);
    return closed ? sg >= 0 : sg > 0;
}

template <class T>
bool positively_parallel(const Vec3<T>& u, const Vec3<T>& v, Tolerance tol) {
    require_same_chart(u.chart, v.chart);
    const T su = u.max_abs_coord();
    const T sv = v.max_abs_coord();
    if (su == T(0) || sv == T(0)) return false;
    // Compare u/|u|_inf with v/|v|_inf coordinatewise.
    for (int i = 0; i < 3; ++i)
        if (sign_abs(T(u[i] / su - v[i] / sv), tol) != 0) return false;
    return true;
}

template <class T>
bool consistently_oriented(const Vec3<T>& s1, const Vec3<T>& s2, Tolerance tol) {
    const NullFrame<T> f1 = null_frame(s1, tol);
    const NullFrame<T> f2 = null_frame(s2, tol);
    const Vec3<T>& u1 = f1.s();
    const Vec3<T>& u2 = f2.s();
    if (sign_abs(inner(u1, u2), tol) >= 0) return false;
    for (const Vec3<T>* n : {&f2.s_minus(), &f2.s_plus()})
        if (sign_abs(inner(u1, *n), tol) > 0) return false;
    for (const Vec3<T>* n : {&f1.s_minus(), &f1.s_plus()})
        if (sign_abs(inner(*n, u2), tol) > 0) return false;
    return true;
}

template <class T>
GeodesicRelation relation(const Vec3<T>& s1, const Vec3<T>& s2, Tolerance tol) {
    const Vec3<T> u1 = unit_spacelike(s1, tol);
    const Vec3<T> u2 = unit_spacelike(s2, tol);
    const Vec3<T> x = cross(u1, u2);
    if (sign_abs(x.max_abs_coord(), tol) == 0) return GeodesicRelation::Equal;
    const int cmp = sign_abs(T(abs_value(inner(u1, u2)) - T(1)), tol);
    if (cmp > 0) return GeodesicRelation::Ultraparallel;
    if (cmp == 0) return GeodesicRelation::Asymptotic;
    return GeodesicRelation::Crossing;
}

template <class T>
bool halfplanes_disjoint(const Halfplane<T>& h1, const Halfplane<T>& h2, bool closed,
                         Tolerance tol) {
    if (!consistently_oriented(h1.s, h2.s, tol)) return false;
    // s2 = -s1 passes the orientation test; the closed halfplanes then share
    // their boundary geodesic.
    if (closed && relation(h1.s, h2.s, tol) == GeodesicRelation::Equal) return false;
    return true;
}

double klein_boundary_x(const Halfplane<double>& h, Tolerance tol) {
    if (sign_abs(h.s.y, tol) != 0)
        throw DomainError("halfplane boundary is not a vertical chord of the Klein disk");
    // Boundary: x s_x - z s_z = 0, so X/Z = s_z / s_x.
    return h.s.z / h.s.x;
}

template struct HPoint<double>;
template struct HPoint<Rational>;
template struct Halfplane<double>;
template struct Halfplane<Rational>;

#define CROOKED_INSTANTIATE(T)                                                              \
    template bool hp_contains(const Halfplane<T>&, const HPoint<T>&, bool, Tolerance);      \
    template bool positively_parallel(const Vec3<T>&, const Vec3<T>&, Tolerance);           \
    template bool consistently_oriented(const Vec3<T>&, const Vec3<T>&, Tolerance);         \
    template GeodesicRelation relation(const Vec3<T>&, const Vec3<T>&, Tolerance);          \
    template bool halfplanes_disjoint(const Halfplane<T>&, const Halfplane<T>&, bool, Tolerance);

CROOKED_INSTANTIATE(double)
CROOKED_INSTANTIATE(Rational)
#undef CROOKED_INSTANTIATE

}  // namespace crooked
