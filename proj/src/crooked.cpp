#include "crooked/crooked.hpp"

namespace crooked {

std::string_view to_string(Stratum s) {
    switch (s) {
        case Stratum::OpenInterior: return "open_interior";
        case Stratum::WingMinus: return "wing_minus";
        case Stratum::WingPlus: return "wing_plus";
        case Stratum::StemFace: return "stem_face";
        case Stratum::HingeMinus: return "hinge_minus";
        case Stratum::HingePlus: return "hinge_plus";
        case Stratum::Vertex: return "vertex";
        case Stratum::Exterior: return "exterior";
    }
    return "unknown";
}

namespace {

struct Signs {
    int a, b, c;
};

template <class T>
Signs signs_of(const Vec3<T>& v, Tolerance tol, const T& floor = T(0)) {
    const T scale = max_abs(v.max_abs_coord(), floor);
    return {sign_rel(v.x, scale, tol), sign_rel(v.y, scale, tol), sign_rel(v.z, scale, tol)};
}

/// Rounding in q - p is relative to the size of q and p, not of the offset.
template <class T>
T offset_floor(const CrookedHalfspace<T>& h, const Point<T>& q) {
    return max_abs(q.as_vector().max_abs_coord(), h.vertex().as_vector().max_abs_coord());
}

bool open_octants(Signs s) {
    return (s.a > 0 && s.b > 0) || (s.a == 0 && s.b > 0 && s.c < 0) || (s.a < 0 && s.c < 0);
}

bool closed_octants(Signs s) {
    return (s.a <= 0 || s.b >= 0) && (s.a >= 0 || s.c <= 0) && (s.a != 0 || s.b >= 0 || s.c <= 0);
}

}  // namespace

template <class T>
bool contains(const CrookedHalfspace<T>& h, const Point<T>& q, bool closed, Tolerance tol) {
    const Signs s = signs_of(h.coords(q), tol, offset_floor(h, q));
    return closed ? closed_octants(s) : open_octants(s);
}

template <class T>
bool contains_by_inner_products(const CrookedHalfspace<T>& h, const Point<T>& q, bool closed,
                                Tolerance tol) {
    const NullFrame<T>& f = h.frame();
    const Vec3<T> d = q - h.vertex();
    const T us = inner(d, f.s());
    const T um = inner(d, f.s_minus());
    const T up = inner(d, f.s_plus());
    const T scale = max_abs(max_abs(us, um, up), offset_floor(h, q));
    const int ss = sign_rel(us, scale, tol);
    const int sm = sign_rel(um, scale, tol);
    const int sp = sign_rel(up, scale, tol);
    if (closed) return (sp <= 0 && ss >= 0) || (sm >= 0 && ss <= 0);
    return (sp < 0 && ss > 0) || (sp < 0 && sm > 0 && ss == 0) || (sm > 0 && ss < 0);
}

template <class T>
Stratum stratum(const CrookedHalfspace<T>& h, const Point<T>& q, Tolerance tol) {
    const Signs s = signs_of(h.coords(q), tol, offset_floor(h, q));
    if (s.a == 0 && s.b == 0 && s.c == 0) return Stratum::Vertex;
    if (s.a == 0 && s.c == 0) return Stratum::HingeMinus;
    if (s.a == 0 && s.b == 0) return Stratum::HingePlus;
    if (s.a == 0 && s.b * s.c > 0) return Stratum::StemFace;
    if (s.a > 0 && s.b == 0) return Stratum::WingMinus;
    if (s.a < 0 && s.c == 0) return Stratum::WingPlus;
    return open_octants(s) ? Stratum::OpenInterior : Stratum::Exterior;
}

template <class T>
TranslationCone<T> stem_quadrant(const CrookedHalfspace<T>& h) {
    return TranslationCone<T>::from_generators({h.frame().s_minus(), -h.frame().s_plus()});
}

template <class T>
bool quad_contains(const CrookedHalfspace<T>& h, const Point<T>& q, Tolerance tol) {
    return semigroup_contains(h, q - h.vertex(), false, tol);
}

template <class T>
SemigroupCoefficients<T> semigroup_coefficients(const CrookedHalfspace<T>& h, const Vec3<T>& v,
                                                Tolerance tol) {
    const Vec3<T> abc = to_frame(v, h.frame());
    SemigroupCoefficients<T> r;
    r.alpha = abc.y;   // -v.s+
    r.beta = -abc.z;   //  v.s-
    r.in_stem_plane = sign_rel(abc.x, abc.max_abs_coord(), tol) == 0;
    return r;
}

template <class T>
bool semigroup_contains(const CrookedHalfspace<T>& h, const Vec3<T>& v, bool relative_interior,
                        Tolerance tol) {
    const Vec3<T> abc = to_frame(v, h.frame());
    const Signs s = signs_of(abc, tol);
    if (s.a != 0) return false;
    if (relative_interior) return s.b > 0 && s.c < 0;
    return s.b >= 0 && s.c <= 0;
}

template <class T>
CrookedHalfspace<T> complement(const CrookedHalfspace<T>& h, Tolerance tol) {
    return CrookedHalfspace<T>::make(h.vertex(), -h.director(), tol);
}

template <class T>
CrookedHalfspace<T> transform(const CrookedHalfspace<T>& h, const AffineMap<T>& g, Tolerance tol) {
    if (!g.chart.is_std()) throw ChartMismatch("transform expects a Std-chart affine map");
    if (!g.orientation_preserving())
        throw DomainError("transform: map does not preserve orientation");
    if (!g.is_conformal(tol)) throw DomainError("transform: map is not conformal");
    Vec3<T> d = g.apply_linear(h.director());
    if (!g.time_preserving()) d = -d;
    return CrookedHalfspace<T>::make(g.apply(h.vertex()), d, tol);
}

#define CROOKED_INSTANTIATE(T)                                                                   \
    template bool contains(const CrookedHalfspace<T>&, const Point<T>&, bool, Tolerance);        \
    template bool contains_by_inner_products(const CrookedHalfspace<T>&, const Point<T>&, bool,  \
                                             Tolerance);                                         \
    template Stratum stratum(const CrookedHalfspace<T>&, const Point<T>&, Tolerance);            \
    template TranslationCone<T> stem_quadrant(const CrookedHalfspace<T>&);                       \
    template bool quad_contains(const CrookedHalfspace<T>&, const Point<T>&, Tolerance);         \
    template SemigroupCoefficients<T> semigroup_coefficients(const CrookedHalfspace<T>&,         \
                                                             const Vec3<T>&, Tolerance);         \
    template bool semigroup_contains(const CrookedHalfspace<T>&, const Vec3<T>&, bool,           \
                                     Tolerance);                                                 \
    template CrookedHalfspace<T> complement(const CrookedHalfspace<T>&, Tolerance);              \
    template CrookedHalfspace<T> transform(const CrookedHalfspace<T>&, const AffineMap<T>&,      \
                                           Tolerance);

CROOKED_INSTANTIATE(double)
CROOKED_INSTANTIATE(Rational)
#undef CROOKED_INSTANTIATE

}  // namespace crooked
