#pragma once

#include <string_view>

#include "crooked/cone.hpp"
#include "crooked/hyperbolic.hpp"
#include "crooked/minkowski.hpp"

namespace crooked {

/// Positively extended crooked halfspace H(p, s). Its open form is
///   { a > 0, b > 0 } u { a = 0, b > 0, c < 0 } u { a < 0, c < 0 }
/// in the frame coordinates (a, b, c) of q - p.
template <class T>
class CrookedHalfspace {
public:
    static CrookedHalfspace make(const Point<T>& vertex, const Vec3<T>& director,
                                 Tolerance tol = kDefaultTolerance) {
        return CrookedHalfspace(vertex, null_frame(director, tol));
    }
    static CrookedHalfspace with_frame(const Point<T>& vertex, const NullFrame<T>& f) {
        return CrookedHalfspace(vertex, f);
    }
    /// H(0, (1,0,0)).
    static CrookedHalfspace canonical() {
        return make(Point<T>::origin(), Vec3<T>(T(1), T(0), T(0)));
    }

    const Point<T>& vertex() const { return vertex_; }
    const Vec3<T>& director() const { return frame_.s(); }
    const NullFrame<T>& frame() const { return frame_; }

    /// Frame coordinates (a, b, c) of q - vertex.
    Vec3<T> coords(const Point<T>& q) const { return to_frame(q - vertex_, frame_); }
    /// Point with frame coordinates (a, b, c) relative to the vertex.
    Point<T> point_at(const T& a, const T& b, const T& c) const {
        return vertex_ + from_frame(Vec3<T>(a, b, c, frame_.chart()), frame_);
    }
    CrookedHalfspace translated(const Vec3<T>& v) const { return CrookedHalfspace(vertex_ + v, frame_); }

private:
    CrookedHalfspace(Point<T> p, NullFrame<T> f) : vertex_(std::move(p)), frame_(std::move(f)) {}

    Point<T> vertex_;
    NullFrame<T> frame_;
};

enum class Stratum {
    OpenInterior,
    WingMinus,
    WingPlus,
    StemFace,
    HingeMinus,
    HingePlus,
    Vertex,
    Exterior
};

std::string_view to_string(Stratum s);

/// Octant form of membership.
template <class T>
bool contains(const CrookedHalfspace<T>& h, const Point<T>& q, bool closed,
              Tolerance tol = kDefaultTolerance);

/// The same set written with the inner products of q - p against s, s- and s+.
template <class T>
bool contains_by_inner_products(const CrookedHalfspace<T>& h, const Point<T>& q, bool closed,
                                Tolerance tol = kDefaultTolerance);

template <class T>
Stratum stratum(const CrookedHalfspace<T>& h, const Point<T>& q, Tolerance tol = kDefaultTolerance);

/// Cone at the vertex spanned by s- and -s+; in frame coordinates
/// { c <= 0 = a <= b }.
template <class T>
TranslationCone<T> stem_quadrant(const CrookedHalfspace<T>& h);

template <class T>
bool quad_contains(const CrookedHalfspace<T>& h, const Point<T>& q, Tolerance tol = kDefaultTolerance);

/// Coordinates of v = alpha s- - beta s+ when v lies in the stem plane.
template <class T>
struct SemigroupCoefficients {
    T alpha{}, beta{};
    bool in_stem_plane = false;
};

template <class T>
SemigroupCoefficients<T> semigroup_coefficients(const CrookedHalfspace<T>& h, const Vec3<T>& v,
                                                Tolerance tol = kDefaultTolerance);

/// v.s = 0, v.s- >= 0, v.s+ <= 0 (strict for the relative interior).
template <class T>
bool semigroup_contains(const CrookedHalfspace<T>& h, const Vec3<T>& v, bool relative_interior,
                        Tolerance tol = kDefaultTolerance);

/// H(p, -s).
template <class T>
CrookedHalfspace<T> complement(const CrookedHalfspace<T>& h, Tolerance tol = kDefaultTolerance);

template <class T>
Halfplane<T> linearize(const CrookedHalfspace<T>& h) {
    return Halfplane<T>{h.director()};
}

/// Image of h under an orientation-preserving conformal affine map. Maps
/// that reverse time orientation (and so swap the null labels) flip the
/// image director to keep the image positively extended.
template <class T>
CrookedHalfspace<T> transform(const CrookedHalfspace<T>& h, const AffineMap<T>& g,
                              Tolerance tol = kDefaultTolerance);

}  // namespace crooked
