#pragma once

#include <cstdint>
#include <string_view>

#include "crooked/scalar.hpp"
#include "crooked/vec3.hpp"

namespace crooked {

// ---------------------------------------------------------------------------
// Lorentzian forms
// ---------------------------------------------------------------------------

/// Lorentzian inner product. Std chart: xx' + yy' - zz'. Frame chart uses the
/// null-frame Gram matrix [[1,0,0],[0,0,-1],[0,-1,0]]: aa' - bc' - cb'.
template <class T>
T inner(const Vec3<T>& u, const Vec3<T>& v) {
    require_same_chart(u.chart, v.chart);
    if (u.chart.is_std()) return u.x * v.x + u.y * v.y - u.z * v.z;
    return u.x * v.x - u.y * v.z - u.z * v.y;
}

template <class T>
T quadratic(const Vec3<T>& v) {
    return inner(v, v);
}

/// Orientation form: 1 on any positively oriented orthonormal (or normalized
/// null) basis. Both supported charts are unimodular, so this is the
/// coordinate determinant.
template <class T>
T det3(const Vec3<T>& u, const Vec3<T>& v, const Vec3<T>& w) {
    require_same_chart(u.chart, v.chart);
    require_same_chart(u.chart, w.chart);
    return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
           u.z * (v.x * w.y - v.y * w.x);
}

/// Lorentzian cross product, characterized by inner(cross(u,v), w) = det3(u,v,w).
template <class T>
Vec3<T> cross(const Vec3<T>& u, const Vec3<T>& v) {
    require_same_chart(u.chart, v.chart);
    const T ex = u.y * v.z - u.z * v.y;
    const T ey = u.z * v.x - u.x * v.z;
    const T ez = u.x * v.y - u.y * v.x;
    // Raise the index with the inverse Gram matrix of the chart.
    if (u.chart.is_std()) return {ex, ey, -ez, u.chart};
    return {ex, -ez, -ey, u.chart};
}

enum class CausalClass { Zero, TimelikeFuture, TimelikePast, NullFuture, NullPast, Spacelike };

std::string_view to_string(CausalClass c);

/// Causal type of `v`, scale invariant: the test runs on v / max|v_i|.
template <class T>
CausalClass classify(const Vec3<T>& v, Tolerance tol = kDefaultTolerance) {
    const T scale = v.max_abs_coord();
    if (scale == T(0)) return CausalClass::Zero;
    const int q = sign_rel(quadratic(v), T(scale * scale), tol);
    if (q > 0) return CausalClass::Spacelike;
    // The future cone is z > 0 in Std; in a null frame it is b + c > 0.
    const T time = v.chart.is_std() ? v.z : T(v.y + v.z);
    const bool future = time > T(0);
    if (q < 0) return future ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
    return future ? CausalClass::NullFuture : CausalClass::NullPast;
}

inline bool is_timelike(CausalClass c) {
    return c == CausalClass::TimelikeFuture || c == CausalClass::TimelikePast;
}
inline bool is_null(CausalClass c) {
    return c == CausalClass::NullFuture || c == CausalClass::NullPast;
}

/// Unit spacelike multiple of `v`. Exact for rationals when v.v is a square.
template <class T>
Vec3<T> unit_spacelike(const Vec3<T>& v, Tolerance tol = kDefaultTolerance) {
    if (classify(v, tol) != CausalClass::Spacelike)
        throw DomainError("expected a spacelike vector");
    return v / exact_sqrt(quadratic(v));
}

// ---------------------------------------------------------------------------
// Null frames
// ---------------------------------------------------------------------------

/// Positively oriented basis (s, s-, s+) with s unit spacelike, s-/s+ future
/// null spanning s-perp, s-.s+ = -1, s x s- = -s-, s x s+ = s+. All three
/// vectors are stored in the Std chart.
template <class T>
class NullFrame {
public:
    /// Validates the frame invariants; throws DomainError on violation.
    static NullFrame from_vectors(Vec3<T> s, Vec3<T> s_minus, Vec3<T> s_plus,
                                  Tolerance tol = kDefaultTolerance);

    const Vec3<T>& s() const { return s_; }
    const Vec3<T>& s_minus() const { return s_minus_; }
    const Vec3<T>& s_plus() const { return s_plus_; }
    std::uint64_t id() const { return id_; }
    Chart chart() const { return Chart::frame(id_); }

    /// Matrix with columns s, s-, s+ (frame coordinates -> Std).
    Mat3<T> basis() const { return Mat3<T>::from_columns(s_, s_minus_, s_plus_); }
    /// Std -> frame coordinates.
    Mat3<T> inverse_basis() const;

private:
    NullFrame(Vec3<T> s, Vec3<T> sm, Vec3<T> sp);

    Vec3<T> s_, s_minus_, s_plus_;
    std::uint64_t id_ = 0;
};

/// Deterministic normalized null frame of a spacelike vector. For doubles the
/// two null vectors have equal time components; for rationals s- has time
/// component 1 and s+ absorbs the normalization so that everything stays exact.
template <class T>
NullFrame<T> null_frame(const Vec3<T>& s, Tolerance tol = kDefaultTolerance);

/// Frame coordinates (a, b, c) with v = a s + b s- + c s+.
template <class T>
Vec3<T> to_frame(const Vec3<T>& v, const NullFrame<T>& f) {
    if (!v.chart.is_std()) throw ChartMismatch("to_frame expects a Std-chart vector");
    return {inner(v, f.s()), -inner(v, f.s_plus()), -inner(v, f.s_minus()), f.chart()};
}

template <class T>
Vec3<T> from_frame(const Vec3<T>& v, const NullFrame<T>& f) {
    require_same_chart(v.chart, f.chart());
    return f.s() * v.x + f.s_minus() * v.y + f.s_plus() * v.z;
}

/// Gram matrix of a chart.
template <class T>
Mat3<T> gram(Chart c) {
    Mat3<T> g = Mat3<T>::diagonal(T(1), T(1), T(-1));
    if (!c.is_std()) {
        g = Mat3<T>::diagonal(T(1), T(0), T(0));
        g(1, 2) = T(-1);
        g(2, 1) = T(-1);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Affine maps
// ---------------------------------------------------------------------------

template <class T>
struct AffineMap {
    Mat3<T> linear = Mat3<T>::identity();
    Vec3<T> translation{T(0), T(0), T(0)};
    Chart chart{};

    static AffineMap identity(Chart c = Chart::std_chart()) {
        AffineMap g;
        g.chart = c;
        g.translation.chart = c;
        return g;
    }
    static AffineMap translate(const Vec3<T>& w) {
        AffineMap g = identity(w.chart);
        g.translation = w;
        return g;
    }

    /// Image of a position vector.
    Vec3<T> apply(const Vec3<T>& p) const {
        require_same_chart(chart, p.chart);
        return linear.apply(p) + translation;
    }
    Point<T> apply(const Point<T>& p) const {
        if (!chart.is_std()) throw ChartMismatch("point maps must be Std-chart maps");
        return Point<T>::from_vector(apply(p.as_vector()));
    }
    Vec3<T> apply_linear(const Vec3<T>& v) const {
        require_same_chart(chart, v.chart);
        return linear.apply(v);
    }

    /// (*this) o other.
    AffineMap compose(const AffineMap& other) const {
        require_same_chart(chart, other.chart);
        AffineMap r;
        r.chart = chart;
        r.linear = linear * other.linear;
        r.translation = linear.apply(other.translation) + translation;
        return r;
    }

    bool orientation_preserving() const { return linear.determinant() > T(0); }

    /// Maps future timelike vectors to future timelike vectors.
    bool time_preserving() const {
        const Vec3<T> future = chart.is_std() ? Vec3<T>(T(0), T(0), T(1), chart)
                                              : Vec3<T>(T(0), T(1), T(1), chart);
        const Vec3<T> img = linear.apply(future);
        return (chart.is_std() ? img.z : T(img.y + img.z)) > T(0);
    }

    /// Conformal factor lambda with L^T G L = lambda G, if the linear part is
    /// conformal within tolerance; returns 0 otherwise.
    T conformal_factor(Tolerance tol = kDefaultTolerance) const;
    bool is_conformal(Tolerance tol = kDefaultTolerance) const {
        return conformal_factor(tol) > T(0);
    }
    bool is_isometry(Tolerance tol = kDefaultTolerance) const;
};

/// Linear map given by its matrix in the frame coordinates of `f`, fixing
/// `center`, returned as a Std-chart affine map.
AffineMap<double> frame_map(const NullFrame<double>& f, const Mat3<double>& in_frame,
                            const Point<double>& center = Point<double>::origin());

/// Boost xi_t = diag(1, e^t, e^-t) in the frame of f.
AffineMap<double> boost(double t, const NullFrame<double>& f,
                        const Point<double>& center = Point<double>::origin());
/// Positive homothety e^s Id.
AffineMap<double> homothety(double s, const Point<double>& center = Point<double>::origin());
/// Involution (a, b, c) -> (-a, -c, -b).
AffineMap<double> rho(const NullFrame<double>& f,
                      const Point<double>& center = Point<double>::origin());
/// Reflection in the spine through p: (a, b, c) -> (a, -b, -c).
AffineMap<double> spine_reflection(const NullFrame<double>& f, const Point<double>& p);
/// Reflection in the stem particle p + R(0, e^t, e^-t): (a, b, c) -> (-a, e^2t c, e^-2t b).
AffineMap<double> stem_particle_reflection(const NullFrame<double>& f, const Point<double>& p,
                                           double t);

}  // namespace crooked
