#include "crooked/minkowski.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace crooked {

std::string_view to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Zero: return "zero";
        case CausalClass::TimelikeFuture: return "timelike_future";
        case CausalClass::TimelikePast: return "timelike_past";
        case CausalClass::NullFuture: return "null_future";
        case CausalClass::NullPast: return "null_past";
        case CausalClass::Spacelike: return "spacelike";
    }
    return "unknown";
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_mix(std::uint64_t& h, const void* data, std::size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= bytes[i];
        h *= kFnvPrime;
    }
}

void hash_scalar(std::uint64_t& h, double v) {
    if (v == 0.0) v = 0.0;  // fold -0
    fnv_mix(h, &v, sizeof v);
}

void hash_scalar(std::uint64_t& h, const Rational& v) {
    const std::string s = v.str();
    fnv_mix(h, s.data(), s.size());
    fnv_mix(h, "|", 1);
}

template <class T>
std::uint64_t frame_hash(const Vec3<T>& s, const Vec3<T>& sm, const Vec3<T>& sp) {
    std::uint64_t h = kFnvOffset;
    for (const auto* v : {&s, &sm, &sp})
        for (int i = 0; i < 3; ++i) hash_scalar(h, (*v)[i]);
    // 0 never names a real frame.
    return h == 0 ? 1 : h;
}

template <class T>
bool near(const T& value, const T& target, Tolerance tol) {
    return sign_abs(T(value - target), tol) == 0;
}

}  // namespace

template <class T>
NullFrame<T>::NullFrame(Vec3<T> s, Vec3<T> sm, Vec3<T> sp)
    : s_(std::move(s)), s_minus_(std::move(sm)), s_plus_(std::move(sp)),
      id_(frame_hash(s_, s_minus_, s_plus_)) {}

template <class T>
NullFrame<T> NullFrame<T>::from_vectors(Vec3<T> s, Vec3<T> sm, Vec3<T> sp, Tolerance tol) {
    if (!s.chart.is_std() || !sm.chart.is_std() || !sp.chart.is_std())
        throw ChartMismatch("null frame vectors must be in the Std chart");
    if (!near(inner(s, s), T(1), tol)) throw DomainError("frame: s is not unit spacelike");
    if (!near(inner(s, sm), T(0), tol) || !near(inner(s, sp), T(0), tol))
        throw DomainError("frame: null vectors are not orthogonal to s");
    if (!near(inner(sm, sm), T(0), tol) || !near(inner(sp, sp), T(0), tol))
        throw DomainError("frame: s-/s+ are not null");
    if (!near(inner(sm, sp), T(-1), tol)) throw DomainError("frame: s-.s+ != -1");
    if (!(sm.z > T(0)) || !(sp.z > T(0))) throw DomainError("frame: null vectors are not future");
    if (!(det3(s, sm, sp) > T(0))) throw DomainError("frame: basis is negatively oriented");
    return NullFrame(std::move(s), std::move(sm), std::move(sp));
}

template <class T>
Mat3<T> NullFrame<T>::inverse_basis() const {
    Mat3<T> r;
    const Vec3<T>* rows[3] = {&s_, &s_plus_, &s_minus_};
    const T sign[3] = {T(1), T(-1), T(-1)};
    for (int i = 0; i < 3; ++i) {
        r(i, 0) = sign[i] * rows[i]->x;
        r(i, 1) = sign[i] * rows[i]->y;
        r(i, 2) = -sign[i] * rows[i]->z;
    }
    return r;
}

template <class T>
NullFrame<T> null_frame(const Vec3<T>& s_in, Tolerance tol) {
    if (!s_in.chart.is_std()) throw ChartMismatch("null_frame expects a Std-chart vector");
    const Vec3<T> s = unit_spacelike(s_in, tol);
    const T& x = s.x;
    const T& y = s.y;
    const T& z = s.z;
    const T r2 = x * x + y * y;  // = 1 + z^2 >= 1 for unit spacelike s
    // Future null directions in s-perp with time component 1.
    Vec3<T> n1((z * x - y) / r2, (z * y + x) / r2, T(1));
    Vec3<T> n2((z * x + y) / r2, (z * y - x) / r2, T(1));
    // -n1.n2 = 2 / r2 for unit s.
    if constexpr (is_exact_v<T>) {
        n2 *= r2 / T(2);
    } else {
        const T k = std::sqrt(r2 / 2);
        n1 *= k;
        n2 *= k;
    }
    if (det3(s, n1, n2) < T(0)) std::swap(n1, n2);
    return NullFrame<T>::from_vectors(s, n1, n2, tol);
}

template <class T>
T AffineMap<T>::conformal_factor(Tolerance tol) const {
    const Mat3<T> g = gram<T>(chart);
    const Mat3<T> p = linear.transposed() * g * linear;
    const T lambda = p(0, 0);
    T scale(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) scale = max_abs(scale, p(i, j));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (sign_rel(T(p(i, j) - lambda * g(i, j)), scale, tol) != 0) return T(0);
    return sign_rel(lambda, scale, tol) > 0 ? lambda : T(0);
}

template <class T>
bool AffineMap<T>::is_isometry(Tolerance tol) const {
    const T lambda = conformal_factor(tol);
    return lambda > T(0) && sign_abs(T(lambda - T(1)), tol) == 0;
}

template class NullFrame<double>;
template class NullFrame<Rational>;
template NullFrame<double> null_frame(const Vec3<double>&, Tolerance);
template NullFrame<Rational> null_frame(const Vec3<Rational>&, Tolerance);
template struct AffineMap<double>;
template struct AffineMap<Rational>;

AffineMap<double> frame_map(const NullFrame<double>& f, const Mat3<double>& in_frame,
                            const Point<double>& center) {
    AffineMap<double> g;
    g.linear = f.basis() * in_frame * f.inverse_basis();
    const Vec3<double> c = center.as_vector();
    g.translation = c - g.linear.apply(c);
    return g;
}

AffineMap<double> boost(double t, const NullFrame<double>& f, const Point<double>& center) {
    return frame_map(f, Mat3<double>::diagonal(1.0, std::exp(t), std::exp(-t)), center);
}

AffineMap<double> homothety(double s, const Point<double>& center) {
    AffineMap<double> g;
    const double k = std::exp(s);
    g.linear = Mat3<double>::diagonal(k, k, k);
    const Vec3<double> c = center.as_vector();
    g.translation = c - g.linear.apply(c);
    return g;
}

AffineMap<double> rho(const NullFrame<double>& f, const Point<double>& center) {
    Mat3<double> m = Mat3<double>::diagonal(-1.0, 0.0, 0.0);
    m(1, 2) = -1.0;
    m(2, 1) = -1.0;
    return frame_map(f, m, center);
}

AffineMap<double> spine_reflection(const NullFrame<double>& f, const Point<double>& p) {
    return frame_map(f, Mat3<double>::diagonal(1.0, -1.0, -1.0), p);
}

AffineMap<double> stem_particle_reflection(const NullFrame<double>& f, const Point<double>& p,
                                           double t) {
    Mat3<double> m = Mat3<double>::diagonal(-1.0, 0.0, 0.0);
    m(1, 2) = std::exp(2 * t);
    m(2, 1) = std::exp(-2 * t);
    return frame_map(f, m, p);
}

}  // namespace crooked
