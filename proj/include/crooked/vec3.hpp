#pragma once

#include <array>
#include <cstdint>
#include <ostream>

#include "crooked/error.hpp"
#include "crooked/scalar.hpp"

namespace crooked {

/// Coordinate chart a vector is expressed in. `Std` reads (x, y, z) with
/// quadratic form x^2 + y^2 - z^2; `Frame` reads (a, b, c) against the null
/// frame identified by `frame_id`.
struct Chart {
    enum class Kind : std::uint8_t { Std, Frame };

    Kind kind = Kind::Std;
    std::uint64_t frame_id = 0;

    static constexpr Chart std_chart() { return {}; }
    static constexpr Chart frame(std::uint64_t id) { return {Kind::Frame, id}; }

    constexpr bool is_std() const { return kind == Kind::Std; }
    friend constexpr bool operator==(const Chart&, const Chart&) = default;
};

inline void require_same_chart(const Chart& a, const Chart& b) {
    if (!(a == b)) throw ChartMismatch("operands are expressed in different charts");
}

/// Vector of the translation space V.
template <class T>
struct Vec3 {
    T x{}, y{}, z{};
    Chart chart{};

    Vec3() = default;
    Vec3(T x_, T y_, T z_, Chart c = Chart::std_chart())
        : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), chart(c) {}

    const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator-() const { return {-x, -y, -z, chart}; }

    Vec3& operator+=(const Vec3& o) {
        require_same_chart(chart, o.chart);
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        require_same_chart(chart, o.chart);
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Vec3& operator*=(const T& k) {
        x *= k;
        y *= k;
        z *= k;
        return *this;
    }
    Vec3& operator/=(const T& k) {
        x /= k;
        y /= k;
        z /= k;
        return *this;
    }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator*(Vec3 a, const T& k) { return a *= k; }
    friend Vec3 operator*(const T& k, Vec3 a) { return a *= k; }
    friend Vec3 operator/(Vec3 a, const T& k) { return a /= k; }

    friend bool operator==(const Vec3& a, const Vec3& b) {
        return a.chart == b.chart && a.x == b.x && a.y == b.y && a.z == b.z;
    }

    /// Largest absolute coordinate; the scale used by relative sign tests.
    T max_abs_coord() const { return max_abs(x, y, z); }
    bool is_zero() const { return x == T(0) && y == T(0) && z == T(0); }

    /// Same coordinates in another chart. Does not transform anything.
    Vec3 retagged(Chart c) const { return {x, y, z, c}; }
};

/// Point of Minkowski space E, always in standard coordinates. Points and
/// vectors differ by role: point - point is a vector, point + vector a point.
template <class T>
struct Point {
    T x{}, y{}, z{};

    Point() = default;
    Point(T x_, T y_, T z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    static Point origin() { return {T(0), T(0), T(0)}; }
    static Point from_vector(const Vec3<T>& v) {
        if (!v.chart.is_std()) throw ChartMismatch("points are expressed in the standard chart");
        return {v.x, v.y, v.z};
    }

    Vec3<T> as_vector() const { return {x, y, z}; }

    friend Vec3<T> operator-(const Point& a, const Point& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Point operator+(const Point& p, const Vec3<T>& v) {
        if (!v.chart.is_std()) throw ChartMismatch("translations of points use the standard chart");
        return {p.x + v.x, p.y + v.y, p.z + v.z};
    }
    friend Point operator-(const Point& p, const Vec3<T>& v) { return p + (-v); }
    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Vec3<T>& v) {
    return os << '(' << v.x << ", " << v.y << ", " << v.z << (v.chart.is_std() ? ")" : ")_frame");
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Point<T>& p) {
    return os << '[' << p.x << ", " << p.y << ", " << p.z << ']';
}

/// Row-major 3x3 matrix.
template <class T>
struct Mat3 {
    std::array<std::array<T, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = T(i == j ? 1 : 0);
        return r;
    }
    static Mat3 diagonal(const T& a, const T& b, const T& c) {
        Mat3 r;
        for (auto& row : r.m)
            for (auto& e : row) e = T(0);
        r.m[0][0] = a;
        r.m[1][1] = b;
        r.m[2][2] = c;
        return r;
    }
    /// Matrix whose columns are the given vectors (charts ignored).
    static Mat3 from_columns(const Vec3<T>& c0, const Vec3<T>& c1, const Vec3<T>& c2) {
        Mat3 r;
        for (int i = 0; i < 3; ++i) {
            r.m[i][0] = c0[i];
            r.m[i][1] = c1[i];
            r.m[i][2] = c2[i];
        }
        return r;
    }

    T& operator()(int i, int j) { return m[i][j]; }
    const T& operator()(int i, int j) const { return m[i][j]; }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                T acc(0);
                for (int k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
                r.m[i][j] = acc;
            }
        return r;
    }
    /// Applies to coordinates; the result keeps the input chart.
    Vec3<T> apply(const Vec3<T>& v) const {
        Vec3<T> r;
        r.chart = v.chart;
        for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v.x + m[i][1] * v.y + m[i][2] * v.z;
        return r;
    }
    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }
    T determinant() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    Mat3 scaled(const T& k) const {
        Mat3 r = *this;
        for (auto& row : r.m)
            for (auto& e : row) e *= k;
        return r;
    }
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
};

}  // namespace crooked
