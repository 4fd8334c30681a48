#pragma once

#include <cmath>
#include <string>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

#include "crooked/error.hpp"

namespace crooked {

/// Exact rational scalar used by the rational evaluation mode.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_exact_v = !std::is_floating_point_v<T>;

/// Sign-predicate tolerance. Ignored by exact scalars.
struct Tolerance {
    double eps = 1e-9;
};

inline constexpr Tolerance kDefaultTolerance{};

template <class T>
T abs_value(const T& x) {
    return x < T(0) ? T(-x) : x;
}

template <class T>
T max_abs(const T& a, const T& b) {
    const T aa = abs_value(a);
    const T bb = abs_value(b);
    return aa < bb ? bb : aa;
}

template <class T>
T max_abs(const T& a, const T& b, const T& c) {
    return max_abs(max_abs(a, b), c);
}

/// Sign of `x` where |x| <= eps * scale counts as zero. Exact types use the
/// true sign.
template <class T>
int sign_rel(const T& x, const T& scale, Tolerance tol = kDefaultTolerance) {
    if constexpr (is_exact_v<T>) {
        (void)scale;
        (void)tol;
        return x > T(0) ? 1 : (x < T(0) ? -1 : 0);
    } else {
        if (std::abs(x) <= tol.eps * scale) return 0;
        return x > 0 ? 1 : -1;
    }
}

/// Sign of `x` against an absolute threshold (used on normalized data).
template <class T>
int sign_abs(const T& x, Tolerance tol = kDefaultTolerance) {
    return sign_rel(x, T(1), tol);
}

/// Square root that stays exact for rationals. Throws if a rational argument
/// is not the square of a rational.
template <class T>
T exact_sqrt(const T& x) {
    if constexpr (is_exact_v<T>) {
        using boost::multiprecision::mpz_int;
        if (x < 0) throw DomainError("square root of a negative rational");
        const mpz_int num = boost::multiprecision::numerator(x);
        const mpz_int den = boost::multiprecision::denominator(x);
        const mpz_int rn = boost::multiprecision::sqrt(num);
        const mpz_int rd = boost::multiprecision::sqrt(den);
        if (rn * rn != num || rd * rd != den)
            throw DomainError("value is not the square of a rational; exact normalization impossible");
        return T(rn, rd);
    } else {
        return std::sqrt(x);
    }
}

template <class T>
double to_double(const T& x) {
    if constexpr (is_exact_v<T>) {
        return x.template convert_to<double>();
    } else {
        return static_cast<double>(x);
    }
}

/// Parses "3", "-0.25", "1e-3" or "2/7" into an exact rational.
Rational parse_rational(const std::string& text);

/// Exact rational value of a double (every finite double is a dyadic rational).
Rational rational_from_double(double x);

std::string to_string(const Rational& x);

}  // namespace crooked
