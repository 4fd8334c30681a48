#include "crooked/polyhedral.hpp"

#include <cmath>

namespace crooked {

namespace {

template <class T>
T row_scale(const LinearConstraint<T>& c) {
    T s = abs_value(c.rhs);
    for (const T& a : c.coeffs) s = max_abs(s, a);
    return s;
}

/// Scales a row to unit max norm. `mag` is the size of the terms that were
/// summed to form it; coefficients below 1e-12 of it are cancellation noise.
/// A row left with no coefficients keeps rhs relative to `mag`, so its
/// noise is not blown up to unit size.
template <class T>
void normalize(LinearConstraint<T>& c, const T& mag) {
    if constexpr (!is_exact_v<T>) {
        T s = T(0);
        for (T& a : c.coeffs) {
            if (std::abs(a) < 1e-12 * mag) a = T(0);
            s = std::max(s, std::abs(a));
        }
        if (s == T(0)) {
            if (mag > T(0)) c.rhs /= mag;
            return;
        }
        s = std::max(s, std::abs(c.rhs));
        for (T& a : c.coeffs) a /= s;
        c.rhs /= s;
    } else {
        (void)c;
        (void)mag;
    }
}

/// Is 0 >= rhs (0 > rhs when strict) for a row with no variables left.
template <class T>
bool trivially_satisfied(const LinearConstraint<T>& c, Tolerance tol) {
    if constexpr (is_exact_v<T>) {
        (void)tol;
        return c.strict ? c.rhs < T(0) : c.rhs <= T(0);
    } else {
        // Rows are normalized, so an absolute threshold is scale free. Strict
        // rows must hold robustly.
        return c.strict ? c.rhs < -tol.eps : c.rhs <= tol.eps;
    }
}

/// Value for variable k given bounds from constraints in which only
/// variables 0..k are active and 0..k-1 are already fixed.
template <class T>
std::optional<T> choose(const std::vector<LinearConstraint<T>>& rows, const std::vector<T>& x,
                        int k, Tolerance tol) {
    std::optional<T> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : rows) {
        T rest = c.rhs;
        for (int i = 0; i < k; ++i) rest -= c.coeffs[i] * x[i];
        const T& a = c.coeffs[k];
        if (a == T(0)) continue;
        const T bound = rest / a;
        if (a > T(0)) {
            if (!lo || bound > *lo || (bound == *lo && c.strict)) {
                lo = bound;
                lo_strict = c.strict;
            }
        } else {
            if (!hi || bound < *hi || (bound == *hi && c.strict)) {
                hi = bound;
                hi_strict = c.strict;
            }
        }
    }
    if (lo && hi) {
        if (*lo < *hi) return T((*lo + *hi) / T(2));
        if (*lo == *hi && !lo_strict && !hi_strict) return *lo;
        if constexpr (!is_exact_v<T>) {
            if (*lo - *hi <= tol.eps * (T(1) + max_abs(*lo, *hi))) return T((*lo + *hi) / T(2));
        }
        return std::nullopt;
    }
    if (lo) return T(*lo + T(1));
    if (hi) return T(*hi - T(1));
    return T(0);
}

}  // namespace

template <class T>
std::optional<std::vector<T>> feasible_point(const std::vector<LinearConstraint<T>>& constraints,
                                             int dimension, Tolerance tol) {
    // stages[k] holds the constraints over variables 0..k-1.
    std::vector<std::vector<LinearConstraint<T>>> stages(dimension + 1);
    stages[dimension] = constraints;
    for (auto& c : stages[dimension]) normalize(c, row_scale(c));
    for (int k = dimension - 1; k >= 0; --k) {
        const auto& cur = stages[k + 1];
        auto& next = stages[k];
        std::vector<const LinearConstraint<T>*> pos, neg;
        for (const auto& c : cur) {
            if (c.coeffs[k] > T(0))
                pos.push_back(&c);
            else if (c.coeffs[k] < T(0))
                neg.push_back(&c);
            else
                next.push_back(c);
        }
        for (const auto* p : pos)
            for (const auto* n : neg) {
                LinearConstraint<T> r;
                const T wp = -n->coeffs[k];
                const T wn = p->coeffs[k];
                r.coeffs.resize(dimension, T(0));
                for (int i = 0; i < k; ++i) r.coeffs[i] = p->coeffs[i] * wp + n->coeffs[i] * wn;
                r.rhs = p->rhs * wp + n->rhs * wn;
                r.strict = p->strict || n->strict;
                normalize(r, T(abs_value(wp) * row_scale(*p) + abs_value(wn) * row_scale(*n)));
                next.push_back(std::move(r));
            }
    }
    for (const auto& c : stages[0])
        if (!trivially_satisfied(c, tol)) return std::nullopt;

    std::vector<T> x(dimension, T(0));
    for (int k = 0; k < dimension; ++k) {
        auto v = choose(stages[k + 1], x, k, tol);
        if (!v) return std::nullopt;
        x[k] = *v;
    }
    return x;
}

template std::optional<std::vector<double>> feasible_point(
    const std::vector<LinearConstraint<double>>&, int, Tolerance);
template std::optional<std::vector<Rational>> feasible_point(
    const std::vector<LinearConstraint<Rational>>&, int, Tolerance);

}  // namespace crooked
