#pragma once

#include <optional>
#include <vector>

#include "crooked/scalar.hpp"

namespace crooked {

/// coeffs . x >= rhs, or > rhs when strict.
template <class T>
struct LinearConstraint {
    std::vector<T> coeffs;
    T rhs{};
    bool strict = false;
};

/// Fourier-Motzkin feasibility for small systems. Returns a point satisfying
/// every constraint, chosen away from the boundary where the system allows
/// it, or nullopt if the system is infeasible. Doubles accept violations of
/// up to eps times the row scale.
template <class T>
std::optional<std::vector<T>> feasible_point(const std::vector<LinearConstraint<T>>& constraints,
                                             int dimension, Tolerance tol = kDefaultTolerance);

}  // namespace crooked
