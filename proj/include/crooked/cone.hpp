#pragma once

#include <vector>

#include "crooked/minkowski.hpp"

namespace crooked {

/// Result of a cone membership test. `degenerate` is set when the interior of
/// a lower-dimensional cone was asked for; `inside` then reports the relative
/// interior.
struct ConeMembership {
    bool inside = false;
    bool degenerate = false;
    explicit operator bool() const { return inside; }
};

/// Finitely generated convex cone in V. Facet normals use the Lorentzian
/// inner product: the closed cone is { v : n.v >= 0 for every normal n }.
template <class T>
class TranslationCone {
public:
    /// Merges positively parallel generators and derives the facets.
    static TranslationCone from_generators(std::vector<Vec3<T>> generators,
                                           Tolerance tol = kDefaultTolerance);

    const std::vector<Vec3<T>>& generators() const { return generators_; }
    const std::vector<Vec3<T>>& facet_normals() const { return facet_normals_; }
    /// Dimension of the linear span (1, 2 or 3).
    int dimension() const { return dimension_; }
    /// Normal of the supporting plane when dimension() == 2.
    const Vec3<T>& plane_normal() const { return plane_normal_; }
    /// False when the facet description is unavailable (non-salient cones);
    /// contains() then defers to the coefficient method.
    bool facets_valid() const { return facets_valid_; }
    bool salient(Tolerance tol = kDefaultTolerance) const;

    /// Facet test.
    ConeMembership contains(const Vec3<T>& v, bool interior, Tolerance tol = kDefaultTolerance) const;
    /// Existence of nonnegative (positive, for the interior) coefficients on
    /// the generators.
    ConeMembership contains_by_coefficients(const Vec3<T>& v, bool interior,
                                            Tolerance tol = kDefaultTolerance) const;
    Vec3<T> generator_sum() const;

private:
    std::vector<Vec3<T>> generators_;
    std::vector<Vec3<T>> facet_normals_;
    Vec3<T> plane_normal_;
    int dimension_ = 0;
    bool facets_valid_ = true;
};

}  // namespace crooked
