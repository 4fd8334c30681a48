#include "crooked/cone.hpp"

#include "crooked/hyperbolic.hpp"
#include "crooked/polyhedral.hpp"

namespace crooked {

namespace {

template <class T>
int sign_of_inner(const Vec3<T>& n, const Vec3<T>& v, Tolerance tol) {
    return sign_rel(inner(n, v), T(n.max_abs_coord() * v.max_abs_coord()), tol);
}

template <class T>
void push_unique(std::vector<Vec3<T>>& list, const Vec3<T>& v, Tolerance tol) {
    for (const auto& w : list)
        if (positively_parallel(w, v, tol)) return;
    list.push_back(v);
}

/// Orients n so that every vector of `others` lies on its nonnegative side.
/// Returns false when the vectors straddle the plane n.v = 0 or all lie on it.
template <class T>
bool orient_supporting(Vec3<T>& n, const std::vector<Vec3<T>>& gens, std::size_t skip_i,
                       std::size_t skip_j, Tolerance tol) {
    bool pos = false, neg = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k == skip_i || k == skip_j) continue;
        const int sg = sign_of_inner(n, gens[k], tol);
        pos = pos || sg > 0;
        neg = neg || sg < 0;
    }
    if (pos && neg) return false;
    if (neg) n = -n;
    return pos || neg;
}

}  // namespace

template <class T>
TranslationCone<T> TranslationCone<T>::from_generators(std::vector<Vec3<T>> gens, Tolerance tol) {
    TranslationCone c;
    for (const auto& g : gens) {
        if (sign_abs(g.max_abs_coord(), tol) == 0) continue;
        push_unique(c.generators_, g, tol);
    }
    if (c.generators_.empty()) throw DomainError("cone needs a nonzero generator");
    const auto& g = c.generators_;
    const std::size_t k = g.size();
    if (k > 1) {
        require_same_chart(g[0].chart, g[1].chart);
    }

    c.dimension_ = 1;
    for (std::size_t i = 0; i < k && c.dimension_ < 3; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const Vec3<T> m = cross(g[i], g[j]);
            if (sign_rel(m.max_abs_coord(), T(g[i].max_abs_coord() * g[j].max_abs_coord()), tol) == 0)
                continue;
            if (c.dimension_ < 2) {
                c.dimension_ = 2;
                c.plane_normal_ = m;
            }
            for (std::size_t l = 0; l < k; ++l)
                if (sign_of_inner(m, g[l], tol) != 0) c.dimension_ = 3;
        }

    if (c.dimension_ == 3) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                Vec3<T> n = cross(g[i], g[j]);
                if (sign_rel(n.max_abs_coord(), T(g[i].max_abs_coord() * g[j].max_abs_coord()),
                             tol) == 0)
                    continue;
                if (orient_supporting(n, g, i, j, tol)) push_unique(c.facet_normals_, n, tol);
            }
    } else if (c.dimension_ == 2) {
        for (std::size_t i = 0; i < k; ++i) {
            Vec3<T> n = cross(c.plane_normal_, g[i]);
            if (orient_supporting(n, g, i, i, tol)) push_unique(c.facet_normals_, n, tol);
        }
    }
    c.facets_valid_ = c.dimension_ == 1 || !c.facet_normals_.empty();
    if (c.dimension_ == 1 && k > 1) c.facets_valid_ = false;  // opposite rays: a line
    return c;
}

template <class T>
Vec3<T> TranslationCone<T>::generator_sum() const {
    Vec3<T> s = generators_.front() * T(0);
    for (const auto& g : generators_) s += g;
    return s;
}

template <class T>
ConeMembership TranslationCone<T>::contains(const Vec3<T>& v, bool interior, Tolerance tol) const {
    if (!facets_valid_) return contains_by_coefficients(v, interior, tol);
    ConeMembership r;
    r.degenerate = interior && dimension_ < 3;
    const bool strict = interior;
    if (dimension_ == 1) {
        if (sign_abs(v.max_abs_coord(), tol) == 0) {
            r.inside = !strict;
            return r;
        }
        r.inside = positively_parallel(v, generators_.front(), tol);
        return r;
    }
    if (dimension_ == 2 && sign_of_inner(plane_normal_, v, tol) != 0) return r;
    for (const auto& n : facet_normals_) {
        const int sg = sign_of_inner(n, v, tol);
        if (sg < 0 || (strict && sg == 0)) return r;
    }
    r.inside = true;
    return r;
}

template <class T>
ConeMembership TranslationCone<T>::contains_by_coefficients(const Vec3<T>& v, bool interior,
                                                            Tolerance tol) const {
    const int k = static_cast<int>(generators_.size());
    std::vector<LinearConstraint<T>> cs;
    for (int i = 0; i < k; ++i) {
        LinearConstraint<T> c;
        c.coeffs.assign(k, T(0));
        c.coeffs[i] = T(1);
        c.rhs = T(0);
        c.strict = interior;
        cs.push_back(std::move(c));
    }
    for (int row = 0; row < 3; ++row) {
        LinearConstraint<T> up, down;
        up.coeffs.resize(k);
        down.coeffs.resize(k);
        for (int i = 0; i < k; ++i) {
            up.coeffs[i] = generators_[i][row];
            down.coeffs[i] = -generators_[i][row];
        }
        up.rhs = v[row];
        down.rhs = -v[row];
        cs.push_back(std::move(up));
        cs.push_back(std::move(down));
    }
    ConeMembership r;
    r.degenerate = interior && dimension_ < 3;
    r.inside = feasible_point(cs, k, tol).has_value();
    return r;
}

template <class T>
bool TranslationCone<T>::salient(Tolerance tol) const {
    // Salient iff sum(l_i g_i) = 0, sum(l_i) = 1, l >= 0 is infeasible.
    const int k = static_cast<int>(generators_.size());
    std::vector<LinearConstraint<T>> cs;
    for (int i = 0; i < k; ++i) {
        LinearConstraint<T> c;
        c.coeffs.assign(k, T(0));
        c.coeffs[i] = T(1);
        cs.push_back(std::move(c));
    }
    for (int row = 0; row <= 3; ++row) {
        LinearConstraint<T> up, down;
        up.coeffs.resize(k);
        down.coeffs.resize(k);
        for (int i = 0; i < k; ++i) {
            up.coeffs[i] = row < 3 ? generators_[i][row] : T(1);
            down.coeffs[i] = -up.coeffs[i];
        }
        up.rhs = row < 3 ? T(0) : T(1);
        down.rhs = -up.rhs;
        cs.push_back(std::move(up));
        cs.push_back(std::move(down));
    }
    return !feasible_point(cs, k, tol).has_value();
}

template class TranslationCone<double>;
template class TranslationCone<Rational>;

}  // namespace crooked
