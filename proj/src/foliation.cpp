#include "crooked/foliation.hpp"

#include <algorithm>
#include <cmath>

#include "crooked/disjointness.hpp"
#include "crooked/oracle.hpp"

namespace crooked {

DirectorPath DirectorPath::orthogonal(double t0, double t1) {
    if (!(t0 < t1)) throw DomainError("director path needs t0 < t1");
    DirectorPath dp;
    dp.family = "orthogonal";
    dp.t0 = t0;
    dp.t1 = t1;
    dp.s = [](double t) { return Vec3<double>(0.0, std::cosh(t), std::sinh(t)); };
    return dp;
}

namespace {

void require_positive(const CoefficientPath& cp, double t) {
    const double a = cp.a_at(t);
    const double b = cp.b_at(t);
    if (!(a > 0) || !(b > 0))
        throw DomainError("coefficient path is not positive at t = " + std::to_string(t));
}

double dist2(const Vec3<double>& u, const Vec3<double>& v) {
    const Vec3<double> d = u - v;
    return d.x * d.x + d.y * d.y + d.z * d.z;
}

/// +1 if leaf j sits inside leaf i for j > i, -1 for the reverse, 0 if the
/// end directors admit neither.
int nesting_order(const CrookedFoliation& f, Tolerance tol) {
    const Vec3<double>& first = f.samples.front().director;
    const Vec3<double>& last = f.samples.back().director;
    if (consistently_oriented(last, Vec3<double>(-first), tol)) return 1;
    if (consistently_oriented(first, Vec3<double>(-last), tol)) return -1;
    return 0;
}

}  // namespace

Vec3<double> vertex_velocity(const DirectorPath& dp, const CoefficientPath& cp, double t) {
    require_positive(cp, t);
    const NullFrame<double> f = null_frame(dp.s(t));
    return f.s_minus() * cp.a_at(t) - f.s_plus() * cp.b_at(t);
}

CrookedFoliation vertex_path(const DirectorPath& dp, const CoefficientPath& cp,
                             const Point<double>& p0, int steps, std::optional<double> anchor) {
    if (steps < 2) throw DomainError("vertex path needs at least 2 steps");
    CrookedFoliation f;
    f.directors = dp;
    f.coeffs = cp;
    f.p0 = p0;
    f.steps = steps;
    f.anchor = anchor ? *anchor : (dp.t0 <= 0.0 && 0.0 <= dp.t1 ? 0.0 : dp.t0);
    if (f.anchor < dp.t0 || f.anchor > dp.t1) throw DomainError("anchor outside the parameter range");

    const double span = dp.t1 - dp.t0;
    int fwd = static_cast<int>(std::lround(steps * (dp.t1 - f.anchor) / span));
    int bwd = steps - fwd;
    if (f.anchor < dp.t1 && fwd == 0) fwd = 1, bwd = steps - 1;
    if (f.anchor > dp.t0 && bwd == 0) bwd = 1, fwd = steps - 1;

    // One side of the anchor at a time; the velocity depends on t only.
    auto integrate = [&](int n, double t_end) {
        std::vector<LeafSample> out;
        if (n == 0) return out;
        const double h = (t_end - f.anchor) / n;
        Point<double> p = p0;
        double t = f.anchor;
        for (int i = 0; i < n; ++i) {
            const Vec3<double> k1 = vertex_velocity(dp, cp, t);
            const Vec3<double> k2 = vertex_velocity(dp, cp, t + h / 2);
            const Vec3<double> k4 = vertex_velocity(dp, cp, t + h);
            // k3 = k2 for a velocity field independent of position.
            p = p + (k1 + k2 * 4.0 + k4) * (h / 6.0);
            t = f.anchor + h * (i + 1);
            out.push_back({t, p, dp.s(t), k4});
        }
        return out;
    };

    std::vector<LeafSample> back = integrate(bwd, dp.t0);
    std::vector<LeafSample> ahead = integrate(fwd, dp.t1);
    f.samples.reserve(back.size() + ahead.size() + 1);
    for (auto it = back.rbegin(); it != back.rend(); ++it) f.samples.push_back(*it);
    f.samples.push_back({f.anchor, p0, dp.s(f.anchor), vertex_velocity(dp, cp, f.anchor)});
    for (auto& s : ahead) f.samples.push_back(s);

    // The null labels must move continuously along the path.
    for (std::size_t i = 1; i < f.samples.size(); ++i) {
        const NullFrame<double> prev = null_frame(f.samples[i - 1].director);
        const NullFrame<double> cur = null_frame(f.samples[i].director);
        const auto u = [](const Vec3<double>& v) { return v / std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); };
        if (dist2(u(cur.s_minus()), u(prev.s_minus())) > dist2(u(cur.s_minus()), u(prev.s_plus())))
            throw DomainError("null frame labels jump between t = " +
                              std::to_string(f.samples[i - 1].t) + " and t = " +
                              std::to_string(f.samples[i].t));
    }
    return f;
}

CertificationReport certify_foliation(const CrookedFoliation& f, std::size_t max_leaves,
                                      Tolerance tol) {
    CertificationReport r;
    const std::size_t n = f.samples.size();
    if (n < 2) {
        r.message = "foliation has fewer than two leaves";
        return r;
    }
    r.velocities_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto h = f.leaf(i);
        if (!semigroup_contains(h, f.samples[i].velocity, true, tol)) {
            r.velocities_ok = false;
            r.bad_velocity = i;
            r.message = "velocity leaves the translational semigroup at t = " +
                        std::to_string(f.samples[i].t);
            break;
        }
    }

    std::vector<std::size_t> idx;
    const std::size_t m = std::max<std::size_t>(2, std::min(max_leaves, n));
    for (std::size_t k = 0; k < m; ++k) idx.push_back(k * (n - 1) / (m - 1));

    r.order = nesting_order(f, tol);
    if (r.order == 0) {
        r.message = "end leaves are not nested in either order";
        r.passed = false;
        return r;
    }
    std::vector<CrookedHalfspace<double>> leaves, outside;
    for (std::size_t i : idx) {
        leaves.push_back(f.leaf(i));
        outside.push_back(complement(leaves.back(), tol));
    }
    r.pairs_ok = true;
    for (std::size_t a = 0; a < idx.size() && r.pairs_ok; ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            // Inner leaf against the complement of the outer one.
            const std::size_t inner_leaf = r.order > 0 ? b : a;
            const std::size_t outer_leaf = r.order > 0 ? a : b;
            ++r.pairs_checked;
            if (halfspaces_disjoint(leaves[inner_leaf], outside[outer_leaf], true, tol)) continue;
            r.pairs_ok = false;
            r.bad_pair = {idx[a], idx[b]};
            r.witness = exact_common_point(leaves[inner_leaf], outside[outer_leaf], true, tol);
            if (r.message.empty())
                r.message = "leaves " + std::to_string(idx[a]) + " and " + std::to_string(idx[b]) +
                            " are not strictly nested";
            break;
        }
    r.passed = r.velocities_ok && r.pairs_ok;
    if (r.passed) r.message = "certified";
    return r;
}

std::pair<std::size_t, std::size_t> locate(const CrookedFoliation& f, const Point<double>& q,
                                           Tolerance tol) {
    const std::size_t n = f.samples.size();
    if (n < 2) throw DomainError("locate: foliation has fewer than two leaves");
    const int order = nesting_order(f, tol);
    if (order == 0) throw DomainError("locate: leaves are not nested");
    // Position k in nesting order (outermost first).
    auto index = [&](std::size_t k) { return order > 0 ? k : n - 1 - k; };
    auto inside = [&](std::size_t k) { return contains(f.leaf(index(k)), q, false, tol); };
    if (!inside(0) || inside(n - 1)) throw DomainError("locate: point is outside the foliated slab");
    std::size_t lo = 0, hi = n - 1;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        (inside(mid) ? lo : hi) = mid;
    }
    const std::size_t i = index(lo), j = index(hi);
    return {std::min(i, j), std::max(i, j)};
}

}  // namespace crooked
