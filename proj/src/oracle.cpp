#include "crooked/oracle.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "crooked/polyhedral.hpp"

namespace crooked {

namespace {

/// sign * (x - p).u >= 0 as a constraint on x.
template <class T>
LinearConstraint<T> form(const Point<T>& p, const Vec3<T>& u, int sign, bool strict) {
    LinearConstraint<T> c;
    const T k(sign);
    c.coeffs = {k * u.x, k * u.y, -(k * u.z)};
    c.rhs = k * inner(p.as_vector(), u);
    c.strict = strict;
    return c;
}

template <class T>
using Piece = std::vector<LinearConstraint<T>>;

template <class T>
std::vector<Piece<T>> pieces(const CrookedHalfspace<T>& h, bool closed) {
    const Point<T>& p = h.vertex();
    const NullFrame<T>& f = h.frame();
    // a = (x-p).s, b = -(x-p).s+, -c = (x-p).s-.
    const auto a_pos = form(p, f.s(), 1, !closed);
    const auto a_neg = form(p, f.s(), -1, !closed);
    const auto b_pos = form(p, f.s_plus(), -1, !closed);
    const auto c_neg = form(p, f.s_minus(), 1, !closed);
    std::vector<Piece<T>> r = {{a_pos, b_pos}, {a_neg, c_neg}};
    if (!closed) r.push_back({b_pos, c_neg});
    return r;
}

double norm2(const Vec3<double>& v) {
    return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

/// Plane row.x = rhs in Euclidean form.
struct Row {
    Vec3<double> n;
    double rhs;
};

double edet(const Vec3<double>& a, const Vec3<double>& b, const Vec3<double>& c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
}

std::optional<Point<double>> meet(const Row& r1, const Row& r2, const Row& r3) {
    const double d = edet(r1.n, r2.n, r3.n);
    const double scale = norm2(r1.n) * norm2(r2.n) * norm2(r3.n);
    if (!(std::abs(d) > 1e-12 * scale)) return std::nullopt;
    const Vec3<double> b(r1.rhs, r2.rhs, r3.rhs);
    const Vec3<double> c0(r1.n.x, r2.n.x, r3.n.x), c1(r1.n.y, r2.n.y, r3.n.y), c2(r1.n.z, r2.n.z, r3.n.z);
    return Point<double>(edet(b, c1, c2) / d, edet(c0, b, c2) / d, edet(c0, c1, b) / d);
}

/// Points where the boundary planes of the two halfspaces meet: triple
/// points, and points along every line where two of them cross.
void seam_meets(const CrookedHalfspace<double>& h1, const CrookedHalfspace<double>& h2, const Point<double>& mid,
                std::vector<Point<double>>& out) {
    std::vector<Row> rows;
    for (const auto* h : {&h1, &h2}) {
        const NullFrame<double>& f = h->frame();
        for (const Vec3<double>& u : {f.s(), f.s_minus(), f.s_plus()}) {
            const Vec3<double> n(u.x, u.y, -u.z);
            rows.push_back({n, n.x * h->vertex().x + n.y * h->vertex().y + n.z * h->vertex().z});
        }
    }
    const std::size_t k = rows.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            for (std::size_t l = j + 1; l < k; ++l)
                if (auto q = meet(rows[i], rows[j], rows[l])) out.push_back(*q);
            const Vec3<double>& a = rows[i].n;
            const Vec3<double>& b = rows[j].n;
            const Vec3<double> d(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x);
            const double len = norm2(d);
            if (!(len > 1e-12 * norm2(a) * norm2(b))) continue;
            const Vec3<double> e = d / len;
            const auto base = meet(rows[i], rows[j], {e, e.x * mid.x + e.y * mid.y + e.z * mid.z});
            if (!base) continue;
            for (double t : {1e-3, 1e-1, 1.0, 10.0, 1e3, 1e6}) {
                out.push_back(*base + e * t);
                out.push_back(*base - e * t);
            }
        }
}

}  // namespace

template <class T>
std::optional<Point<T>> exact_common_point(const CrookedHalfspace<T>& h1,
                                           const CrookedHalfspace<T>& h2, bool closed,
                                           Tolerance tol) {
    for (const auto& p1 : pieces(h1, closed))
        for (const auto& p2 : pieces(h2, closed)) {
            Piece<T> sys = p1;
            sys.insert(sys.end(), p2.begin(), p2.end());
            const auto x = feasible_point(sys, 3, tol);
            if (!x) continue;
            const Point<T> q((*x)[0], (*x)[1], (*x)[2]);
            if (contains(h1, q, closed, tol) && contains(h2, q, closed, tol)) return q;
        }
    return std::nullopt;
}

OracleResult<double> sampling_oracle(const CrookedHalfspace<double>& h1,
                                     const CrookedHalfspace<double>& h2, bool closed,
                                     std::size_t n, std::uint64_t seed, Tolerance tol) {
    OracleResult<double> r;
    const Vec3<double> offset = h1.vertex() - h2.vertex();
    const double radius = 1e3 * (1.0 + norm2(offset));
    const Point<double> mid = h2.vertex() + offset * 0.5;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto draw = [&] {
        for (;;) {
            const Vec3<double> v(unit(rng), unit(rng), unit(rng));
            if (v.x * v.x + v.y * v.y + v.z * v.z <= 1.0) return mid + v * radius;
        }
    };

    const CrookedHalfspace<double>* hs[2] = {&h1, &h2};
    for (int side = 0; side < 2 && n > 0; ++side) {
        const auto& mine = *hs[side];
        const auto& other = *hs[1 - side];
        std::size_t kept = 0;
        for (std::size_t attempt = 0; kept < n && attempt < 20 * n; ++attempt) {
            const Point<double> q = draw();
            if (!contains(mine, q, closed, tol)) continue;
            ++kept;
            ++r.samples;
            if (contains(other, q, closed, tol)) {
                r.intersect = true;
                r.witness = q;
                r.method = "sampling";
                return r;
            }
        }
    }

    // Probes where boundaries meet: vertices, hinges, stems and wing edges.
    std::vector<Point<double>> probes = {h1.vertex(), h2.vertex(), mid};
    for (const auto* h : hs) {
        const NullFrame<double>& f = h->frame();
        for (double k : {1e-6, 1e-3, 1e-1, 1.0, 10.0, 1e3, 1e6}) {
            for (double sg : {1.0, -1.0}) {
                probes.push_back(h->vertex() + f.s_minus() * (sg * k));
                probes.push_back(h->vertex() + f.s_plus() * (sg * k));
                probes.push_back(h->vertex() + f.s() * (sg * k));
                probes.push_back(h->vertex() + (f.s_minus() - f.s_plus()) * (sg * k));
                probes.push_back(h->vertex() + (f.s_minus() + f.s_plus()) * (sg * k));
                probes.push_back(h->vertex() + (f.s() * sg + f.s_plus() * sg) * k);
                probes.push_back(h->vertex() + (f.s() * sg - f.s_minus() * sg) * k);
            }
        }
    }
    seam_meets(h1, h2, mid, probes);
    for (const auto& q : probes) {
        ++r.samples;
        if (contains(h1, q, closed, tol) && contains(h2, q, closed, tol)) {
            r.intersect = true;
            r.witness = q;
            r.method = "seam";
            return r;
        }
    }
    return r;
}

OracleResult<double> intersection_oracle(const CrookedHalfspace<double>& h1,
                                         const CrookedHalfspace<double>& h2, bool closed,
                                         std::size_t n, std::uint64_t seed, Tolerance tol) {
    OracleResult<double> r = sampling_oracle(h1, h2, closed, n, seed, tol);
    if (r.intersect) return r;
    if (auto q = exact_common_point(h1, h2, closed, tol)) {
        r.intersect = true;
        r.witness = *q;
        r.method = "exact";
    }
    return r;
}

template std::optional<Point<double>> exact_common_point(const CrookedHalfspace<double>&,
                                                         const CrookedHalfspace<double>&, bool,
                                                         Tolerance);
template std::optional<Point<Rational>> exact_common_point(const CrookedHalfspace<Rational>&,
                                                           const CrookedHalfspace<Rational>&, bool,
                                                           Tolerance);

}  // namespace crooked
