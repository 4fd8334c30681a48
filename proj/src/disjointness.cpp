#include "crooked/disjointness.hpp"

namespace crooked {

template <class T>
TranslationCone<T> allowable_cone(const Vec3<T>& s1, const Vec3<T>& s2, Tolerance tol) {
    if (!consistently_oriented(s1, s2, tol))
        throw DomainError("allowable cone: directors are not consistently oriented");
    const NullFrame<T> f1 = null_frame(s1, tol);
    const NullFrame<T> f2 = null_frame(s2, tol);
    return TranslationCone<T>::from_generators(
        {f1.s_minus(), -f1.s_plus(), -f2.s_minus(), f2.s_plus()}, tol);
}

namespace {

template <class T>
bool decide(const CrookedHalfspace<T>& h1, const CrookedHalfspace<T>& h2, bool closed,
            bool by_coefficients, Tolerance tol) {
    const GeodesicRelation rel = relation(h1.director(), h2.director(), tol);
    if (rel == GeodesicRelation::Equal) {
        if (positively_parallel(h1.director(), h2.director(), tol)) return false;
        // H2 is the complement of H(p2, s1): the open sets are disjoint iff
        // H(p1, s1) sits inside H(p2, s1).
        if (closed) return false;
        return semigroup_contains(h1, h1.vertex() - h2.vertex(), false, tol);
    }
    if (!consistently_oriented(h1.director(), h2.director(), tol)) return false;
    const TranslationCone<T> a = allowable_cone(h1.director(), h2.director(), tol);
    const Vec3<T> w = h1.vertex() - h2.vertex();
    return by_coefficients ? a.contains_by_coefficients(w, closed, tol).inside
                           : a.contains(w, closed, tol).inside;
}

template <class T>
int sgn(const T& x, const T& scale, Tolerance tol) {
    return sign_rel(x, scale, tol);
}

}  // namespace

template <class T>
bool halfspaces_disjoint(const CrookedHalfspace<T>& h1, const CrookedHalfspace<T>& h2,
                         bool closed_variant, Tolerance tol) {
    return decide(h1, h2, closed_variant, false, tol);
}

template <class T>
bool planes_disjoint_dg(const Point<T>& p1, const Vec3<T>& s1_in, const Point<T>& p2,
                        const Vec3<T>& s2_in, Tolerance tol) {
    const GeodesicRelation rel = relation(s1_in, s2_in, tol);
    if (rel == GeodesicRelation::Crossing || rel == GeodesicRelation::Equal)
        throw DomainError("inequalities need ultraparallel or asymptotic directors");
    if (!consistently_oriented(s1_in, s2_in, tol))
        throw DomainError("inequalities need consistently oriented directors");
    const NullFrame<T> f1 = null_frame(s1_in, tol);
    const NullFrame<T> f2 = null_frame(s2_in, tol);
    const Vec3<T>& s1 = f1.s();
    const Vec3<T>& s2 = f2.s();
    const Vec3<T> w = p2 - p1;
    const T ws = w.max_abs_coord();

    if (rel == GeodesicRelation::Ultraparallel) {
        const Vec3<T> n = cross(s1, s2);
        const T lhs = inner(w, n);
        const T rhs = abs_value(inner(w, s1)) + abs_value(inner(w, s2));
        return sgn(T(lhs - rhs), T(ws * max_abs(T(1), n.max_abs_coord())), tol) > 0;
    }
    // Asymptotic: find the shared ideal point.
    if (positively_parallel(f1.s_minus(), f2.s_plus(), tol)) {
        const Vec3<T> n = cross(f1.s_plus(), f2.s_minus());
        return sgn(inner(w, s1), ws, tol) < 0 && sgn(inner(w, s2), ws, tol) < 0 &&
               sgn(inner(w, n), T(ws * n.max_abs_coord()), tol) > 0;
    }
    if (positively_parallel(f1.s_plus(), f2.s_minus(), tol)) {
        const Vec3<T> v = -w;
        const Vec3<T> n = cross(f2.s_plus(), f1.s_minus());
        return sgn(inner(v, s2), ws, tol) < 0 && sgn(inner(v, s1), ws, tol) < 0 &&
               sgn(inner(v, n), T(ws * n.max_abs_coord()), tol) > 0;
    }
    throw DomainError("asymptotic directors without a shared null direction");
}

DisjointnessReport disjointness_report(const CrookedHalfspace<double>& h1,
                                       const CrookedHalfspace<double>& h2,
                                       std::size_t oracle_samples, std::uint64_t seed,
                                       Tolerance tol) {
    DisjointnessReport r;
    r.relation = relation(h1.director(), h2.director(), tol);
    r.consistent = consistently_oriented(h1.director(), h2.director(), tol);
    r.closed_disjoint = decide(h1, h2, true, false, tol);
    r.open_disjoint = decide(h1, h2, false, false, tol);
    r.closed_disjoint_coefficients = decide(h1, h2, true, true, tol);
    r.open_disjoint_coefficients = decide(h1, h2, false, true, tol);
    std::string note;
    auto flag = [&](const std::string& what) {
        r.disagreement = true;
        if (!note.empty()) note += "; ";
        note += what;
    };
    if (r.closed_disjoint != r.closed_disjoint_coefficients) flag("closed: facet vs coefficient test");
    if (r.open_disjoint != r.open_disjoint_coefficients) flag("open: facet vs coefficient test");
    if (r.closed_disjoint && !r.open_disjoint) flag("closed disjoint but open intersecting");

    if (r.consistent && (r.relation == GeodesicRelation::Ultraparallel ||
                         r.relation == GeodesicRelation::Asymptotic)) {
        r.dg = planes_disjoint_dg(h1.vertex(), h1.director(), h2.vertex(), h2.director(), tol);
        if (*r.dg != r.closed_disjoint) flag("cone criterion vs crooked plane inequalities");
    }

    if (oracle_samples > 0) {
        r.oracle = intersection_oracle(h1, h2, true, oracle_samples, seed, tol);
        if (r.oracle->intersect == r.closed_disjoint) flag("cone criterion vs oracle");
        if (r.oracle->witness) r.witness = r.oracle->witness;
    } else if (!r.closed_disjoint) {
        r.witness = exact_common_point(h1, h2, true, tol);
        if (!r.witness) flag("no witness for intersecting halfspaces");
    }
    r.note = note;
    return r;
}

template TranslationCone<double> allowable_cone(const Vec3<double>&, const Vec3<double>&, Tolerance);
template TranslationCone<Rational> allowable_cone(const Vec3<Rational>&, const Vec3<Rational>&,
                                                  Tolerance);
template bool halfspaces_disjoint(const CrookedHalfspace<double>&, const CrookedHalfspace<double>&,
                                  bool, Tolerance);
template bool halfspaces_disjoint(const CrookedHalfspace<Rational>&,
                                  const CrookedHalfspace<Rational>&, bool, Tolerance);
template bool planes_disjoint_dg(const Point<double>&, const Vec3<double>&, const Point<double>&,
                                 const Vec3<double>&, Tolerance);
template bool planes_disjoint_dg(const Point<Rational>&, const Vec3<Rational>&,
                                 const Point<Rational>&, const Vec3<Rational>&, Tolerance);

}  // namespace crooked
