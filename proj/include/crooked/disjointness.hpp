#pragma once

#include <optional>
#include <string>

#include "crooked/cone.hpp"
#include "crooked/crooked.hpp"
#include "crooked/oracle.hpp"

namespace crooked {

/// Interior of V(s1) - V(s2), generated by s1-, -s1+, -s2-, s2+. Positively
/// parallel generators (the asymptotic case) are merged.
template <class T>
TranslationCone<T> allowable_cone(const Vec3<T>& s1, const Vec3<T>& s2,
                                  Tolerance tol = kDefaultTolerance);

/// Closed halfspaces are disjoint iff p1 - p2 lies in the interior of the
/// allowable cone; open ones iff it lies in its closure. Directors on the same
/// geodesic are decided directly.
template <class T>
bool halfspaces_disjoint(const CrookedHalfspace<T>& h1, const CrookedHalfspace<T>& h2,
                         bool closed_variant, Tolerance tol = kDefaultTolerance);

/// Crooked plane inequalities with w = p2 - p1. Ultraparallel:
///   w.(s1 x s2) > |w.s1| + |w.s2|.
/// Asymptotic, with s1- parallel to s2+:
///   w.s1 < 0, w.s2 < 0, w.(s1+ x s2-) > 0
/// and the mirror statement when s1+ is parallel to s2- instead.
template <class T>
bool planes_disjoint_dg(const Point<T>& p1, const Vec3<T>& s1, const Point<T>& p2,
                        const Vec3<T>& s2, Tolerance tol = kDefaultTolerance);

struct DisjointnessReport {
    GeodesicRelation relation = GeodesicRelation::Crossing;
    bool consistent = false;
    /// Cone criterion (facet test) for closed and open halfspaces.
    bool closed_disjoint = false;
    bool open_disjoint = false;
    /// Same decisions through the generator-coefficient test.
    bool closed_disjoint_coefficients = false;
    bool open_disjoint_coefficients = false;
    std::optional<bool> dg;
    std::optional<OracleResult<double>> oracle;
    /// Common point of the closed halfspaces when they meet.
    std::optional<Point<double>> witness;
    bool disagreement = false;
    std::string note;
};

/// Runs every method on the pair and flags any disagreement. oracle_samples
/// of zero skips the sampling oracle; a witness is still produced by the
/// exact piecewise search whenever the closed halfspaces meet.
DisjointnessReport disjointness_report(const CrookedHalfspace<double>& h1,
                                       const CrookedHalfspace<double>& h2,
                                       std::size_t oracle_samples = 0, std::uint64_t seed = 0,
                                       Tolerance tol = kDefaultTolerance);

}  // namespace crooked
