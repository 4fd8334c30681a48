#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crooked/crooked.hpp"

namespace crooked {

/// Outcome of a brute-force intersection search between two halfspaces.
template <class T>
struct OracleResult {
    bool intersect = false;
    std::optional<Point<T>> witness;
    /// "sampling", "seam" or "exact" for the search that produced the witness.
    std::string method;
    std::size_t samples = 0;
};

/// Both halfspaces are finite unions of convex polyhedra (two pieces each when
/// closed, three when open). Searches the pairwise intersections of pieces
/// with Fourier-Motzkin elimination; any point returned passes both
/// membership tests.
template <class T>
std::optional<Point<T>> exact_common_point(const CrookedHalfspace<T>& h1,
                                           const CrookedHalfspace<T>& h2, bool closed,
                                           Tolerance tol = kDefaultTolerance);

/// Seeded rejection sampling (n points kept per halfspace inside a ball of
/// radius 1e3 (1 + |p1 - p2|) around the midpoint of the vertices) followed by
/// deterministic probes along hinges, stems and wings of both halfspaces and
/// where the boundary planes of the two halfspaces meet.
OracleResult<double> sampling_oracle(const CrookedHalfspace<double>& h1,
                                     const CrookedHalfspace<double>& h2, bool closed,
                                     std::size_t n, std::uint64_t seed,
                                     Tolerance tol = kDefaultTolerance);

/// Sampling first; falls back to the exact piecewise search, so an
/// intersection is always reported with a witness.
OracleResult<double> intersection_oracle(const CrookedHalfspace<double>& h1,
                                         const CrookedHalfspace<double>& h2, bool closed,
                                         std::size_t n, std::uint64_t seed,
                                         Tolerance tol = kDefaultTolerance);

}  // namespace crooked
