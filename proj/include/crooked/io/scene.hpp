#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crooked/crooked.hpp"
#include "crooked/foliation.hpp"
#include "crooked/lines.hpp"

namespace crooked::io {

/// Three coordinates read from a record. JSON numbers convert exactly from
/// their double value; strings ("1/3", "0.1") are parsed exactly and rounded
/// for the floating-point value.
struct Triple {
    std::array<double, 3> value{};
    std::array<Rational, 3> exact{};
    bool textual = false;

    static Triple of(double x, double y, double z);

    Vec3<double> vec() const { return {value[0], value[1], value[2]}; }
    Point<double> point() const { return {value[0], value[1], value[2]}; }
    Vec3<Rational> exact_vec() const { return {exact[0], exact[1], exact[2]}; }
    Point<Rational> exact_point() const { return {exact[0], exact[1], exact[2]}; }
};

struct HalfspaceRecord {
    Triple vertex;
    Triple director;

    CrookedHalfspace<double> halfspace(Tolerance tol = kDefaultTolerance) const {
        return CrookedHalfspace<double>::make(vertex.point(), director.vec(), tol);
    }
    CrookedHalfspace<Rational> exact_halfspace(Tolerance tol = kDefaultTolerance) const {
        return CrookedHalfspace<Rational>::make(vertex.exact_point(), director.exact_vec(), tol);
    }
};

struct LineRecord {
    Triple base;
    Triple dir;
};

/// Affine plane point + span(span[0], span[1]).
struct PlaneRecord {
    Triple point;
    std::array<Triple, 2> span;
};

/// a and b multiply (-1, sinh t, cosh t) = sqrt(2) s_t- and
/// (1, sinh t, cosh t) = sqrt(2) s_t+, i.e. a_t = sqrt(2) a(t). Constants
/// a, b with p0 = (0, a - b, 0) give the vertex path
/// (-(a + b) t, (a - b) cosh t, (a - b) sinh t).
struct FoliationRecord {
    std::string director_family = "orthogonal";
    double t0 = 0, t1 = 0;
    std::string a, b;  // coefficient expressions
    Triple p0;
    int steps = 0;
    std::optional<double> anchor;

    CrookedFoliation build() const;
};

using Record = std::variant<HalfspaceRecord, LineRecord, PlaneRecord, FoliationRecord>;

/// Parses one JSON object. Unknown fields, missing fields and charts other
/// than "std" raise ParseError.
Record parse_record(const std::string& text);

/// Single-line JSON with a fixed key order; parse_record(format_record(r))
/// reproduces r.
std::string format_record(const Record& r);

/// One record per line; blank lines and lines starting with '#' are skipped.
std::vector<Record> parse_scene(std::istream& in);

/// "1,2,3" -> three coordinates (exact parsing, as for JSON strings).
Triple parse_triple(const std::string& text);

/// Shortest decimal that reads back to the same double; -0 prints as 0.
std::string format_double(double x);

}  // namespace crooked::io
