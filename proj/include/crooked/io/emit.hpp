#pragma once

#include <array>
#include <string>
#include <vector>

#include "crooked/crooked.hpp"
#include "crooked/foliation.hpp"
#include "crooked/io/scene.hpp"

namespace crooked::io {

/// Intersection of a crooked plane with a spacelike (definite) plane: a ray in
/// the wing W+, a segment of the stem between the two hinges, and a ray in
/// the wing W-.
struct Zigzag {
    Point<double> hinge_minus;  // on p + R s-
    Point<double> hinge_plus;   // on p + R s+
    Vec3<double> wing_plus_dir;   // from hinge_minus, inside W+
    Vec3<double> wing_minus_dir;  // from hinge_plus, inside W-
    /// Orthonormal basis of the cutting plane (Lorentzian inner product) and
    /// its origin, for planar output.
    Point<double> origin;
    std::array<Vec3<double>, 2> basis;

    std::array<double, 2> plane_coords(const Point<double>& q) const;
};

struct Plane {
    Point<double> point;
    std::array<Vec3<double>, 2> span;

    static Plane from_record(const PlaneRecord& r) {
        return {r.point.point(), {r.span[0].vec(), r.span[1].vec()}};
    }
};

/// Throws DomainError unless the plane's induced metric is positive definite.
Zigzag zigzag(const CrookedHalfspace<double>& h, const Plane& plane,
              Tolerance tol = kDefaultTolerance);

struct ZigzagVertex {
    double t;  // arc length from the first row
    Point<double> p;
    Stratum stratum;
};

/// Five rows: far point of the W+ ray, hinge- breakpoint, stem midpoint,
/// hinge+ breakpoint, far point of the W- ray. The rays are cut at
/// ray_length (plane metric).
std::vector<ZigzagVertex> zigzag_vertices(const CrookedHalfspace<double>& h, const Zigzag& z,
                                          double ray_length, Tolerance tol = kDefaultTolerance);

std::string zigzag_csv(const std::vector<ZigzagVertex>& rows);
std::string zigzag_svg(const Zigzag& z, const std::vector<ZigzagVertex>& rows);

struct Box {
    std::array<double, 3> lo{}, hi{};
};

struct Mesh {
    std::vector<Point<double>> vertices;
    std::vector<std::array<std::size_t, 3>> triangles;  // 0-based
};

/// Crooked plane of h clipped to the box: two stem triangles and two wing
/// quadrilaterals, each cut into resolution^2 cells, clipped and fan
/// triangulated. Hinge edges are shared edges of the pieces. Throws
/// DomainError for a box without volume.
Mesh crooked_plane_mesh(const CrookedHalfspace<double>& h, const Box& box, int resolution = 1);

/// Appends b to a with its vertex indices shifted.
void append_mesh(Mesh& a, const Mesh& b);

std::string mesh_obj(const Mesh& m);

/// Columns t,px,py,pz.
std::string vertex_path_csv(const CrookedFoliation& f);

}  // namespace crooked::io
