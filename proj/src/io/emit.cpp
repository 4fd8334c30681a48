#include "crooked/io/emit.hpp"

#include <algorithm>
#include <cmath>

namespace crooked::io {

namespace {

double plane_norm(const Vec3<double>& v) {
    return std::sqrt(std::max(0.0, inner(v, v)));
}

/// point + alpha u1 + beta u2 = p + lambda d.
Point<double> hit(const Plane& pl, const Point<double>& p, const Vec3<double>& d) {
    const Vec3<double> rhs = p - pl.point;
    const Vec3<double> nd = -d;
    const double den = det3(pl.span[0], pl.span[1], nd);
    const double lambda = det3(pl.span[0], pl.span[1], rhs) / den;
    return p + d * lambda;
}

Vec3<double> wing_direction(const Plane& pl, const Vec3<double>& null_normal, const Vec3<double>& s,
                            int a_sign) {
    const Vec3<double>& u1 = pl.span[0];
    const Vec3<double>& u2 = pl.span[1];
    Vec3<double> w = u1 * inner(u2, null_normal) - u2 * inner(u1, null_normal);
    if ((inner(w, s) > 0) != (a_sign > 0)) w = -w;
    return w / plane_norm(w);
}

std::string num(double x) {
    return format_double(x);
}

using Polygon = std::vector<Point<double>>;

Polygon clip(const Polygon& poly, int axis, double bound, bool keep_below) {
    Polygon out;
    const std::size_t n = poly.size();
    auto coord = [&](const Point<double>& p) { return axis == 0 ? p.x : (axis == 1 ? p.y : p.z); };
    auto inside = [&](const Point<double>& p) {
        return keep_below ? coord(p) <= bound : coord(p) >= bound;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const Point<double>& cur = poly[i];
        const Point<double>& nxt = poly[(i + 1) % n];
        const bool ci = inside(cur), ni = inside(nxt);
        if (ci) out.push_back(cur);
        if (ci != ni) {
            const double t = (bound - coord(cur)) / (coord(nxt) - coord(cur));
            Point<double> q = cur + (nxt - cur) * t;
            // Land exactly on the clipping plane.
            (axis == 0 ? q.x : (axis == 1 ? q.y : q.z)) = bound;
            out.push_back(q);
        }
    }
    return out;
}

void emit_polygon(Mesh& m, Polygon poly, const Box& box) {
    for (int axis = 0; axis < 3 && poly.size() >= 3; ++axis) {
        poly = clip(poly, axis, box.lo[axis], false);
        if (poly.size() >= 3) poly = clip(poly, axis, box.hi[axis], true);
    }
    if (poly.size() < 3) return;
    const std::size_t base = m.vertices.size();
    for (const auto& p : poly) m.vertices.push_back(p);
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) m.triangles.push_back({base, base + i, base + i + 1});
}

}  // namespace

std::array<double, 2> Zigzag::plane_coords(const Point<double>& q) const {
    const Vec3<double> d = q - origin;
    return {inner(d, basis[0]), inner(d, basis[1])};
}

Zigzag zigzag(const CrookedHalfspace<double>& h, const Plane& pl, Tolerance tol) {
    const Vec3<double>& u1 = pl.span[0];
    const Vec3<double>& u2 = pl.span[1];
    const double g11 = inner(u1, u1), g22 = inner(u2, u2), g12 = inner(u1, u2);
    const double scale = std::max({std::abs(g11), std::abs(g22), std::abs(g12)});
    if (sign_rel(g11, scale, tol) <= 0 || sign_rel(g11 * g22 - g12 * g12, scale * scale, tol) <= 0)
        throw DomainError("cutting plane is not definite (induced metric not positive definite)");

    const NullFrame<double>& f = h.frame();
    Zigzag z;
    z.hinge_minus = hit(pl, h.vertex(), f.s_minus());
    z.hinge_plus = hit(pl, h.vertex(), f.s_plus());
    z.wing_plus_dir = wing_direction(pl, f.s_minus(), f.s(), -1);
    z.wing_minus_dir = wing_direction(pl, f.s_plus(), f.s(), +1);
    z.origin = pl.point;
    const Vec3<double> e1 = u1 / std::sqrt(g11);
    const Vec3<double> w = u2 - e1 * inner(u2, e1);
    z.basis = {e1, w / plane_norm(w)};
    return z;
}

std::vector<ZigzagVertex> zigzag_vertices(const CrookedHalfspace<double>& h, const Zigzag& z,
                                          double ray_length, Tolerance tol) {
    const Point<double> far_plus = z.hinge_minus + z.wing_plus_dir * ray_length;
    const Point<double> far_minus = z.hinge_plus + z.wing_minus_dir * ray_length;
    const Point<double> mid = z.hinge_minus + (z.hinge_plus - z.hinge_minus) * 0.5;
    const double stem = plane_norm(z.hinge_plus - z.hinge_minus);
    const std::array<std::pair<double, Point<double>>, 5> rows = {{
        {0.0, far_plus},
        {ray_length, z.hinge_minus},
        {ray_length + stem / 2, mid},
        {ray_length + stem, z.hinge_plus},
        {2 * ray_length + stem, far_minus},
    }};
    std::vector<ZigzagVertex> out;
    for (const auto& [t, p] : rows) out.push_back({t, p, stratum(h, p, tol)});
    return out;
}

std::string zigzag_csv(const std::vector<ZigzagVertex>& rows) {
    std::string s = "t,x,y,z,stratum\n";
    for (const auto& r : rows)
        s += num(r.t) + "," + num(r.p.x) + "," + num(r.p.y) + "," + num(r.p.z) + "," +
             std::string(to_string(r.stratum)) + "\n";
    return s;
}

std::string zigzag_svg(const Zigzag& z, const std::vector<ZigzagVertex>& rows) {
    std::vector<std::array<double, 2>> pts;
    for (const auto& r : rows) {
        const auto c = z.plane_coords(r.p);
        pts.push_back({c[0], -c[1]});  // screen y grows downwards
    }
    double x0 = pts[0][0], x1 = x0, y0 = pts[0][1], y1 = y0;
    for (const auto& p : pts) {
        x0 = std::min(x0, p[0]);
        x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]);
        y1 = std::max(y1, p[1]);
    }
    const double size = std::max({x1 - x0, y1 - y0, 1e-9});
    const double pad = 0.05 * size;
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i)
        d += (i == 0 ? "M " : " L ") + num(pts[i][0]) + " " + num(pts[i][1]);
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(x0 - pad) + " " +
         num(y0 - pad) + " " + num(x1 - x0 + 2 * pad) + " " + num(y1 - y0 + 2 * pad) + "\">\n";
    s += "<path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(size / 200) +
         "\"/>\n";
    s += "</svg>\n";
    return s;
}

Mesh crooked_plane_mesh(const CrookedHalfspace<double>& h, const Box& box, int resolution) {
    for (int i = 0; i < 3; ++i)
        if (!(box.lo[i] < box.hi[i])) throw DomainError("clip box has no volume");
    if (resolution < 1) throw DomainError("mesh resolution must be at least 1");

    // Truncation size: every box point has frame coordinates of size <= R / 2.
    double r = 0;
    for (int m = 0; m < 8; ++m) {
        const Point<double> corner(m & 1 ? box.hi[0] : box.lo[0], m & 2 ? box.hi[1] : box.lo[1],
                                   m & 4 ? box.hi[2] : box.lo[2]);
        r = std::max(r, h.coords(corner).max_abs_coord());
    }
    const double big = 2 * r + 1;
    auto at = [&](double a, double b, double c) { return h.point_at(a, b, c); };

    Mesh mesh;
    const int n = resolution;
    auto triangle = [&](const Point<double>& a, const Point<double>& b, const Point<double>& c) {
        auto p = [&](int i, int j) { return a + (b - a) * (double(i) / n) + (c - a) * (double(j) / n); };
        for (int i = 0; i < n; ++i)
            for (int j = 0; i + j < n; ++j) {
                emit_polygon(mesh, {p(i, j), p(i + 1, j), p(i, j + 1)}, box);
                if (i + j + 1 < n) emit_polygon(mesh, {p(i + 1, j), p(i + 1, j + 1), p(i, j + 1)}, box);
            }
    };
    auto quad = [&](const Point<double>& a, const Point<double>& b, const Point<double>& c,
                    const Point<double>& d) {
        auto p = [&](int i, int j) {
            const double u = double(i) / n, v = double(j) / n;
            const Point<double> ab = a + (b - a) * u;
            const Point<double> dc = d + (c - d) * u;
            return ab + (dc - ab) * v;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) emit_polygon(mesh, {p(i, j), p(i + 1, j), p(i + 1, j + 1), p(i, j + 1)}, box);
    };

    // Stem (0,+,+) and (0,-,-).
    triangle(at(0, 0, 0), at(0, big, 0), at(0, 0, big));
    triangle(at(0, 0, 0), at(0, 0, -big), at(0, -big, 0));
    // Wing W- = (+,0,*), bounded by the hinge b = 0 of the stem plane.
    quad(at(0, 0, -big), at(big, 0, -big), at(big, 0, big), at(0, 0, big));
    // Wing W+ = (-,*,0).
    quad(at(0, -big, 0), at(0, big, 0), at(-big, big, 0), at(-big, -big, 0));
    return mesh;
}

void append_mesh(Mesh& a, const Mesh& b) {
    const std::size_t off = a.vertices.size();
    a.vertices.insert(a.vertices.end(), b.vertices.begin(), b.vertices.end());
    for (const auto& t : b.triangles) a.triangles.push_back({t[0] + off, t[1] + off, t[2] + off});
}

std::string mesh_obj(const Mesh& m) {
    std::string s;
    for (const auto& v : m.vertices) s += "v " + num(v.x) + " " + num(v.y) + " " + num(v.z) + "\n";
    for (const auto& t : m.triangles)
        s += "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " +
             std::to_string(t[2] + 1) + "\n";
    return s;
}

std::string vertex_path_csv(const CrookedFoliation& f) {
    std::string s = "t,px,py,pz\n";
    for (const auto& smp : f.samples)
        s += num(smp.t) + "," + num(smp.vertex.x) + "," + num(smp.vertex.y) + "," + num(smp.vertex.z) + "\n";
    return s;
}

}  // namespace crooked::io
