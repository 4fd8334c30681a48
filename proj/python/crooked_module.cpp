#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crooked/disjointness.hpp"
#include "crooked/foliation.hpp"
#include "crooked/io/emit.hpp"
#include "crooked/io/scene.hpp"
#include "crooked/lines.hpp"
#include "crooked/symmetry.hpp"

namespace py = pybind11;
using namespace crooked;

namespace {

using Triple = std::array<double, 3>;
using H = CrookedHalfspace<double>;

Vec3<double> vec(const Triple& t) { return {t[0], t[1], t[2]}; }
Point<double> point(const Triple& t) { return {t[0], t[1], t[2]}; }
Triple triple(const Vec3<double>& v) { return {v.x, v.y, v.z}; }
Triple triple(const Point<double>& p) { return {p.x, p.y, p.z}; }

py::dict frame_dict(const NullFrame<double>& f) {
    py::dict d;
    d["s"] = triple(f.s());
    d["s_minus"] = triple(f.s_minus());
    d["s_plus"] = triple(f.s_plus());
    return d;
}

io::FoliationRecord foliation_record(const std::string& text) {
    auto r = io::parse_record(text);
    if (!std::holds_alternative<io::FoliationRecord>(r)) throw ParseError("expected a foliation record");
    return std::get<io::FoliationRecord>(r);
}

}  // namespace

PYBIND11_MODULE(_crooked, m) {
    m.doc() = "Crooked planes and halfspaces in 2+1 Minkowski space";

    static py::exception<Error> error(m, "CrookedError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<DomainError>(m, "DomainError", error.ptr());

    m.def("inner", [](const Triple& u, const Triple& v) { return inner(vec(u), vec(v)); });
    m.def("cross", [](const Triple& u, const Triple& v) { return triple(cross(vec(u), vec(v))); });
    m.def("classify", [](const Triple& v) { return std::string(to_string(classify(vec(v)))); });
    m.def("null_frame", [](const Triple& s) { return frame_dict(null_frame(vec(s))); }, py::arg("s"));

    py::class_<H>(m, "Halfspace")
        .def(py::init([](const Triple& vertex, const Triple& director) {
                 return H::make(point(vertex), vec(director));
             }),
             py::arg("vertex"), py::arg("director"))
        .def_static("canonical", &H::canonical)
        .def_property_readonly("vertex", [](const H& h) { return triple(h.vertex()); })
        .def_property_readonly("director", [](const H& h) { return triple(h.director()); })
        .def_property_readonly("frame", [](const H& h) { return frame_dict(h.frame()); })
        .def("coords", [](const H& h, const Triple& q) { return triple(h.coords(point(q))); })
        .def("point_at", [](const H& h, double a, double b, double c) { return triple(h.point_at(a, b, c)); })
        .def("contains", [](const H& h, const Triple& q, bool closed) { return contains(h, point(q), closed); },
             py::arg("q"), py::arg("closed") = false)
        .def("stratum", [](const H& h, const Triple& q) { return std::string(to_string(stratum(h, point(q)))); })
        .def("semigroup_contains",
             [](const H& h, const Triple& v, bool relint) { return semigroup_contains(h, vec(v), relint); },
             py::arg("v"), py::arg("relative_interior") = false)
        .def("complement", [](const H& h) { return complement(h); })
        .def("linearize", [](const H& h) { return triple(linearize(h).s); })
        .def("translated", [](const H& h, const Triple& v) { return h.translated(vec(v)); })
        .def("particle_through",
             [](const H& h, const Triple& q) {
                 const auto l = particle_through(h, point(q));
                 return std::make_pair(triple(l.base), triple(l.dir));
             })
        .def("__repr__", [](const H& h) {
            std::ostringstream s;
            s << "Halfspace(vertex=(" << h.vertex().x << ", " << h.vertex().y << ", " << h.vertex().z
              << "), director=(" << h.director().x << ", " << h.director().y << ", " << h.director().z << "))";
            return s.str();
        });

    m.def("halfspaces_disjoint", [](const H& a, const H& b, bool closed) { return halfspaces_disjoint(a, b, closed); },
          py::arg("h1"), py::arg("h2"), py::arg("closed") = true);
    m.def("planes_disjoint", [](const H& a, const H& b) {
        return planes_disjoint_dg(a.vertex(), a.director(), b.vertex(), b.director());
    });
    m.def(
        "disjointness_report",
        [](const H& a, const H& b, std::size_t samples, std::uint64_t seed) {
            const auto r = disjointness_report(a, b, samples, seed);
            py::dict d;
            d["relation"] = std::string(to_string(r.relation));
            d["consistent"] = r.consistent;
            d["closed_disjoint"] = r.closed_disjoint;
            d["open_disjoint"] = r.open_disjoint;
            d["dg"] = r.dg ? py::cast(*r.dg) : py::none();
            d["witness"] = r.witness ? py::cast(triple(*r.witness)) : py::none();
            d["agree"] = !r.disagreement;
            d["note"] = r.note;
            return d;
        },
        py::arg("h1"), py::arg("h2"), py::arg("oracle_samples") = 0, py::arg("seed") = 0);

    m.def("phi", [](const H& h, const Triple& q) {
        const auto o = phi(h, point(q));
        return o.neg_inf ? -std::numeric_limits<double>::infinity() : o.phi;
    });
    m.def("canonicalize", [](const H& h, const Triple& q, bool global) {
        const Canonical c = global ? global_canonicalize(h, point(q)) : canonicalize(h, point(q));
        py::dict d;
        d["s"] = c.g.s;
        d["t"] = c.g.t;
        d["eps"] = c.g.eps;
        d["x"] = c.x;
        d["point"] = triple(c.point);
        if (global) d["slice_param"] = c.slice_param;
        return d;
    }, py::arg("h"), py::arg("q"), py::arg("global_slice") = false);

    m.def("zigzag_csv", [](const H& h, const Triple& base, const Triple& u1, const Triple& u2, double ray_length) {
        const auto z = io::zigzag(h, io::Plane{point(base), {vec(u1), vec(u2)}});
        return io::zigzag_csv(io::zigzag_vertices(h, z, ray_length));
    }, py::arg("h"), py::arg("point"), py::arg("u1"), py::arg("u2"), py::arg("ray_length") = 10.0);
    m.def("mesh_obj", [](const H& h, const Triple& lo, const Triple& hi, int resolution) {
        return io::mesh_obj(io::crooked_plane_mesh(h, io::Box{lo, hi}, resolution));
    }, py::arg("h"), py::arg("lo") = Triple{-5, -5, -5}, py::arg("hi") = Triple{5, 5, 5}, py::arg("resolution") = 1);

    m.def("vertex_path", [](const std::string& record) {
        const auto f = foliation_record(record).build();
        py::list rows;
        for (const auto& s : f.samples) rows.append(py::make_tuple(s.t, triple(s.vertex)));
        return rows;
    }, py::arg("record"));
    m.def("certify", [](const std::string& record) {
        const auto rep = certify_foliation(foliation_record(record).build());
        py::dict d;
        d["certified"] = rep.passed;
        d["velocities_ok"] = rep.velocities_ok;
        d["pairs_ok"] = rep.pairs_ok;
        d["order"] = rep.order;
        d["pairs_checked"] = rep.pairs_checked;
        d["message"] = rep.message;
        return d;
    }, py::arg("record"));
    m.def("format_record", [](const std::string& text) { return io::format_record(io::parse_record(text)); });
}
