#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "crooked/io/emit.hpp"
#include "crooked/io/scene.hpp"
#include "generators.hpp"

using namespace crooked;
using namespace crooked::io;
using namespace crooked::testing;

namespace {

using V = Vec3<double>;
using P = Point<double>;
using H = CrookedHalfspace<double>;

// Spacelike plane through `point`: spanned by two orthonormal vectors of
// the orthogonal complement of a future unit timelike normal.
Plane definite_plane(const P& point, const V& normal) {
    const V a = std::abs(normal.x) < 0.9 ? V(1, 0, 0) : V(0, 1, 0);
    V u1 = a + normal * inner(a, normal);  // normal.normal = -1
    u1 = u1 / std::sqrt(inner(u1, u1));
    const V u2 = cross(normal, u1);
    return {point, {u1, u2}};
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST(Scene, ParseHalfspace) {
    const auto r = parse_record(R"j({"type":"halfspace","vertex":[1,2,3],"director":[1,0,0],"chart":"std"})j");
    const auto& h = std::get<HalfspaceRecord>(r);
    EXPECT_EQ(h.vertex.value, (std::array<double, 3>{1, 2, 3}));
    EXPECT_EQ(h.director.exact[0], Rational(1));
}

TEST(Scene, ChartDefaultsToStd) {
    EXPECT_NO_THROW(parse_record(R"j({"type":"halfspace","vertex":[0,0,0],"director":[1,0,0]})j"));
    EXPECT_THROW(parse_record(R"j({"type":"halfspace","vertex":[0,0,0],"director":[1,0,0],"chart":"frame"})j"),
                 ParseError);
}

TEST(Scene, Rejections) {
    for (const char* bad : {
             R"j({"type":"halfspace","vertex":[0,0,0],"director":[1,0,0],"color":"red"})j",
             R"j({"type":"halfspace","vertex":[0,0],"director":[1,0,0]})j",
             R"j({"type":"halfspace","vertex":[0,0,"x"],"director":[1,0,0]})j",
             R"j({"type":"halfspace","director":[1,0,0]})j",
             R"j({"type":"sphere"})j",
             R"j([1,2,3])j",
             R"j({"type":"halfspace",)j",
             R"j({"type":"foliation","director_family":"radial","t_range":[0,1],"coeffs":{"a":"1","b":"1"},"p0":[0,0,0],"steps":10})j",
             R"j({"type":"foliation","director_family":"orthogonal","t_range":[1,0],"coeffs":{"a":"1","b":"1"},"p0":[0,0,0],"steps":10})j",
             R"j({"type":"foliation","director_family":"orthogonal","t_range":[0,1],"coeffs":{"a":"log(t)","b":"1"},"p0":[0,0,0],"steps":10})j",
             R"j({"type":"foliation","director_family":"orthogonal","t_range":[0,1],"coeffs":{"a":"1","b":"1","c":"1"},"p0":[0,0,0],"steps":10})j",
         })
        EXPECT_THROW(parse_record(bad), ParseError) << bad;
}

TEST(Scene, ExactStrings) {
    const auto r = parse_record(R"j({"type":"halfspace","vertex":["1/3","0.1",0],"director":[1,0,0]})j");
    const auto& h = std::get<HalfspaceRecord>(r);
    EXPECT_EQ(h.vertex.exact[0], Rational(1, 3));
    EXPECT_EQ(h.vertex.exact[1], Rational(1, 10));
    EXPECT_EQ(h.vertex.value[1], 0.1);
}

TEST(Scene, RoundTrip) {
    const std::vector<std::string> canonical = {
        R"j({"type":"halfspace","vertex":[0.1,-2.5,1e-20],"director":[1,0,0],"chart":"std"})j",
        R"j({"type":"halfspace","vertex":["1/3","-2/7","0"],"director":["3/5","4/5","0"],"chart":"std"})j",
        R"j({"type":"line","base":[0,0,0],"dir":[0,0,1],"chart":"std"})j",
        R"j({"type":"plane","point":[0,0,1],"span":[[1,0,0],[0,1,0]],"chart":"std"})j",
        R"j({"type":"foliation","director_family":"orthogonal","t_range":[-3.0,3.0],"coeffs":{"a":"1","b":"exp(t)"},"p0":[0,0,0],"steps":100})j",
        R"j({"type":"foliation","director_family":"orthogonal","t_range":[-1.0,2.0],"coeffs":{"a":"1","b":"1"},"p0":[0,0,0],"steps":10,"anchor":0.5})j",
    };
    for (const auto& text : canonical) {
        const Record r = parse_record(text);
        const std::string once = format_record(r);
        EXPECT_EQ(format_record(parse_record(once)), once);
    }
    Engine g(81);
    for (int i = 0; i < 500; ++i) {
        const HalfspaceRecord h{Triple::of(uniform(g, -1e3, 1e3), uniform(g, -1, 1), uniform(g, -1e-8, 1e-8)),
                                Triple::of(1, uniform(g, -1, 1), 0)};
        const auto back = std::get<HalfspaceRecord>(parse_record(format_record(h)));
        EXPECT_EQ(back.vertex.value, h.vertex.value);
        EXPECT_EQ(back.director.value, h.director.value);
    }
}

TEST(Scene, FileWithCommentsAndErrors) {
    std::istringstream ok("# scene\n\n{\"type\":\"halfspace\",\"vertex\":[0,0,0],\"director\":[1,0,0]}\n"
                          "{\"type\":\"line\",\"base\":[0,0,0],\"dir\":[0,0,1]}\n");
    EXPECT_EQ(parse_scene(ok).size(), 2u);
    std::istringstream bad("{\"type\":\"halfspace\",\"vertex\":[0,0,0],\"director\":[1,0,0]}\n{oops}\n");
    try {
        parse_scene(bad);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(Scene, Triples) {
    const Triple t = parse_triple("1, -2/3 ,0.5");
    EXPECT_EQ(t.exact[1], Rational(-2, 3));
    EXPECT_THROW(parse_triple("1,2"), ParseError);
    EXPECT_THROW(parse_triple("1,2,3,4"), ParseError);
    EXPECT_THROW(parse_triple("1,a,3"), ParseError);
}

TEST(Scene, FormatDouble) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(2), "2");
    EXPECT_EQ(std::stod(format_double(M_PI)), M_PI);
}

TEST(Scene, FoliationRecordBuildsClosedForm) {
    const auto r = std::get<FoliationRecord>(parse_record(
        R"j({"type":"foliation","director_family":"orthogonal","t_range":[-3,3],"coeffs":{"a":"1","b":"1"},"p0":[0,0,0],"steps":1000})j"));
    const auto f = r.build();
    for (const auto& s : f.samples) {
        EXPECT_NEAR(s.vertex.x, -2 * s.t, 1e-6);
        EXPECT_NEAR(s.vertex.y, 0, 1e-6);
        EXPECT_NEAR(s.vertex.z, 0, 1e-6);
    }
}

TEST(Zigzag, CanonicalHingeIncidence) {
    const H h = H::canonical();
    const Plane pl = definite_plane(P(0, 1, 1), V(0, 0, 1));
    const Zigzag z = zigzag(h, pl);
    EXPECT_NEAR(h.coords(z.hinge_minus).x, 0, 1e-12);
    EXPECT_NEAR(h.coords(z.hinge_minus).z, 0, 1e-12);
    EXPECT_NEAR(h.coords(z.hinge_plus).x, 0, 1e-12);
    EXPECT_NEAR(h.coords(z.hinge_plus).y, 0, 1e-12);
    const auto rows = zigzag_vertices(h, z, 10);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0].stratum, Stratum::WingPlus);
    EXPECT_EQ(rows[1].stratum, Stratum::HingeMinus);
    EXPECT_EQ(rows[2].stratum, Stratum::StemFace);
    EXPECT_EQ(rows[3].stratum, Stratum::HingePlus);
    EXPECT_EQ(rows[4].stratum, Stratum::WingMinus);
}

TEST(Zigzag, RandomPlanesAndHalfspaces) {
    Engine g(82);
    for (int i = 0; i < 300; ++i) {
        const H h = H::make(random_point(g, 3), random_unit_spacelike(g, 1.2));
        const Plane pl = definite_plane(random_point(g, 3), random_hyperboloid(g, 1.2));
        const Zigzag z = zigzag(h, pl);
        const auto rows = zigzag_vertices(h, z, 5);
        for (const auto& r : rows) {
            // In the plane: the offset from its base point is spanned by u1, u2.
            EXPECT_NEAR(det3(r.p - pl.point, pl.span[0], pl.span[1]), 0, 1e-9 * (1 + (r.p - pl.point).max_abs_coord()));
            EXPECT_NE(r.stratum, Stratum::Exterior);
            EXPECT_NE(r.stratum, Stratum::OpenInterior);
        }
        const V cm = h.coords(z.hinge_minus), cp = h.coords(z.hinge_plus);
        EXPECT_NEAR(cm.x, 0, 1e-9);
        EXPECT_NEAR(cm.z, 0, 1e-9);
        EXPECT_NEAR(cp.x, 0, 1e-9);
        EXPECT_NEAR(cp.y, 0, 1e-9);
        // Segments lie in the stem and the wings.
        EXPECT_EQ(stratum(h, rows[0].p + (rows[1].p - rows[0].p) * 0.5), Stratum::WingPlus);
        EXPECT_EQ(stratum(h, rows[3].p + (rows[4].p - rows[3].p) * 0.5), Stratum::WingMinus);
    }
}

TEST(Zigzag, PlaneThroughVertexIsDegenerate) {
    const H h = H::canonical();
    const Zigzag z = zigzag(h, definite_plane(P(0, 0, 0), V(0, 0, 1)));
    EXPECT_LT((z.hinge_minus - z.hinge_plus).max_abs_coord(), 1e-12);
    EXPECT_LT(z.hinge_minus.as_vector().max_abs_coord(), 1e-12);
}

TEST(Zigzag, NonDefinitePlaneRejected) {
    const H h = H::canonical();
    EXPECT_THROW(zigzag(h, Plane{P(0, 0, 0), {V(1, 0, 0), V(0, 0, 1)}}), DomainError);
    EXPECT_THROW(zigzag(h, Plane{P(0, 0, 0), {V(1, 0, 0), V(0, 1, 1)}}), DomainError);
    EXPECT_THROW(zigzag(h, Plane{P(0, 0, 0), {V(1, 0, 0), V(2, 0, 0)}}), DomainError);
}

TEST(Zigzag, CsvRoundTrip) {
    const H h = H::canonical();
    const Zigzag z = zigzag(h, definite_plane(P(0.3, 1, 1), V(0.2, 0.1, 1) / std::sqrt(1 - 0.05)));
    const auto rows = zigzag_vertices(h, z, 10);
    const auto lines = split_lines(zigzag_csv(rows));
    ASSERT_EQ(lines.size(), 6u);
    EXPECT_EQ(lines[0], "t,x,y,z,stratum");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double t, x, y, zz;
        char name[32];
        ASSERT_EQ(std::sscanf(lines[i + 1].c_str(), "%lf,%lf,%lf,%lf,%31s", &t, &x, &y, &zz, name), 5);
        EXPECT_NEAR(x, rows[i].p.x, 1e-12);
        EXPECT_NEAR(y, rows[i].p.y, 1e-12);
        EXPECT_NEAR(zz, rows[i].p.z, 1e-12);
        EXPECT_EQ(std::string(name), std::string(to_string(rows[i].stratum)));
    }
}

TEST(Zigzag, SvgIsSinglePath) {
    const H h = H::canonical();
    const Zigzag z = zigzag(h, definite_plane(P(0, 1, 1), V(0, 0, 1)));
    const std::string svg = zigzag_svg(z, zigzag_vertices(h, z, 10));
    std::size_t count = 0;
    for (std::size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) ++count;
    EXPECT_EQ(count, 1u);
    EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
}

TEST(Mesh, VerticesOnThePlane) {
    Engine g(83);
    for (int i = 0; i < 30; ++i) {
        const H h = H::make(random_point(g, 2), random_unit_spacelike(g, 1.0));
        const Box box{{-5, -5, -5}, {5, 5, 5}};
        const Mesh m = crooked_plane_mesh(h, box, 1 + i % 3);
        EXPECT_GT(m.triangles.size(), 0u);
        for (const auto& v : m.vertices) {
            const Stratum st = stratum(h, v);
            EXPECT_NE(st, Stratum::Exterior);
            EXPECT_NE(st, Stratum::OpenInterior);
            for (int k = 0; k < 3; ++k) {
                EXPECT_GE(v.as_vector()[k], box.lo[k] - 1e-9);
                EXPECT_LE(v.as_vector()[k], box.hi[k] + 1e-9);
            }
        }
    }
}

TEST(Mesh, DeterministicAndObjShape) {
    const H h = H::canonical();
    const Box box{{-5, -5, -5}, {5, 5, 5}};
    const std::string a = mesh_obj(crooked_plane_mesh(h, box, 2));
    const std::string b = mesh_obj(crooked_plane_mesh(h, box, 2));
    EXPECT_EQ(a, b);
    for (const auto& line : split_lines(a)) {
        ASSERT_FALSE(line.empty());
        EXPECT_TRUE(line[0] == 'v' || line[0] == 'f');
        if (line[0] == 'f') {
            std::istringstream in(line.substr(2));
            int n = 0, idx;
            while (in >> idx) ++n;
            EXPECT_EQ(n, 3);
        }
    }
    EXPECT_THROW(crooked_plane_mesh(h, Box{{0, 0, 0}, {1, 0, 1}}, 1), DomainError);
    EXPECT_THROW(crooked_plane_mesh(h, box, 0), DomainError);
}

TEST(Mesh, HingesAreCreases) {
    // Both hinge rays appear as mesh edges: some vertex pair on each hinge.
    const H h = H::canonical();
    const Mesh m = crooked_plane_mesh(h, Box{{-5, -5, -5}, {5, 5, 5}}, 1);
    int on_minus = 0, on_plus = 0;
    for (const auto& v : m.vertices) {
        const Stratum st = stratum(h, v);
        on_minus += st == Stratum::HingeMinus;
        on_plus += st == Stratum::HingePlus;
    }
    EXPECT_GE(on_minus, 2);
    EXPECT_GE(on_plus, 2);
}

TEST(VertexPathCsv, Header) {
    const auto f = vertex_path(DirectorPath::orthogonal(-1, 1), {Expr::constant(1), Expr::constant(1)},
                               P(0, 0, 0), 4);
    const auto lines = split_lines(vertex_path_csv(f));
    ASSERT_EQ(lines.size(), 6u);
    EXPECT_EQ(lines[0], "t,px,py,pz");
    EXPECT_EQ(lines[3], "0,0,0,0");
}
