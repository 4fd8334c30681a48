#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "crooked/symmetry.hpp"
#include "generators.hpp"

using namespace crooked;
using namespace crooked::testing;

namespace {

using V = Vec3<double>;
using P = Point<double>;
using H = CrookedHalfspace<double>;

H random_halfspace(Engine& g) {
    return H::make(random_point(g, 5), random_unit_spacelike(g, 1.2));
}

// A point of open H, with |a| kept away from zero so that bc / a^2 stays
// moderate.
P random_open_point(Engine& g, const H& h) {
    for (;;) {
        const double a = (coin(g) ? 1 : -1) * uniform(g, 0.3, 2);
        const double b = uniform(g, -2, 2), c = uniform(g, -2, 2);
        const P q = h.point_at(a, b, c);
        if (contains(h, q, false) && std::abs(a > 0 ? b : c) > 0.05) return q;
    }
}

double dist(const P& a, const P& b) {
    return (a - b).max_abs_coord();
}

std::string printed(const std::array<double, 3>& x) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g", x[0], x[1], x[2]);
    return buf;
}

}  // namespace

TEST(Phi, Examples) {
    const H h = H::canonical();
    EXPECT_DOUBLE_EQ(phi(h, h.point_at(1, 1, -0.25)).phi, -0.25);
    EXPECT_DOUBLE_EQ(phi(h, h.point_at(1, 1, 3)).phi, 3);
    const auto stem = phi(h, h.point_at(0, 1, -1));
    EXPECT_TRUE(stem.neg_inf);
    EXPECT_EQ(stem.str(), "-inf");
    EXPECT_DOUBLE_EQ(phi(h, h.point_at(2, 2, 2)).phi, 1);
    EXPECT_EQ((OrbitCoordinate{1, false}).str(), "1");
    EXPECT_EQ((OrbitCoordinate{-0.25, false}).str(), "-0.25");
    EXPECT_THROW(phi(h, h.point_at(-1, 1, 1)), DomainError);
}

TEST(Phi, InvariantUnderAutomorphisms) {
    Engine g(71);
    for (int i = 0; i < 2000; ++i) {
        const H h = random_halfspace(g);
        const P q = random_open_point(g, h);
        AutomorphismParams p;
        p.s = uniform(g, -1, 1);
        p.t = uniform(g, -1, 1);
        p.eps = coin(g) ? 1 : 0;
        const P img = automorphism_map(h, p).apply(q);
        ASSERT_TRUE(contains(h, img, false));
        EXPECT_NEAR(phi(h, img).phi, phi(h, q).phi, 1e-9);
    }
}

TEST(Automorphisms, PreserveH) {
    Engine g(72);
    for (int i = 0; i < 100; ++i) {
        const H h = random_halfspace(g);
        AutomorphismParams p{uniform(g, -1, 1), uniform(g, -1, 1), 0, static_cast<int>(integer(g, 0, 1))};
        const auto m = automorphism_map(h, p);
        EXPECT_TRUE(m.is_conformal());
        const H img = transform(h, m);
        EXPECT_LT(dist(img.vertex(), h.vertex()), 1e-9);
        EXPECT_TRUE(positively_parallel(img.director(), h.director()));
        for (int k = 0; k < 30; ++k) {
            const P q = h.point_at(uniform(g, -2, 2), uniform(g, -2, 2), uniform(g, -2, 2));
            EXPECT_EQ(contains(h, q, false), contains(h, m.apply(q), false));
        }
    }
}

TEST(Automorphisms, NonzeroUBreaksConformality) {
    const H h = H::canonical();
    EXPECT_FALSE(automorphism_map(h, {0, 0, 0.5, 0}).is_conformal());
}

TEST(Canonicalize, Examples) {
    const H h = H::canonical();
    const auto c1 = canonicalize(h, h.point_at(0, std::exp(2.0), -1));
    EXPECT_NEAR(c1.g.s, 1, 1e-12);
    EXPECT_NEAR(c1.g.t, 1, 1e-12);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(c1.x[k], (std::array<double, 3>{0, 1, -1})[k], 1e-12);

    const auto c2 = canonicalize(h, h.point_at(1, 1, 0.7));
    EXPECT_NEAR(c2.g.s, 0, 1e-15);
    EXPECT_NEAR(c2.g.t, 0, 1e-15);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(c2.x[k], (std::array<double, 3>{1, 1, 0.7})[k], 1e-15);

    const auto c3 = canonicalize(h, h.point_at(-1, 0, -1));
    EXPECT_EQ(c3.g.eps, 1);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(c3.x[k], (std::array<double, 3>{1, 1, 0})[k], 1e-15);
}

TEST(Canonicalize, RoundTrip) {
    Engine g(73);
    for (int i = 0; i < 2000; ++i) {
        const H h = random_halfspace(g);
        P q = random_open_point(g, h);
        if (i % 10 == 0) q = h.point_at(0, uniform(g, 0.1, 3), -uniform(g, 0.1, 3));
        for (const Canonical& c : {canonicalize(h, q), global_canonicalize(h, q)}) {
            const P back = automorphism_map(h, c.g).apply(c.point);
            EXPECT_LT(dist(back, q), 1e-9 * (1 + q.as_vector().max_abs_coord()));
            if (!phi(h, q).neg_inf) {
                EXPECT_NEAR(phi(h, c.point).phi, phi(h, q).phi, 1e-9);
            }
        }
        EXPECT_EQ(global_canonicalize(h, q).g.eps, 0);
    }
}

TEST(GlobalSlice, Examples) {
    EXPECT_EQ(global_slice(0), (std::array<double, 3>{0, 1, -1}));
    EXPECT_EQ(global_slice(1), (std::array<double, 3>{1, 1, 0}));
    EXPECT_EQ(global_slice(0.5), (std::array<double, 3>{0.5, 1, -0.5}));
    EXPECT_EQ(global_slice(-1), (std::array<double, 3>{-1, 0, -1}));
    EXPECT_EQ(global_slice(3), (std::array<double, 3>{1, 1, 2}));
}

TEST(GlobalSlice, BranchesMeetAtBreakpoints) {
    // Each branch evaluated on its own, then compared where two meet.
    auto b1 = [](double a) { return std::array<double, 3>{-1, a + 1, -1}; };
    auto b2 = [](double a) { return std::array<double, 3>{a, a + 1, -1}; };
    auto b3 = [](double a) { return std::array<double, 3>{a, 1, a - 1}; };
    auto b4 = [](double a) { return std::array<double, 3>{1, 1, a - 1}; };
    EXPECT_EQ(printed(b1(-1)), printed(b2(-1)));
    EXPECT_EQ(printed(b2(0)), printed(b3(0)));
    EXPECT_EQ(printed(b3(1)), printed(b4(1)));
    EXPECT_EQ(printed(global_slice(-1)), printed(b2(-1)));
    EXPECT_EQ(printed(global_slice(0)), printed(b3(0)));
    EXPECT_EQ(printed(global_slice(1)), printed(b4(1)));
}

TEST(GlobalSlice, RhoSymmetry) {
    Engine g(74);
    for (int i = 0; i < 200; ++i) {
        const double a = uniform(g, -3, 3);
        const auto x = global_slice(a);
        const auto y = global_slice(-a);
        EXPECT_NEAR(-x[0], y[0], 1e-15);
        EXPECT_NEAR(-x[2], y[1], 1e-15);
        EXPECT_NEAR(-x[1], y[2], 1e-15);
    }
}

TEST(GlobalSlice, InsideHAndOnePointPerOrbit) {
    const H h = H::canonical();
    double prev = -INFINITY;
    for (double a = 0.01; a < 3; a += 0.01) {
        const auto x = global_slice(a);
        const P q = h.point_at(x[0], x[1], x[2]);
        ASSERT_TRUE(contains(h, q, false));
        const double f = phi(h, q).phi;
        EXPECT_GT(f, prev);
        prev = f;
        EXPECT_NEAR(global_canonicalize(h, q).slice_param, a, 1e-9);
    }
}

TEST(SliceParameter, InvertsPhiOnUnitInterval) {
    for (double a : {0.1, 0.3, 0.5, 0.9, 0.999}) {
        const double gamma = (a - 1) / (a * a);
        EXPECT_NEAR(slice_parameter_for_phi(gamma), a, 1e-12);
    }
    EXPECT_THROW(slice_parameter_for_phi(0.5), DomainError);
}

TEST(FixedRay, CanonicalThroughBasepoint) {
    const H h = H::canonical();
    const Ray r = fixed_ray(h);
    const P q = h.point_at(0, 1, -1);
    EXPECT_LT(dist(r.origin + r.dir, q), 1e-12);
    const auto m = rho(h.frame(), h.vertex());
    for (double k : {0.0, 0.5, 2.0}) {
        const P x = r.origin + r.dir * k;
        EXPECT_LT(dist(m.apply(x), x), 1e-12);
    }
}
