#include <gtest/gtest.h>

#include <cmath>

#include "crooked/hyperbolic.hpp"
#include "generators.hpp"

using namespace crooked;
using namespace crooked::testing;

namespace {

using V = Vec3<double>;

V s_t(double t) { return {std::cosh(t), 0, std::sinh(t)}; }

const V minus_e1(-1, 0, 0);

}  // namespace

TEST(HPoint, Validation) {
    EXPECT_NO_THROW(HPoint<double>::from_vector(V(0, 0, 1)));
    EXPECT_NO_THROW(HPoint<double>::from_vector(V(std::sinh(1.0), 0, std::cosh(1.0))));
    EXPECT_THROW(HPoint<double>::from_vector(V(0, 0, -1)), DomainError);
    EXPECT_THROW(HPoint<double>::from_vector(V(0, 0, 2)), DomainError);
    EXPECT_THROW(HPoint<double>::from_vector(V(1, 0, 0)), DomainError);
}

TEST(Halfplane, Contains) {
    const auto h = Halfplane<double>::from_vector(V(1, 0, 0));
    const auto origin = HPoint<double>::from_vector(V(0, 0, 1));
    EXPECT_TRUE(hp_contains(h, origin, true));
    EXPECT_FALSE(hp_contains(h, origin, false));
    const auto p = HPoint<double>::from_vector(V(std::sinh(1.0), 0, std::cosh(1.0)));
    EXPECT_TRUE(hp_contains(h, p, false));
    EXPECT_FALSE(hp_contains(h.complement(), p, true));
}

TEST(Halfplane, FromVectorNormalizes) {
    const auto h = Halfplane<double>::from_vector(V(3, 0, 0));
    EXPECT_NEAR(h.s.x, 1, 1e-15);
    const auto hq = Halfplane<Rational>::from_vector(Vec3<Rational>(Rational(3), Rational(4), Rational(0)));
    EXPECT_EQ(hq.s, Vec3<Rational>(Rational(3, 5), Rational(4, 5), Rational(0)));
    EXPECT_THROW(Halfplane<double>::from_vector(V(0, 0, 1)), DomainError);
}

TEST(ConsistentOrientation, KleinExamples) {
    EXPECT_TRUE(consistently_oriented(minus_e1, s_t(1)));
    EXPECT_FALSE(consistently_oriented(minus_e1, s_t(-1)));
    EXPECT_TRUE(consistently_oriented(minus_e1, V(1, 1, 1)));
}

TEST(ConsistentOrientation, ExampleNullPairings) {
    // s1 . s2(+-) = s2 . s1(+-) = -sinh t, with our labels read off null_frame.
    const double t = 0.8;
    const auto f1 = null_frame(minus_e1);
    const auto f2 = null_frame(s_t(t));
    EXPECT_NEAR(inner(minus_e1, s_t(t)), -std::cosh(t), 1e-12);
    for (const V& n : {f2.s_minus(), f2.s_plus()})
        EXPECT_NEAR(inner(minus_e1, n) * std::sqrt(2.0), -std::sinh(t), 1e-12);
    for (const V& n : {f1.s_minus(), f1.s_plus()})
        EXPECT_NEAR(inner(s_t(t), n) * std::sqrt(2.0), -std::sinh(t), 1e-12);
}

TEST(ConsistentOrientation, AsymptoticNullVectorsShared) {
    const auto f1 = null_frame(minus_e1);
    const auto f2 = null_frame(V(1, 1, 1));
    EXPECT_TRUE(positively_parallel(f1.s_plus(), f2.s_minus()) ||
                positively_parallel(f1.s_minus(), f2.s_plus()));
}

TEST(ConsistentOrientation, InvariantUnderLorentz) {
    Engine g(21);
    for (int i = 0; i < 300; ++i) {
        const V a = random_unit_spacelike(g), b = random_unit_spacelike(g);
        const Mat3<double> m = random_lorentz(g, 1.0);
        EXPECT_EQ(consistently_oriented(a, b), consistently_oriented(m.apply(a), m.apply(b)));
    }
}

// Brute-force oracle: sample the hyperboloid and look for common points.
TEST(ConsistentOrientation, MatchesHalfplaneSampling) {
    Engine g(22);
    int disjoint = 0;
    for (int i = 0; i < 200; ++i) {
        const V a = random_unit_spacelike(g, 1.5), b = random_unit_spacelike(g, 1.5);
        const bool co = consistently_oriented(a, b);
        bool common = false;
        for (int k = 0; k < 4000 && !common; ++k) {
            const V p = random_hyperboloid(g, 5);
            common = inner(p, a) > 1e-9 && inner(p, b) > 1e-9;
        }
        if (co) {
            ++disjoint;
            EXPECT_FALSE(common);
        } else if (relation(a, b) == GeodesicRelation::Crossing) {
            EXPECT_TRUE(common);
        }
    }
    EXPECT_GT(disjoint, 10);
}

TEST(HalfplanesDisjoint, Examples) {
    using H = Halfplane<double>;
    const H h1 = H::from_vector(minus_e1);
    EXPECT_TRUE(halfplanes_disjoint(h1, H::from_vector(s_t(1)), true));
    const H h(V(0.3, 1, 0.2));
    const H hs = H::from_vector(h.s);
    EXPECT_TRUE(halfplanes_disjoint(hs, hs.complement(), false));
    EXPECT_FALSE(halfplanes_disjoint(hs, hs.complement(), true));
    EXPECT_FALSE(halfplanes_disjoint(hs, hs, false));
    EXPECT_FALSE(halfplanes_disjoint(hs, hs, true));
}

TEST(HalfplanesDisjoint, SignOfT) {
    using H = Halfplane<double>;
    for (double t : {-1.0, -0.1, 0.1, 1.0})
        EXPECT_EQ(halfplanes_disjoint(H::from_vector(minus_e1), H::from_vector(s_t(t)), false), t > 0);
}

TEST(Relation, Examples) {
    EXPECT_EQ(relation(minus_e1, s_t(1)), GeodesicRelation::Ultraparallel);
    EXPECT_NEAR(inner(minus_e1, s_t(1)), -std::cosh(1.0), 1e-15);
    EXPECT_EQ(relation(minus_e1, V(1, 1, 1)), GeodesicRelation::Asymptotic);
    EXPECT_EQ(relation(V(1, 0, 0), V(0, 1, 0)), GeodesicRelation::Crossing);
    EXPECT_EQ(relation(V(1, 0, 0), V(-1, 0, 0)), GeodesicRelation::Equal);
    EXPECT_EQ(relation(V(1, 0, 0), V(2, 0, 0)), GeodesicRelation::Equal);
}

TEST(Relation, RationalExact) {
    using Q = Rational;
    const Vec3<Q> a(Q(-1), Q(0), Q(0));
    EXPECT_EQ(relation(a, Vec3<Q>(Q(5, 3), Q(0), Q(4, 3))), GeodesicRelation::Ultraparallel);
    EXPECT_EQ(relation(a, Vec3<Q>(Q(1), Q(1), Q(1))), GeodesicRelation::Asymptotic);
    EXPECT_EQ(relation(a, Vec3<Q>(Q(3, 5), Q(4, 5), Q(0))), GeodesicRelation::Crossing);
}

TEST(Klein, BoundaryAbscissa) {
    EXPECT_NEAR(klein_boundary_x(Halfplane<double>::from_vector(s_t(1))), 0.761594, 1e-6);
    EXPECT_NEAR(klein_boundary_x(Halfplane<double>::from_vector(s_t(1))), std::tanh(1.0), 1e-12);
    EXPECT_EQ(klein_boundary_x(Halfplane<double>::from_vector(s_t(0))), 0.0);
    EXPECT_NEAR(klein_boundary_x(Halfplane<double>::from_vector(s_t(2))), std::tanh(2.0), 1e-12);
    EXPECT_THROW(klein_boundary_x(Halfplane<double>::from_vector(V(1, 1, 0.5))), DomainError);
}

TEST(Klein, HalfplaneSide) {
    // h(s_t) is x > tanh t in the disk; check points either side.
    const double t = 0.6;
    const auto h = Halfplane<double>::from_vector(s_t(t));
    for (double x : {-0.9, 0.0, 0.5, 0.55, 0.6, 0.9}) {
        const V v = V(x, 0, 1) / std::sqrt(1 - x * x);
        EXPECT_EQ(hp_contains(h, HPoint<double>::from_vector(v), false), x > std::tanh(t));
    }
}

TEST(PositivelyParallel, Basic) {
    EXPECT_TRUE(positively_parallel(V(1, 2, 3), V(2, 4, 6)));
    EXPECT_FALSE(positively_parallel(V(1, 2, 3), V(-1, -2, -3)));
    EXPECT_FALSE(positively_parallel(V(1, 2, 3), V(1, 2, 3.1)));
}
