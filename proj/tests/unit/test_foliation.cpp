#include <gtest/gtest.h>

#include <cmath>

#include "crooked/expr.hpp"
#include "crooked/foliation.hpp"
#include "crooked/oracle.hpp"
#include "generators.hpp"

using namespace crooked;
using namespace crooked::testing;

namespace {

using V = Vec3<double>;
using P = Point<double>;

const double kSqrt2 = std::sqrt(2.0);

// Constant coefficients a_t = sqrt(2) a, b_t = sqrt(2) b.
CoefficientPath constants(double a, double b) {
    return {Expr::constant(kSqrt2 * a), Expr::constant(kSqrt2 * b)};
}

P closed_form(double a, double b, double t) {
    return {-(a + b) * t, (a - b) * std::cosh(t), (a - b) * std::sinh(t)};
}

double max_error(const CrookedFoliation& f, double a, double b, const V& shift) {
    double err = 0;
    for (const auto& s : f.samples)
        err = std::max(err, (s.vertex - (closed_form(a, b, s.t) + shift)).max_abs_coord());
    return err;
}

}  // namespace

TEST(Expr, Grammar) {
    EXPECT_DOUBLE_EQ(Expr::parse("2")(5), 2);
    EXPECT_DOUBLE_EQ(Expr::parse("t")(1.5), 1.5);
    EXPECT_DOUBLE_EQ(Expr::parse("1 + 2*t")(3), 7);
    EXPECT_DOUBLE_EQ(Expr::parse("-t*t")(3), -9);
    EXPECT_DOUBLE_EQ(Expr::parse("exp(t)")(1), std::exp(1.0));
    EXPECT_DOUBLE_EQ(Expr::parse("cosh(t)*sinh(t) + 1")(0.5), std::cosh(0.5) * std::sinh(0.5) + 1);
    EXPECT_DOUBLE_EQ(Expr::parse("2*(1+t)")(1), 4);
    EXPECT_DOUBLE_EQ(Expr::parse("1.5e-1")(0), 0.15);
    EXPECT_EQ(Expr::parse(" exp(t) ").text(), " exp(t) ");
}

TEST(Expr, Rejects) {
    for (const char* bad : {"", "t -", "log(t)", "2 / t", "(1", "1)", "x", "t t", "exp t"})
        EXPECT_THROW(Expr::parse(bad), ParseError) << bad;
}

TEST(DirectorPath, Orthogonal) {
    const auto dp = DirectorPath::orthogonal(-1, 1);
    const V s = dp.s(0.7);
    EXPECT_NEAR(inner(s, s), 1, 1e-14);
    EXPECT_NEAR(inner(s, V(1, 0, 0)), 0, 1e-15);
    EXPECT_THROW(DirectorPath::orthogonal(1, 1), DomainError);
}

TEST(Velocity, MatchesExplicitFormula) {
    const auto dp = DirectorPath::orthogonal(-3, 3);
    const CoefficientPath cp{Expr::parse("1 + t*t"), Expr::parse("exp(t)")};
    for (double t : {-2.0, 0.0, 0.4, 2.5}) {
        const double a = 1 + t * t, b = std::exp(t);
        const V expect = V(-(a + b), (a - b) * std::sinh(t), (a - b) * std::cosh(t)) / kSqrt2;
        const V got = vertex_velocity(dp, cp, t);
        EXPECT_NEAR((got - expect).max_abs_coord(), 0, 1e-12);
    }
}

TEST(VertexPath, EqualCoefficientsGiveGeodesic) {
    const auto f = vertex_path(DirectorPath::orthogonal(-3, 3), constants(1, 1), P(0, 0, 0), 1000);
    EXPECT_EQ(f.samples.size(), 1001u);
    EXPECT_LT(max_error(f, 1, 1, V(0, 0, 0)), 1e-6);
    for (const auto& s : f.samples) {
        EXPECT_NEAR(s.vertex.x, -2 * s.t, 1e-9);
        EXPECT_NEAR(s.vertex.y, 0, 1e-12);
        EXPECT_NEAR(s.vertex.z, 0, 1e-12);
    }
}

TEST(VertexPath, UnequalCoefficients) {
    const auto f = vertex_path(DirectorPath::orthogonal(-3, 3), constants(2, 1), P(0, 0, 0), 1000);
    // p_t = (-3t, cosh t - 1, sinh t) when p_0 = 0.
    EXPECT_LT(max_error(f, 2, 1, V(0, -1, 0)), 1e-6);
}

TEST(VertexPath, FourthOrder) {
    const auto dp = DirectorPath::orthogonal(-3, 3);
    const P p0(0, 1, 0);
    const double e1 = max_error(vertex_path(dp, constants(2, 1), p0, 20), 2, 1, V(0, 0, 0));
    const double e2 = max_error(vertex_path(dp, constants(2, 1), p0, 40), 2, 1, V(0, 0, 0));
    EXPECT_GT(e1 / e2, 12);
    EXPECT_LT(e1 / e2, 20);
}

TEST(VertexPath, AnchorAndStepSplit) {
    const auto dp = DirectorPath::orthogonal(1, 2);
    const auto f = vertex_path(dp, constants(1, 1), P(5, 0, 0), 10);
    EXPECT_EQ(f.anchor, 1);
    EXPECT_EQ(f.samples.front().t, 1);
    EXPECT_EQ(f.samples.front().vertex, P(5, 0, 0));
    const auto g = vertex_path(DirectorPath::orthogonal(-1, 3), constants(1, 1), P(0, 0, 0), 8, 0.0);
    EXPECT_EQ(g.samples.size(), 9u);
    EXPECT_NEAR(g.samples[2].t, 0, 1e-15);
    EXPECT_EQ(g.samples[2].vertex, P(0, 0, 0));
    EXPECT_THROW(vertex_path(dp, constants(1, 1), P(0, 0, 0), 10, 5.0), DomainError);
}

TEST(VertexPath, RejectsNonPositiveCoefficients) {
    const auto dp = DirectorPath::orthogonal(-1, 1);
    EXPECT_THROW(vertex_path(dp, {Expr::constant(1), Expr::constant(-1)}, P(0, 0, 0), 10), DomainError);
    EXPECT_THROW(vertex_path(dp, {Expr::parse("t"), Expr::constant(1)}, P(0, 0, 0), 10), DomainError);
}

TEST(Certification, ExampleIsCertified) {
    const auto f = vertex_path(DirectorPath::orthogonal(-3, 3), constants(1, 1), P(0, 0, 0), 100);
    const auto r = certify_foliation(f);
    EXPECT_TRUE(r.passed) << r.message;
    EXPECT_TRUE(r.velocities_ok);
    EXPECT_TRUE(r.pairs_ok);
    EXPECT_EQ(r.pairs_checked, 101u * 100u / 2u);
    EXPECT_NE(r.order, 0);
}

TEST(Certification, VaryingCoefficients) {
    const CoefficientPath cp{Expr::parse("1 + t*t"), Expr::parse("exp(t)")};
    const auto f = vertex_path(DirectorPath::orthogonal(-2, 2), cp, P(1, 2, 3), 60);
    EXPECT_TRUE(certify_foliation(f).passed);
}

TEST(Certification, PerturbedPathFailsWithWitness) {
    auto f = vertex_path(DirectorPath::orthogonal(-3, 3), constants(1, 1), P(0, 0, 0), 100);
    // Push one vertex back against its velocity, past the previous leaf.
    auto& s = f.samples[50];
    s.vertex = s.vertex - s.velocity * 0.5;
    const auto r = certify_foliation(f);
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(r.velocities_ok);
    ASSERT_TRUE(r.bad_pair.has_value());
    ASSERT_TRUE(r.witness.has_value());
    const auto [i, j] = *r.bad_pair;
    const std::size_t inner = r.order > 0 ? j : i, outer = r.order > 0 ? i : j;
    EXPECT_TRUE(contains(f.leaf(inner), *r.witness, true));
    EXPECT_FALSE(contains(f.leaf(outer), *r.witness, false));
}

TEST(Certification, BadVelocityReported) {
    auto f = vertex_path(DirectorPath::orthogonal(-1, 1), constants(1, 1), P(0, 0, 0), 20);
    f.samples[7].velocity = -f.samples[7].velocity;
    const auto r = certify_foliation(f);
    EXPECT_FALSE(r.velocities_ok);
    ASSERT_TRUE(r.bad_velocity.has_value());
    EXPECT_EQ(*r.bad_velocity, 7u);
}

TEST(Locate, MidpointBetweenLeaves) {
    const auto f = vertex_path(DirectorPath::orthogonal(-2, 2), constants(1, 0.5), P(0, 0.5, 0), 40);
    const P mid = f.samples[10].vertex + (f.samples[11].vertex - f.samples[10].vertex) * 0.5;
    const auto [i, j] = locate(f, mid);
    EXPECT_EQ(i, 10u);
    EXPECT_EQ(j, 11u);
    // Direct scan agrees with the bisection.
    const auto r = certify_foliation(f);
    ASSERT_TRUE(r.passed);
    std::size_t count = 0;
    for (std::size_t k = 0; k < f.samples.size(); ++k) count += contains(f.leaf(k), mid, false) ? 1 : 0;
    if (r.order > 0)
        EXPECT_EQ(count, 11u);
    else
        EXPECT_EQ(count, f.samples.size() - 11);
}

TEST(Locate, PointOnLeafAndFarPoint) {
    const auto f = vertex_path(DirectorPath::orthogonal(-2, 2), constants(1, 1), P(0, 0, 0), 40);
    const auto [i, j] = locate(f, f.samples[20].vertex);
    EXPECT_EQ(j - i, 1u);
    EXPECT_TRUE(i == 20 || j == 20);
    EXPECT_EQ(locate(f, f.samples[20].vertex), locate(f, f.samples[20].vertex));
    EXPECT_THROW(locate(f, P(1000, 0, 0)), DomainError);
    EXPECT_THROW(locate(f, P(-1000, 0, 0)), DomainError);
}
